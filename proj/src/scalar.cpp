#include "lgcat/scalar.hpp"

namespace lgcat {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

Field Field::prime(std::uint32_t p) {
    if (p == 2)
        throw MathError("characteristic 2 is not supported");
    if (p >= (1u << 31) || !is_prime_u32(p))
        throw MathError("modulus must be a prime below 2^31, got " + std::to_string(p));
    return Field{FieldKind::Prime, p};
}

namespace {

std::uint64_t mod_pow_inv(std::uint64_t a, std::uint32_t p) {
    // extended Euclid on (a, p), a in [1, p)
    std::int64_t t = 0, newt = 1;
    std::int64_t r = p, newr = static_cast<std::int64_t>(a);
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt; newt = tmp;
        tmp = r - q * newr;
        r = newr; newr = tmp;
    }
    if (r != 1) throw MathError("division by zero divisor in prime field");
    if (t < 0) t += p;
    return static_cast<std::uint64_t>(t);
}

} // namespace

Scalar Scalar::from_long(const Field& f, long v) {
    Scalar s;
    s.field_ = f;
    if (f.kind == FieldKind::Rationals) {
        s.q_ = v;
    } else {
        long m = v % static_cast<long>(f.p);
        if (m < 0) m += f.p;
        s.r_ = static_cast<std::uint64_t>(m);
    }
    return s;
}

Scalar Scalar::from_mpz(const Field& f, const mpz_class& v) {
    Scalar s;
    s.field_ = f;
    if (f.kind == FieldKind::Rationals) {
        s.q_ = v;
    } else {
        mpz_class m = v % f.p;
        if (m < 0) m += f.p;
        s.r_ = m.get_ui();
    }
    return s;
}

bool Scalar::is_zero() const {
    return field_.kind == FieldKind::Rationals ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
    return field_.kind == FieldKind::Rationals ? q_ == 1 : r_ == 1;
}

void Scalar::check_same(const Scalar& o) const {
    if (!(field_ == o.field_))
        throw MathError("scalar field mismatch");
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (field_.kind == FieldKind::Rationals)
        s.q_ = -q_;
    else if (r_ != 0)
        s.r_ = field_.p - r_;
    return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    Scalar s = *this;
    if (field_.kind == FieldKind::Rationals)
        s.q_ += o.q_;
    else
        s.r_ = (r_ + o.r_) % field_.p;
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    Scalar s = *this;
    if (field_.kind == FieldKind::Rationals) {
        s.q_ *= o.q_;
        s.q_.canonicalize();
    } else {
        s.r_ = (r_ * o.r_) % field_.p;
    }
    return s;
}

Scalar Scalar::inv() const {
    Scalar s = *this;
    if (field_.kind == FieldKind::Rationals) {
        if (q_ == 0) throw MathError("division by zero");
        s.q_ = 1 / q_;
    } else {
        if (r_ == 0) throw MathError("division by zero");
        s.r_ = mod_pow_inv(r_, field_.p);
    }
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

bool Scalar::operator==(const Scalar& o) const {
    if (!(field_ == o.field_)) return false;
    return field_.kind == FieldKind::Rationals ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
    if (field_.kind == FieldKind::Rationals)
        return q_.get_str();
    return std::to_string(r_);
}

} // namespace lgcat
