#ifndef LGCAT_SCALAR_HPP
#define LGCAT_SCALAR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace lgcat {

struct MathError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class FieldKind { Rationals, Prime };

// Coefficient field: Q, or F_p with p an odd prime below 2^31.
// Characteristic 2 is rejected globally (several homotopy witnesses divide by 2).
struct Field {
    FieldKind kind = FieldKind::Rationals;
    std::uint32_t p = 0;

    static Field rationals() { return Field{FieldKind::Rationals, 0}; }
    static Field prime(std::uint32_t p);

    bool operator==(const Field&) const = default;
};

bool is_prime_u32(std::uint32_t n);

// Exact field element. Over F_p the value is kept reduced to [0, p).
class Scalar {
public:
    Scalar() = default;
    static Scalar zero(const Field& f) { return from_long(f, 0); }
    static Scalar one(const Field& f) { return from_long(f, 1); }
    static Scalar from_long(const Field& f, long v);
    static Scalar from_mpz(const Field& f, const mpz_class& v);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar inv() const;
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Prints "-3", "7", "2/5" (rationals may carry a denominator; parsed
    // input is always integral since the expression grammar has no division).
    std::string str() const;

private:
    Field field_;
    mpq_class q_;           // rationals
    std::uint64_t r_ = 0;   // prime field residue

    void check_same(const Scalar& o) const;
};

} // namespace lgcat

#endif
