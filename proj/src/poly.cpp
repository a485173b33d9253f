#include "lgcat/poly.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace lgcat {

MonoOrder mono_order_from_string(const std::string& s) {
    if (s == "degrevlex") return MonoOrder::DegRevLex;
    if (s == "deglex") return MonoOrder::DegLex;
    if (s == "lex") return MonoOrder::Lex;
    throw MathError("unknown monomial order: " + s);
}

std::string mono_order_to_string(MonoOrder o) {
    switch (o) {
        case MonoOrder::DegRevLex: return "degrevlex";
        case MonoOrder::DegLex: return "deglex";
        case MonoOrder::Lex: return "lex";
    }
    return "?";
}

std::int64_t total_degree(const Monomial& m) {
    std::int64_t d = 0;
    for (auto e : m) d += e;
    return d;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += b[i];
    return r;
}

Monomial mono_div(const Monomial& b, const Monomial& a) {
    Monomial r = b;
    for (std::size_t i = 0; i < a.size(); ++i) r[i] -= a[i];
    return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

RingCtx::RingCtx(Field f, std::vector<std::string> v, MonoOrder o)
    : field(f), vars(std::move(v)), order(o) {
    std::set<std::string> seen;
    for (const auto& name : vars) {
        if (name.empty())
            throw MathError("empty variable name");
        if (!seen.insert(name).second)
            throw MathError("duplicate variable name: " + name);
    }
}

std::optional<std::size_t> RingCtx::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return i;
    return std::nullopt;
}

int RingCtx::compare(const Monomial& a, const Monomial& b) const {
    switch (order) {
        case MonoOrder::Lex:
            for (std::size_t i = 0; i < a.size(); ++i)
                if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
            return 0;
        case MonoOrder::DegLex: {
            auto da = total_degree(a), db = total_degree(b);
            if (da != db) return da > db ? 1 : -1;
            for (std::size_t i = 0; i < a.size(); ++i)
                if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
            return 0;
        }
        case MonoOrder::DegRevLex: {
            auto da = total_degree(a), db = total_degree(b);
            if (da != db) return da > db ? 1 : -1;
            for (std::size_t i = a.size(); i-- > 0;)
                if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
            return 0;
        }
    }
    return 0;
}

RingCtx RingCtx::product(const RingCtx& a, const RingCtx& b) {
    if (!(a.field == b.field))
        throw MathError("tensor product over different coefficient fields");
    std::vector<std::string> vars = a.vars;
    for (const auto& v : b.vars) {
        if (a.var_index(v))
            throw MathError("variable-name collision in tensor product: " + v);
        vars.push_back(v);
    }
    return RingCtx(a.field, std::move(vars), a.order);
}

RingCtxPtr make_ring(Field f, std::vector<std::string> vars, MonoOrder o) {
    return std::make_shared<const RingCtx>(f, std::move(vars), o);
}

Poly Poly::constant(RingCtxPtr ctx, const Scalar& c) {
    Poly p(ctx);
    if (!c.is_zero())
        p.terms_.push_back(Term{Monomial(ctx->nvars(), 0), c});
    return p;
}

Poly Poly::from_long(RingCtxPtr ctx, long v) {
    Scalar c = Scalar::from_long(ctx->field, v);
    return constant(std::move(ctx), c);
}

Poly Poly::variable(RingCtxPtr ctx, std::size_t idx) {
    Monomial m(ctx->nvars(), 0);
    m.at(idx) = 1;
    Scalar one = Scalar::one(ctx->field);
    return monomial(std::move(ctx), std::move(m), one);
}

Poly Poly::monomial(RingCtxPtr ctx, Monomial m, const Scalar& c) {
    Poly p(ctx);
    if (m.size() != ctx->nvars())
        throw MathError("exponent vector length mismatch");
    if (!c.is_zero())
        p.terms_.push_back(Term{std::move(m), c});
    return p;
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && total_degree(terms_[0].mono) == 0;
}

Scalar Poly::constant_value() const {
    for (const auto& t : terms_)
        if (total_degree(t.mono) == 0) return t.coeff;
    return Scalar::zero(ctx_->field);
}

const Term& Poly::leading() const {
    if (terms_.empty()) throw MathError("leading term of zero polynomial");
    return terms_.front();
}

std::int64_t Poly::degree() const {
    std::int64_t d = -1;
    for (const auto& t : terms_) d = std::max(d, total_degree(t.mono));
    return d;
}

std::int32_t Poly::max_exponent() const {
    std::int32_t e = 0;
    for (const auto& t : terms_)
        for (auto x : t.mono) e = std::max(e, x);
    return e;
}

Poly poly_from_sorted(RingCtxPtr ctx, std::vector<Term> terms) {
    Poly p(std::move(ctx));
    p.terms_ = std::move(terms);
    return p;
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
}

Poly Poly::operator+(const Poly& o) const {
    if (!(*ctx_ == *o.ctx_)) throw MathError("ring context mismatch");
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = ctx_->compare(terms_[i].mono, o.terms_[j].mono);
        if (c > 0) {
            out.push_back(terms_[i++]);
        } else if (c < 0) {
            out.push_back(o.terms_[j++]);
        } else {
            Scalar s = terms_[i].coeff + o.terms_[j].coeff;
            if (!s.is_zero()) out.push_back(Term{terms_[i].mono, s});
            ++i; ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
    return poly_from_sorted(ctx_, std::move(out));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::mul_term(const Monomial& m, const Scalar& c) const {
    Poly p(ctx_);
    if (c.is_zero()) return p;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        p.terms_.push_back(Term{mono_mul(t.mono, m), t.coeff * c});
    return p;
}

Poly Poly::mul_scalar(const Scalar& c) const {
    return mul_term(Monomial(ctx_->nvars(), 0), c);
}

Poly Poly::operator*(const Poly& o) const {
    if (!(*ctx_ == *o.ctx_)) throw MathError("ring context mismatch");
    auto cmp = [this](const Monomial& a, const Monomial& b) {
        return ctx_->compare(a, b) > 0;
    };
    std::map<Monomial, Scalar, decltype(cmp)> acc(cmp);
    for (const auto& a : terms_) {
        for (const auto& b : o.terms_) {
            Monomial m = mono_mul(a.mono, b.mono);
            Scalar c = a.coeff * b.coeff;
            auto it = acc.find(m);
            if (it == acc.end())
                acc.emplace(std::move(m), c);
            else
                it->second = it->second + c;
        }
    }
    std::vector<Term> out;
    for (auto& [m, c] : acc)
        if (!c.is_zero()) out.push_back(Term{m, c});
    return poly_from_sorted(ctx_, std::move(out));
}

Poly Poly::pow(std::uint32_t e) const {
    Poly r = Poly::from_long(ctx_, 1);
    Poly base = *this;
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

bool Poly::operator==(const Poly& o) const {
    if (!(*ctx_ == *o.ctx_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    return true;
}

Poly Poly::derivative(std::size_t var) const {
    Poly p(ctx_);
    std::vector<Term> out;
    for (const auto& t : terms_) {
        if (t.mono[var] == 0) continue;
        Scalar c = t.coeff * Scalar::from_long(ctx_->field, t.mono[var]);
        if (c.is_zero()) continue;
        Monomial m = t.mono;
        m[var] -= 1;
        out.push_back(Term{std::move(m), c});
    }
    // lowering an exponent can reorder terms
    std::sort(out.begin(), out.end(), [this](const Term& a, const Term& b) {
        return ctx_->compare(a.mono, b.mono) > 0;
    });
    return poly_from_sorted(ctx_, std::move(out));
}

Poly Poly::substitute(const std::map<std::string, Poly>& images,
                      const RingCtxPtr& target) const {
    if (!(ctx_->field == target->field))
        throw MathError("substitute: coefficient field mismatch");
    Poly out = Poly::zero(target);
    for (const auto& t : terms_) {
        Poly term = Poly::constant(target, t.coeff);
        for (std::size_t v = 0; v < t.mono.size(); ++v) {
            if (t.mono[v] == 0) continue;
            auto it = images.find(ctx_->vars[v]);
            if (it == images.end())
                throw MathError("substitute: no image for variable " + ctx_->vars[v]);
            if (!(*it->second.ctx() == *target))
                throw MathError("substitute: image not in target context");
            term = term * it->second.pow(static_cast<std::uint32_t>(t.mono[v]));
        }
        out = out + term;
    }
    return out;
}

Poly Poly::embed(const RingCtxPtr& target) const {
    if (!(ctx_->field == target->field))
        throw MathError("embed: coefficient field mismatch");
    std::vector<std::size_t> map(ctx_->nvars());
    for (std::size_t i = 0; i < ctx_->nvars(); ++i) {
        auto idx = target->var_index(ctx_->vars[i]);
        if (!idx) throw MathError("embed: variable missing in target: " + ctx_->vars[i]);
        map[i] = *idx;
    }
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m(target->nvars(), 0);
        for (std::size_t i = 0; i < t.mono.size(); ++i) m[map[i]] = t.mono[i];
        out.push_back(Term{std::move(m), t.coeff});
    }
    std::sort(out.begin(), out.end(), [&target](const Term& a, const Term& b) {
        return target->compare(a.mono, b.mono) > 0;
    });
    return poly_from_sorted(target, std::move(out));
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const Term& t = terms_[i];
        std::string c = t.coeff.str();
        bool neg = !c.empty() && c[0] == '-';
        if (neg) c = c.substr(1);
        if (i == 0)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::string mono;
        for (std::size_t v = 0; v < t.mono.size(); ++v) {
            if (t.mono[v] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += ctx_->vars[v];
            if (t.mono[v] != 1) mono += "^" + std::to_string(t.mono[v]);
        }
        if (mono.empty()) {
            out += c;
        } else if (c == "1") {
            out += mono;
        } else {
            out += c + "*" + mono;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// parser

namespace {

struct Parser {
    const std::string& text;
    const RingCtxPtr& ctx;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) { ++pos; return true; }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

    mpz_class parse_integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start) fail("expected integer literal");
        return mpz_class(text.substr(start, pos - start));
    }

    Poly parse_sum() {
        skip_ws();
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        Poly acc = parse_product();
        if (neg) acc = -acc;
        for (;;) {
            skip_ws();
            if (eat('+')) acc = acc + parse_product();
            else if (eat('-')) acc = acc - parse_product();
            else return acc;
        }
    }

    Poly parse_product() {
        Poly acc = parse_power();
        while (eat('*')) acc = acc * parse_power();
        return acc;
    }

    Poly parse_power() {
        Poly base = parse_atom();
        if (eat('^')) {
            mpz_class e = parse_integer();
            if (e > 1000000) fail("exponent too large");
            return base.pow(static_cast<std::uint32_t>(e.get_ui()));
        }
        return base;
    }

    Poly parse_atom() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of expression");
        char c = text[pos];
        if (c == '-') {
            ++pos;
            return -parse_power();
        }
        if (c == '(') {
            ++pos;
            Poly p = parse_sum();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class v = parse_integer();
            return Poly::constant(ctx, Scalar::from_mpz(ctx->field, v));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            ++pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
            std::string name = text.substr(start, pos - start);
            auto idx = ctx->var_index(name);
            if (!idx) {
                pos = start;
                fail("unknown variable '" + name + "'");
            }
            return Poly::variable(ctx, *idx);
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

} // namespace

Poly parse_poly(const std::string& text, const RingCtxPtr& ctx) {
    Parser p{text, ctx};
    Poly result = p.parse_sum();
    p.skip_ws();
    if (p.pos != text.size())
        throw ParseError("trailing input", p.pos);
    return result;
}

} // namespace lgcat
