#ifndef LGCAT_POLY_HPP
#define LGCAT_POLY_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lgcat/scalar.hpp"

namespace lgcat {

enum class MonoOrder { DegRevLex, DegLex, Lex };

MonoOrder mono_order_from_string(const std::string& s);
std::string mono_order_to_string(MonoOrder o);

// Exponent vector; length always equals the number of ring variables.
using Monomial = std::vector<std::int32_t>;

std::int64_t total_degree(const Monomial& m);
bool mono_divides(const Monomial& a, const Monomial& b);      // a | b
Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& b, const Monomial& a);      // b / a, requires a | b
Monomial mono_lcm(const Monomial& a, const Monomial& b);

// Polynomial ring over an exact field with named variables and a monomial order.
struct RingCtx {
    Field field;
    std::vector<std::string> vars;
    MonoOrder order = MonoOrder::DegRevLex;

    RingCtx() = default;
    RingCtx(Field f, std::vector<std::string> v, MonoOrder o = MonoOrder::DegRevLex);

    std::size_t nvars() const { return vars.size(); }
    std::optional<std::size_t> var_index(const std::string& name) const;

    // strict: returns >0 if a > b, <0 if a < b, 0 if equal
    int compare(const Monomial& a, const Monomial& b) const;

    bool operator==(const RingCtx&) const = default;

    // Tensor product ring: variables of a followed by variables of b.
    // Throws on a variable-name collision or field mismatch.
    static RingCtx product(const RingCtx& a, const RingCtx& b);
};

using RingCtxPtr = std::shared_ptr<const RingCtx>;
RingCtxPtr make_ring(Field f, std::vector<std::string> vars,
                     MonoOrder o = MonoOrder::DegRevLex);

struct Term {
    Monomial mono;
    Scalar coeff;
};

// Sparse multivariate polynomial; terms sorted descending in the ring order,
// no zero coefficients stored.
class Poly {
public:
    Poly() = default;
    explicit Poly(RingCtxPtr ctx) : ctx_(std::move(ctx)) {}

    static Poly zero(RingCtxPtr ctx) { return Poly(std::move(ctx)); }
    static Poly constant(RingCtxPtr ctx, const Scalar& c);
    static Poly from_long(RingCtxPtr ctx, long v);
    static Poly variable(RingCtxPtr ctx, std::size_t idx);
    static Poly monomial(RingCtxPtr ctx, Monomial m, const Scalar& c);

    const RingCtxPtr& ctx() const { return ctx_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // constant term as a scalar (zero scalar if absent); requires a ctx
    Scalar constant_value() const;

    const Term& leading() const;
    std::int64_t degree() const;              // total degree, -1 for zero
    std::int32_t max_exponent() const;        // largest single exponent

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly mul_term(const Monomial& m, const Scalar& c) const;
    Poly mul_scalar(const Scalar& c) const;
    Poly pow(std::uint32_t e) const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly derivative(std::size_t var) const;

    // Ring-homomorphism evaluation. images maps source variable name to a
    // polynomial; all images must share one target context. Every variable
    // actually used in the polynomial must have an image.
    Poly substitute(const std::map<std::string, Poly>& images,
                    const RingCtxPtr& target) const;

    // Reinterpret in a larger ring; source variables map to target variables
    // of the same name. Throws if a used variable is missing in the target.
    Poly embed(const RingCtxPtr& target) const;

    std::string str() const;

private:
    RingCtxPtr ctx_;
    std::vector<Term> terms_;

    void insert_term(const Monomial& m, const Scalar& c);
    friend Poly poly_from_sorted(RingCtxPtr, std::vector<Term>);
};

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

// Grammar: integer literals (optional sign), identifiers [a-zA-Z][a-zA-Z0-9_]*,
// operators + - * ^ and parentheses; ^ binds tightest, then *, then + -;
// exponents are nonnegative integer literals; no implicit multiplication.
Poly parse_poly(const std::string& text, const RingCtxPtr& ctx);

} // namespace lgcat

#endif
