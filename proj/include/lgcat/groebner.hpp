#ifndef LGCAT_GROEBNER_HPP
#define LGCAT_GROEBNER_HPP

#include <cstdint>
#include <optional>
#include <utility>

#include "lgcat/matrix.hpp"

namespace lgcat {

struct ResourceCapExceeded : MathError {
    using MathError::MathError;
};

struct GBOptions {
    std::size_t max_pairs = 500000;
    std::size_t max_basis = 50000;
};

// Element of a free module B^rank, as a column of polynomials.
using ModVec = std::vector<Poly>;

bool modvec_is_zero(const ModVec& v);
ModVec modvec_add(const ModVec& a, const ModVec& b);
ModVec modvec_sub(const ModVec& a, const ModVec& b);
ModVec modvec_mul_term(const ModVec& a, const Monomial& m, const Scalar& c);

// Reduced Groebner basis of a submodule of B^rank for the position-over-term
// order (component first, lower index greater; ring order inside a component).
class GroebnerBasis {
public:
    struct Lead {
        std::size_t comp;
        Monomial mono;
    };

    static GroebnerBasis compute(const std::vector<ModVec>& gens, std::size_t rank,
                                 RingCtxPtr ctx, const GBOptions& opts = {},
                                 bool use_product_criterion = true);

    std::size_t rank() const { return rank_; }
    const RingCtxPtr& ring() const { return ctx_; }
    const std::vector<ModVec>& generators() const { return gens_; }
    const std::vector<Lead>& leads() const { return leads_; }

    // Remainder of multivariate division; fully reduced (no term of the
    // result is divisible by a leading term of the basis).
    ModVec normal_form(const ModVec& v) const;
    bool contains(const ModVec& v) const { return modvec_is_zero(normal_form(v)); }

private:
    RingCtxPtr ctx_;
    std::size_t rank_ = 0;
    std::vector<ModVec> gens_;
    std::vector<Lead> leads_;
};

// Groebner basis of the graph module {(M·a, a)} in B^(m+n); the top block is
// eliminated by the position-over-term order, so zero-top elements give the
// syzygies of the columns of M and division certificates solve M·x = b.
class AugmentedGB {
public:
    AugmentedGB(const PolyMatrix& M, const GBOptions& opts = {});

    // generating set of the kernel of M acting on columns
    std::vector<ModVec> syzygies() const;

    // one exact witness of M·x = b, or nullopt with a non-membership certificate
    std::optional<ModVec> solve(const ModVec& b) const;

private:
    std::size_t top_, bottom_;
    GroebnerBasis gb_;
};

std::optional<ModVec> solve_linear(const PolyMatrix& M, const ModVec& b,
                                   const GBOptions& opts = {});
std::vector<ModVec> syzygy_generators(const PolyMatrix& M, const GBOptions& opts = {});

struct DimOrInfinite {
    bool finite = true;
    std::uint64_t dim = 0;

    static DimOrInfinite infinite() { return DimOrInfinite{false, 0}; }
    static DimOrInfinite of(std::uint64_t d) { return DimOrInfinite{true, d}; }
    bool operator==(const DimOrInfinite&) const = default;
    std::string str() const { return finite ? std::to_string(dim) : "INFINITE"; }
};

// Field dimension of B^m / (columns of presentation), by counting standard
// monomials of the leading-term module.
DimOrInfinite quotient_k_dim(const PolyMatrix& presentation, const GBOptions& opts = {});

// Same quotient with an explicit standard-monomial basis and a coordinate map;
// only available when the dimension is finite.
class QuotientBasis {
public:
    QuotientBasis(const PolyMatrix& presentation, const GBOptions& opts = {});

    bool finite() const { return finite_; }
    const std::vector<std::pair<std::size_t, Monomial>>& basis() const { return basis_; }
    std::uint64_t dim() const { return basis_.size(); }

    // coordinates of the class of v in the standard-monomial basis
    std::vector<Scalar> coordinates(const ModVec& v) const;

private:
    GroebnerBasis gb_;
    bool finite_ = true;
    std::vector<std::pair<std::size_t, Monomial>> basis_;
};

} // namespace lgcat

#endif
