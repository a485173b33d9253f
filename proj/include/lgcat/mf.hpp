#ifndef LGCAT_MF_HPP
#define LGCAT_MF_HPP

#include "lgcat/groebner.hpp"

namespace lgcat {

// A ring together with a chosen potential.
struct LGPair {
    RingCtxPtr ctx;
    Poly f;

    LGPair() = default;
    LGPair(RingCtxPtr c, Poly potential);
    bool operator==(const LGPair& o) const {
        return *ctx == *o.ctx && f == o.f;
    }
};

struct IdentityViolation : MathError {
    std::size_t row, col;
    std::string offending;
    IdentityViolation(const std::string& what, std::size_t r, std::size_t c,
                      const Poly& diff);
};

// (d0, d1) with d1·d0 = d0·d1 = f·Id, exactly. d0: rank0 -> rank1,
// d1: rank1 -> rank0.
struct MatrixFactorization {
    LGPair lg;
    std::size_t rank0 = 0, rank1 = 0;
    PolyMatrix d0;  // rank1 x rank0
    PolyMatrix d1;  // rank0 x rank1
};

MatrixFactorization new_mf(const LGPair& lg, PolyMatrix d0, PolyMatrix d1);
MatrixFactorization unit_mf(const RingCtxPtr& ctx);
MatrixFactorization shift_mf(const MatrixFactorization& e);

enum class Parity { Even, Odd };

// Homogeneous element of the Z/2-graded Hom complex between two
// factorizations. Even: (t0: E0->F0, t1: E1->F1); odd: (s0: E0->F1,
// s1: E1->F0).
struct GradedHom {
    const MatrixFactorization* source = nullptr;
    const MatrixFactorization* target = nullptr;
    Parity parity = Parity::Even;
    PolyMatrix a0;  // t0 (even) or s0 (odd)
    PolyMatrix a1;  // t1 (even) or s1 (odd)
};

GradedHom make_hom(const MatrixFactorization& src, const MatrixFactorization& tgt,
                   Parity p, PolyMatrix a0, PolyMatrix a1);
GradedHom identity_hom(const MatrixFactorization& e);
GradedHom zero_hom(const MatrixFactorization& src, const MatrixFactorization& tgt,
                   Parity p);

// d(t) = t∘δ − (−1)^deg(t) δ∘t; flips parity, squares to zero.
GradedHom hom_diff(const GradedHom& t);
bool is_closed(const GradedHom& t);
GradedHom hom_compose(const GradedHom& g, const GradedHom& f);  // g ∘ f
GradedHom hom_add(const GradedHom& a, const GradedHom& b);
GradedHom hom_scale(const GradedHom& a, const Scalar& c);
bool hom_is_zero(const GradedHom& t);

// Cone of a closed even morphism t: E -> F; graded pieces F ⊕ shift(E).
MatrixFactorization cone_mf(const GradedHom& t);
GradedHom cone_inclusion(const MatrixFactorization& cone, const GradedHom& t);
GradedHom cone_projection(const MatrixFactorization& cone, const GradedHom& t,
                          const MatrixFactorization& shifted_source);

struct StableDims {
    DimOrInfinite even, odd;
    bool operator==(const StableDims&) const = default;
};

// Field dimensions of the even/odd cohomology of Hom(E, F).
StableDims hom_cohomology_dims(const MatrixFactorization& e,
                               const MatrixFactorization& f,
                               const GBOptions& opts = {});

// Null-homotopy certificate: s of opposite parity with hom_diff(s) = t,
// or nullopt (a non-membership certificate from the linear solver).
std::optional<GradedHom> null_homotopy_witness(const GradedHom& t,
                                               const GBOptions& opts = {});
bool is_null_homotopic(const GradedHom& t, const GBOptions& opts = {});

// External tensor product over disjoint variable sets; potential f ⊞ g.
// Even piece E0F0 ⊕ E1F1, odd piece E1F0 ⊕ E0F1, Kronecker bases.
MatrixFactorization box_product(const MatrixFactorization& e,
                                const MatrixFactorization& f);

MatrixFactorization base_change_mf(const MatrixFactorization& e,
                                   const std::map<std::string, Poly>& images,
                                   const RingCtxPtr& target);

// Generating set of the closed morphisms E -> F of the given parity
// (kernel of the Hom-complex differential).
std::vector<GradedHom> closed_hom_generators(const MatrixFactorization& e,
                                             const MatrixFactorization& f,
                                             Parity p, const GBOptions& opts = {});

// Flattened matrices of the Hom-complex differential, used for cohomology
// and witness searches. Even homs flatten as (t0 row-major, then t1).
PolyMatrix hom_operator_matrix(const MatrixFactorization& e,
                               const MatrixFactorization& f, Parity source_parity);
ModVec flatten_hom(const GradedHom& t);
GradedHom unflatten_hom(const MatrixFactorization& src, const MatrixFactorization& tgt,
                        Parity p, const ModVec& v);

} // namespace lgcat

#endif
