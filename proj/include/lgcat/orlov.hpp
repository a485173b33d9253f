#ifndef LGCAT_ORLOV_HPP
#define LGCAT_ORLOV_HPP

#include "lgcat/koszul.hpp"

namespace lgcat {

// Folding of a Koszul dg-module to a matrix factorization: even piece is the
// sum of even-degree levels (ascending), odd piece the odd-degree levels,
// total differential δ = d + h. The layout records where each level landed.
struct Fold {
    MatrixFactorization mf;
    std::vector<int> even_degs, odd_degs;      // degrees in block order
    std::vector<std::size_t> even_off, odd_off;  // column offsets per degree
};

Fold fold(const KoszulModule& m);

// A collection of maps M^n -> M^{n+deg} of one degree, folded into a single
// graded endomorphism of fold(M). maps[n - m.lo] covers the window; shapes
// rank(n+deg) x rank(n), target degrees outside the window must be absent.
GradedHom fold_degree_map(const Fold& fm, const KoszulModule& m,
                          const std::vector<PolyMatrix>& maps, int deg);

// Strict monoidality of folding: fold(M ⊞ N) equals fold(M) ⊠ fold(N) after
// the canonical permutation sorting basis vectors by (deg in M, deg in N,
// index in M, index in N); exact matrix equality, no residual signs.
bool fold_monoidality_check(const KoszulModule& m, const KoszulModule& n);

struct ContractionInvalid : MathError {
    using MathError::MathError;
};

struct ContractionWitness {
    GradedHom homotopy;  // H with δH + Hδ = Id on fold(M)
    int nilpotence = 0;  // least n with (hk + kh)^n = 0
};

// Turns a contraction k of the underlying complex (dk + kd = Id, degree −1)
// into an explicit null-homotopy of the identity of fold(M): u = hk + kh is
// nilpotent and H = Σ_{i<n} (−1)^i fold(k)∘fold(u)^i telescopes to a
// contraction. The certificate δH + Hδ = Id is re-checked before returning.
ContractionWitness contraction_witness(const Fold& fm, const KoszulModule& m,
                                       const std::vector<PolyMatrix>& k);

struct PeriodicityNotReached : MathError {
    using MathError::MathError;
};

// Eisenbud stabilization: from a presentation of a module over B/(f),
// follow the free resolution over the hypersurface ring until it becomes
// 2-periodic, and return the matrix factorization generating the tail.
// A free module stabilizes to the zero factorization. cap < 0 means the
// default bound 2·(number of variables) + 4.
MatrixFactorization stabilize(const LGPair& lg, const PolyMatrix& presentation,
                              int cap = -1, const GBOptions& opts = {});

// Homotopy-equivalence certificate: searches the closed-morphism generators
// E -> F (and small sums of them) for a φ whose cone is contractible, which
// in the homotopy category is exactly invertibility of φ.
bool homotopy_equivalent_cert(const MatrixFactorization& e,
                              const MatrixFactorization& f,
                              const GBOptions& opts = {});

} // namespace lgcat

#endif
