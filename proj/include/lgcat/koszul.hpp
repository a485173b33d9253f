#ifndef LGCAT_KOSZUL_HPP
#define LGCAT_KOSZUL_HPP

#include <map>

#include "lgcat/mf.hpp"

namespace lgcat {

// Strict dg-module over the Koszul algebra K(B, f): a bounded complex
// (E, d) of free modules with a degree −1 operator h satisfying d² = 0,
// h² = 0, dh + hd = f·Id. Cohomological grading; d raises degree.
struct KoszulModule {
    LGPair lg;
    int lo = 0;
    int hi = -1;  // empty window when hi < lo
    std::vector<std::size_t> ranks;  // ranks[n - lo]
    std::vector<PolyMatrix> d;       // d[n - lo]: E^n -> E^{n+1}
    std::vector<PolyMatrix> h;       // h[n - lo]: E^n -> E^{n-1}

    std::size_t rank(int n) const {
        return n < lo || n > hi ? 0 : ranks[std::size_t(n - lo)];
    }
    // Accessors defined for every degree; out-of-window maps have empty shape.
    PolyMatrix dmat(int n) const;
    PolyMatrix hmat(int n) const;
    int width() const { return hi < lo ? 0 : hi - lo + 1; }
};

KoszulModule new_koszul(const LGPair& lg, int lo, std::vector<std::size_t> ranks,
                        std::vector<PolyMatrix> d, std::vector<PolyMatrix> h);
KoszulModule koszul_algebra(const LGPair& lg);
KoszulModule trivial_koszul(const RingCtxPtr& ctx);  // rank 1 in degree 0, d = h = 0

// Restriction of scalars along B -> K(B, f): same complex, h dropped,
// potential set to 0.
KoszulModule forget(const KoszulModule& m);

// External convolution over disjoint variable sets: underlying complex is the
// tensor product with Koszul signs, h = h_M ⊗ 1 ± 1 ⊗ h_N. Degree-n summands
// ordered by the degree of the first factor, ascending; Kronecker bases.
KoszulModule convolve_ext(const KoszulModule& m, const KoszulModule& n);

// Action of a point-case module (zero-variable ring, zero potential) on M;
// the special case of convolve_ext landing back over M's ring.
KoszulModule act_point(const KoszulModule& f, const KoszulModule& m);

// K(A, 0) ⊞ M, the pull-push along the zero locus inclusion; degree-n rank
// is rank_n + rank_{n+1}, summands ordered (ε ⊗ E^{n+1}, 1 ⊗ E^n).
KoszulModule pull_push(const KoszulModule& m);

// Free rank-n telescope over (field, 0): window [−2n+1, 0], rank 1 in each
// degree, d and h the identity out of even degrees and zero out of odd ones.
KoszulModule telescope(const RingCtxPtr& point_ctx, int n);

// (M[k])^n = M^{n+k}; d and h are negated when k is odd.
KoszulModule shift_koszul(const KoszulModule& m, int k);

// Degree-0 strict morphism: per-degree matrices commuting with both d and h.
struct KoszulHom {
    const KoszulModule* source = nullptr;
    const KoszulModule* target = nullptr;
    std::vector<PolyMatrix> comps;  // comps[n - lo]: M^n -> N^n, window = union
    int lo = 0;

    PolyMatrix at(int n) const;
};

KoszulHom identity_koszul_hom(const KoszulModule& m);
bool koszul_hom_is_strict(const KoszulHom& t);  // commutes with d and h

// Cone of a strict morphism: C^n = N^n ⊕ M^{n+1}, d = [[d_N, φ],[0, −d_M]],
// h = [[h_N, 0],[0, −h_M]].
KoszulModule koszul_cone(const KoszulHom& t);

// Canonical contraction of cone(id_M): k(b, a) = (0, b), dk + kd = Id.
std::vector<PolyMatrix> cone_id_contraction(const KoszulModule& cone_of_id,
                                            const KoszulModule& m);

// Module over A[u] presented in a finite range of levels; matrices live over
// the zero-variable ring of the coefficient field.
struct AuModule {
    RingCtxPtr ctx;
    int lo = 0;
    int hi = -1;                      // stored levels lo..hi
    int report_lo = 0, report_hi = -1;  // degrees whose cohomology is exact
    std::vector<std::size_t> ranks;   // ranks[n - lo]
    std::vector<PolyMatrix> diff;     // level n -> n+1
    std::vector<PolyMatrix> u;        // level n -> n+2

    std::size_t rank(int n) const {
        return n < lo || n > hi ? 0 : ranks[std::size_t(n - lo)];
    }
    PolyMatrix dmat(int n) const;
    PolyMatrix umat(int n) const;
};

// E ⊗_A A[u] with differential d + ε; level n = ⊕_{i≥0} E^{n−2i} (basis
// ordered by i ascending), u the canonical index shift. Exact at every
// reported degree; the window only bounds the top level hi_M + 2N.
AuModule twisted_E(const KoszulModule& m, int window);

// Cohomology dimensions of twisted_E(M) per degree on its report window.
std::map<int, std::uint64_t> rhom_trivial_dims(const KoszulModule& m, int window);

struct UConeReport {
    bool ok = false;
    int lo = 0, hi = -1;  // compared degrees
    std::map<int, std::uint64_t> cone_dims;
    std::map<int, std::uint64_t> pullpush_dims;
};

// Compares the cone of u on twisted_E(M) with twisted_E(pull_push(M))[−1],
// degree by degree inside the safe window.
UConeReport u_cone_check(const KoszulModule& m, int window);

// Exact dense linear algebra over the coefficient field, for the point case.
using ScalarMatrix = std::vector<std::vector<Scalar>>;
ScalarMatrix to_scalar_matrix(const PolyMatrix& m);
std::size_t field_rank(ScalarMatrix a);
std::optional<std::vector<Scalar>> field_solve(ScalarMatrix a,
                                               std::vector<Scalar> b);
std::map<int, std::uint64_t> au_cohomology_dims(const AuModule& x);

} // namespace lgcat

#endif
