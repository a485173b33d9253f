#ifndef LGCAT_SING_HPP
#define LGCAT_SING_HPP

#include "lgcat/orlov.hpp"

namespace lgcat {

// Morphism dimensions in the singularity category, computed on the matrix
// factorization side through folding.
StableDims stable_hom_dims(const KoszulModule& m, const KoszulModule& n,
                           const GBOptions& opts = {});

struct PerfectCertificate {
    bool perfect = false;
    std::shared_ptr<MatrixFactorization> folded;  // owns the witness endpoints
    std::optional<GradedHom> witness;             // contraction of the identity
};

// A module is perfect (vanishes in the singularity category) iff its fold is
// contractible; decided by an exact null-homotopy search for the identity.
PerfectCertificate is_perfect(const KoszulModule& m, const GBOptions& opts = {});

struct UTorsionResult {
    bool found = false;
    int order = 0;       // least n with u^n null-homotopic, when found
    int max_tested = 0;  // verdicts above this are indeterminate
};

// Least n with u^n null-homotopic on twisted_E(M), searched within the
// window; point case only.
UTorsionResult u_torsion_order_point(const KoszulModule& m, int window);

// Jacobian-ring dimension of f; INFINITE for a non-isolated singularity.
// Positive characteristic requires p greater than the total degree of f.
DimOrInfinite milnor_number(const Poly& f, const GBOptions& opts = {});

struct TSReport {
    DimOrInfinite mu_f, mu_g, mu_sum;
    bool multiplicative = false;
    std::optional<bool> kunneth_ok;      // set when factorizations are supplied
    StableDims kunneth_direct, kunneth_expected;
};

// Thom–Sebastiani: μ(f ⊞ g) = μ(f)·μ(g) by independent computations; when
// factorizations of f and g are supplied, also checks the Künneth formula
// for the stable endomorphisms of their box product.
TSReport thom_sebastiani_check(const Poly& f, const Poly& g,
                               const MatrixFactorization* ef = nullptr,
                               const MatrixFactorization* eg = nullptr,
                               const GBOptions& opts = {});

struct SingReport {
    StableDims stable_end;
    bool perfect = false;
    bool au_pattern_ok = false;    // rhom dims of the trivial module
    bool torsion_free_ok = false;  // u not torsion on the trivial module
    int window = 0;
    std::vector<std::string> notes;
};

// The Sing(point, 0) consistency report for one coefficient field.
SingReport point_case_report(const Field& field, int window = 5);

} // namespace lgcat

#endif
