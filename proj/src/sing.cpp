#include "lgcat/sing.hpp"

namespace lgcat {

StableDims stable_hom_dims(const KoszulModule& m, const KoszulModule& n,
                           const GBOptions& opts) {
    if (!(m.lg == n.lg)) throw MathError("stable_hom_dims: different LG pairs");
    Fold fm = fold(m), fn = fold(n);
    return hom_cohomology_dims(fm.mf, fn.mf, opts);
}

PerfectCertificate is_perfect(const KoszulModule& m, const GBOptions& opts) {
    PerfectCertificate cert;
    cert.folded = std::make_shared<MatrixFactorization>(fold(m).mf);
    GradedHom id = identity_hom(*cert.folded);
    cert.witness = null_homotopy_witness(id, opts);
    cert.perfect = cert.witness.has_value();
    return cert;
}

UTorsionResult u_torsion_order_point(const KoszulModule& m, int window) {
    AuModule x = twisted_E(m, window);
    UTorsionResult res;
    res.max_tested = window;
    for (int n = 1; n <= window; ++n) {
        // solve D s + s D = u^n for s_k: level k -> k + 2n − 1, on all levels
        // whose equation is fully inside the stored window
        int s_lo = x.lo, s_hi = x.hi - (2 * n - 1);
        if (s_hi < s_lo) break;
        auto un_at = [&](int k) {
            PolyMatrix p = PolyMatrix::identity(x.ctx, x.rank(k));
            for (int i = 0; i < n; ++i) p = x.umat(k + 2 * i) * p;
            return p;
        };
        // flatten the unknowns: entries of s_k in level order, row-major
        std::vector<std::size_t> offset;
        std::size_t nvars = 0;
        for (int k = s_lo; k <= s_hi; ++k) {
            offset.push_back(nvars);
            nvars += x.rank(k + 2 * n - 1) * x.rank(k);
        }
        auto var_of = [&](int k, std::size_t r, std::size_t c) {
            return offset[std::size_t(k - s_lo)] + r * x.rank(k) + c;
        };
        Field fld = x.ctx->field;
        ScalarMatrix rows;
        std::vector<Scalar> rhs;
        for (int k = s_lo; k <= x.hi - 2 * n; ++k) {
            ScalarMatrix d_k = to_scalar_matrix(x.dmat(k));
            ScalarMatrix d_top = to_scalar_matrix(x.dmat(k + 2 * n - 1));
            ScalarMatrix target = to_scalar_matrix(un_at(k));
            std::size_t out_rows = x.rank(k + 2 * n), in_cols = x.rank(k);
            for (std::size_t r = 0; r < out_rows; ++r)
                for (std::size_t c = 0; c < in_cols; ++c) {
                    std::vector<Scalar> row(nvars, Scalar::zero(fld));
                    // (d_top · s_k)[r][c] = Σ_t d_top[r][t] s_k[t][c]
                    for (std::size_t t = 0; t < x.rank(k + 2 * n - 1); ++t)
                        row[var_of(k, t, c)] = row[var_of(k, t, c)] + d_top[r][t];
                    // (s_{k+1} · d_k)[r][c] = Σ_t s_{k+1}[r][t] d_k[t][c]
                    if (k + 1 <= s_hi)
                        for (std::size_t t = 0; t < x.rank(k + 1); ++t) {
                            std::size_t v =
                                offset[std::size_t(k + 1 - s_lo)] + r * x.rank(k + 1) + t;
                            row[v] = row[v] + d_k[t][c];
                        }
                    rows.push_back(std::move(row));
                    rhs.push_back(target[r][c]);
                }
        }
        if (nvars == 0) {
            bool zero = true;
            for (auto& s : rhs) zero = zero && s.is_zero();
            if (zero) {
                res.found = true;
                res.order = n;
                return res;
            }
            continue;
        }
        if (field_solve(std::move(rows), std::move(rhs))) {
            res.found = true;
            res.order = n;
            return res;
        }
    }
    return res;
}

DimOrInfinite milnor_number(const Poly& f, const GBOptions& opts) {
    const RingCtxPtr& ctx = f.ctx();
    if (!ctx) throw MathError("milnor_number: polynomial without a ring");
    const Field& fld = ctx->field;
    if (fld.kind == FieldKind::Prime && std::int64_t(fld.p) <= f.degree())
        throw MathError("milnor_number: characteristic must exceed the total degree");
    PolyMatrix jac(ctx, 1, ctx->nvars());
    for (std::size_t v = 0; v < ctx->nvars(); ++v) jac.at(0, v) = f.derivative(v);
    return quotient_k_dim(jac, opts);
}

TSReport thom_sebastiani_check(const Poly& f, const Poly& g,
                               const MatrixFactorization* ef,
                               const MatrixFactorization* eg,
                               const GBOptions& opts) {
    TSReport rep;
    rep.mu_f = milnor_number(f, opts);
    rep.mu_g = milnor_number(g, opts);
    if (!rep.mu_f.finite || !rep.mu_g.finite)
        throw MathError("thom_sebastiani_check: non-isolated input");
    RingCtxPtr prod =
        std::make_shared<const RingCtx>(RingCtx::product(*f.ctx(), *g.ctx()));
    rep.mu_sum = milnor_number(f.embed(prod) + g.embed(prod), opts);
    rep.multiplicative =
        rep.mu_sum.finite && rep.mu_sum.dim == rep.mu_f.dim * rep.mu_g.dim;
    if (ef && eg) {
        StableDims a = hom_cohomology_dims(*ef, *ef, opts);
        StableDims b = hom_cohomology_dims(*eg, *eg, opts);
        MatrixFactorization box = box_product(*ef, *eg);
        rep.kunneth_direct = hom_cohomology_dims(box, box, opts);
        if (a.even.finite && a.odd.finite && b.even.finite && b.odd.finite) {
            rep.kunneth_expected.even =
                DimOrInfinite::of(a.even.dim * b.even.dim + a.odd.dim * b.odd.dim);
            rep.kunneth_expected.odd =
                DimOrInfinite::of(a.even.dim * b.odd.dim + a.odd.dim * b.even.dim);
            rep.kunneth_ok = rep.kunneth_direct == rep.kunneth_expected;
        } else {
            rep.kunneth_ok = false;
        }
    }
    return rep;
}

SingReport point_case_report(const Field& field, int window) {
    RingCtxPtr pt = make_ring(field, {});
    KoszulModule triv = trivial_koszul(pt);
    SingReport rep;
    rep.window = window;
    rep.stable_end = stable_hom_dims(triv, triv);
    rep.perfect = is_perfect(triv).perfect;
    rep.au_pattern_ok = true;
    for (auto [deg, dim] : rhom_trivial_dims(triv, window)) {
        std::uint64_t expect = (deg >= 0 && deg % 2 == 0) ? 1 : 0;
        if (dim != expect) rep.au_pattern_ok = false;
    }
    UTorsionResult tor = u_torsion_order_point(triv, window);
    rep.torsion_free_ok = !tor.found;
    rep.notes.push_back("window " + std::to_string(window) +
                        "; torsion tested up to order " +
                        std::to_string(tor.max_tested));
    if (rep.perfect && !(rep.stable_end == StableDims{DimOrInfinite::of(0),
                                                      DimOrInfinite::of(0)}))
        rep.notes.push_back("INCONSISTENT: perfect but nonzero stable End");
    return rep;
}

} // namespace lgcat
