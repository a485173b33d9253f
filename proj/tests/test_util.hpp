#ifndef LGCAT_TEST_UTIL_HPP
#define LGCAT_TEST_UTIL_HPP

// Shared helpers for the test suite, including truncated linear-algebra
// oracles that recompute headline numbers without touching the Groebner
// engine.

#include <map>

#include "lgcat/koszul.hpp"
#include "lgcat/mf.hpp"

namespace lgcat::testutil {

inline PolyMatrix mat(const RingCtxPtr& ctx,
                      std::vector<std::vector<std::string>> rows) {
    PolyMatrix m(ctx, rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            m.at(r, c) = parse_poly(rows[r][c], ctx);
    return m;
}

inline void enumerate_monomials(std::size_t nvars, int max_deg,
                                std::vector<Monomial>& out, Monomial& cur,
                                std::size_t var, int used) {
    if (var == nvars) {
        out.push_back(cur);
        return;
    }
    for (int e = 0; e + used <= max_deg; ++e) {
        cur[var] = std::int32_t(e);
        enumerate_monomials(nvars, max_deg, out, cur, var + 1, used + e);
    }
    cur[var] = 0;
}

inline std::vector<Monomial> monomials_up_to(std::size_t nvars, int max_deg) {
    std::vector<Monomial> out;
    Monomial cur(nvars, 0);
    enumerate_monomials(nvars, max_deg, out, cur, 0, 0);
    return out;
}

// coordinates of a module vector in the basis (component, monomial)
inline std::vector<Scalar> coords(const ModVec& v, const std::vector<Monomial>& monos,
                                  const std::map<Monomial, std::size_t>& index,
                                  const Field& f) {
    std::vector<Scalar> out(v.size() * monos.size(), Scalar::zero(f));
    for (std::size_t comp = 0; comp < v.size(); ++comp)
        for (auto& t : v[comp].terms()) {
            auto it = index.find(t.mono);
            if (it == index.end()) throw MathError("oracle: monomial out of window");
            out[comp * monos.size() + it->second] = t.coeff;
        }
    return out;
}

// Degree-truncated estimate of dim ker(d_out)/im(d_in) as k-vector spaces:
// kernel inside vectors of degree <= deg, boundaries that land there counted
// exactly. Converges to the true dimension from above as deg grows.
inline std::uint64_t truncated_cohomology_dim(const PolyMatrix& d_out,
                                              const PolyMatrix& d_in, int deg) {
    const RingCtxPtr& ctx = d_out.ctx();
    const Field& f = ctx->field;
    int dmax = 0;
    for (std::size_t r = 0; r < d_out.rows(); ++r)
        for (std::size_t c = 0; c < d_out.cols(); ++c)
            dmax = std::max<int>(dmax, int(d_out.at(r, c).degree()));
    for (std::size_t r = 0; r < d_in.rows(); ++r)
        for (std::size_t c = 0; c < d_in.cols(); ++c)
            dmax = std::max<int>(dmax, int(d_in.at(r, c).degree()));

    std::vector<Monomial> src_monos = monomials_up_to(ctx->nvars(), deg);
    std::vector<Monomial> tgt_monos = monomials_up_to(ctx->nvars(), deg + dmax);
    std::map<Monomial, std::size_t> tgt_index;
    for (std::size_t i = 0; i < tgt_monos.size(); ++i) tgt_index[tgt_monos[i]] = i;

    auto image_columns = [&](const PolyMatrix& op) {
        ScalarMatrix cols;
        for (std::size_t j = 0; j < op.cols(); ++j)
            for (auto& mu : src_monos) {
                ModVec v;
                for (std::size_t i = 0; i < op.rows(); ++i)
                    v.push_back(op.at(i, j).mul_term(mu, Scalar::one(f)));
                cols.push_back(coords(v, tgt_monos, tgt_index, f));
            }
        return cols;  // rows of this ScalarMatrix are the column vectors
    };

    // kernel of d_out restricted to degree <= deg
    ScalarMatrix ker_cols = image_columns(d_out);
    std::size_t src_dim = d_out.cols() * src_monos.size();
    std::uint64_t ker_dim = src_dim - field_rank(ker_cols);

    // boundaries of degree <= deg: dim = rank(full) - rank(high-degree part)
    ScalarMatrix img_cols = image_columns(d_in);
    ScalarMatrix high;
    for (auto& col : img_cols) {
        std::vector<Scalar> h;
        for (std::size_t comp = 0; comp < d_in.rows(); ++comp)
            for (std::size_t k = 0; k < tgt_monos.size(); ++k)
                if (total_degree(tgt_monos[k]) > deg)
                    h.push_back(col[comp * tgt_monos.size() + k]);
        high.push_back(std::move(h));
    }
    std::uint64_t img_dim = field_rank(img_cols) - field_rank(high);
    return ker_dim - img_dim;
}

// Independent recomputation of stable Hom dimensions by exact truncated
// linear algebra, with a stabilization check across two window sizes.
inline std::optional<StableDims> oracle_stable_dims(const MatrixFactorization& e,
                                                    const MatrixFactorization& f,
                                                    int deg1 = 5, int deg2 = 7) {
    PolyMatrix de = hom_operator_matrix(e, f, Parity::Even);
    PolyMatrix dodd = hom_operator_matrix(e, f, Parity::Odd);
    std::uint64_t e1 = truncated_cohomology_dim(de, dodd, deg1);
    std::uint64_t e2 = truncated_cohomology_dim(de, dodd, deg2);
    std::uint64_t o1 = truncated_cohomology_dim(dodd, de, deg1);
    std::uint64_t o2 = truncated_cohomology_dim(dodd, de, deg2);
    if (e1 != e2 || o1 != o2) return std::nullopt;  // did not stabilize
    return StableDims{DimOrInfinite::of(e1), DimOrInfinite::of(o1)};
}

// Brute-force Jacobian quotient dimension truncated at a degree bound.
inline std::uint64_t jacobian_dim_truncated(const Poly& f, int deg) {
    const RingCtxPtr& ctx = f.ctx();
    const Field& fld = ctx->field;
    std::vector<Monomial> monos = monomials_up_to(ctx->nvars(), deg);
    std::map<Monomial, std::size_t> index;
    for (std::size_t i = 0; i < monos.size(); ++i) index[monos[i]] = i;
    ScalarMatrix rows;
    for (std::size_t v = 0; v < ctx->nvars(); ++v) {
        Poly df = f.derivative(v);
        if (df.is_zero()) continue;
        for (auto& mu : monos) {
            Poly prod = df.mul_term(mu, Scalar::one(fld));
            if (prod.degree() > deg) continue;
            std::vector<Scalar> row(monos.size(), Scalar::zero(fld));
            for (auto& t : prod.terms()) row[index.at(t.mono)] = t.coeff;
            rows.push_back(std::move(row));
        }
    }
    return monos.size() - field_rank(rows);
}

} // namespace lgcat::testutil

#endif
