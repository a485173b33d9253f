#include "lgcat/orlov.hpp"

#include <algorithm>
#include <tuple>

namespace lgcat {

namespace {

int parity_of(int g) { return (g % 2 + 2) % 2; }

} // namespace

Fold fold(const KoszulModule& m) {
    Fold out;
    const RingCtxPtr& ctx = m.lg.ctx;
    std::size_t e_off = 0, o_off = 0;
    for (int g = m.lo; g <= m.hi; ++g) {
        if (parity_of(g) == 0) {
            out.even_degs.push_back(g);
            out.even_off.push_back(e_off);
            e_off += m.rank(g);
        } else {
            out.odd_degs.push_back(g);
            out.odd_off.push_back(o_off);
            o_off += m.rank(g);
        }
    }
    auto sizes = [&](const std::vector<int>& degs) {
        std::vector<std::size_t> s;
        for (int g : degs) s.push_back(m.rank(g));
        return s;
    };
    auto block_of = [](const std::vector<int>& degs, int g) -> std::optional<std::size_t> {
        for (std::size_t i = 0; i < degs.size(); ++i)
            if (degs[i] == g) return i;
        return std::nullopt;
    };
    BlockMatrix d0(ctx, sizes(out.odd_degs), sizes(out.even_degs));
    for (std::size_t c = 0; c < out.even_degs.size(); ++c) {
        int g = out.even_degs[c];
        if (auto r = block_of(out.odd_degs, g + 1)) d0.set(*r, c, m.dmat(g));
        if (auto r = block_of(out.odd_degs, g - 1)) d0.set(*r, c, m.hmat(g));
    }
    BlockMatrix d1(ctx, sizes(out.even_degs), sizes(out.odd_degs));
    for (std::size_t c = 0; c < out.odd_degs.size(); ++c) {
        int g = out.odd_degs[c];
        if (auto r = block_of(out.even_degs, g + 1)) d1.set(*r, c, m.dmat(g));
        if (auto r = block_of(out.even_degs, g - 1)) d1.set(*r, c, m.hmat(g));
    }
    out.mf = new_mf(m.lg, d0.assemble(), d1.assemble());
    return out;
}

GradedHom fold_degree_map(const Fold& fm, const KoszulModule& m,
                          const std::vector<PolyMatrix>& maps, int deg) {
    const RingCtxPtr& ctx = m.lg.ctx;
    Parity p = parity_of(deg) == 0 ? Parity::Even : Parity::Odd;
    GradedHom t = zero_hom(fm.mf, fm.mf, p);
    auto place = [&](PolyMatrix& dst, const std::vector<int>& row_degs,
                     const std::vector<std::size_t>& row_off,
                     const std::vector<int>& col_degs,
                     const std::vector<std::size_t>& col_off) {
        for (std::size_t c = 0; c < col_degs.size(); ++c) {
            int g = col_degs[c];
            int tg = g + deg;
            if (tg < m.lo || tg > m.hi) continue;
            const PolyMatrix& blk = maps[std::size_t(g - m.lo)];
            if (blk.rows() != m.rank(tg) || blk.cols() != m.rank(g))
                throw MathError("fold_degree_map: block shape mismatch in degree " +
                                std::to_string(g));
            std::size_t r = 0;
            while (r < row_degs.size() && row_degs[r] != tg) ++r;
            if (r == row_degs.size()) continue;
            for (std::size_t i = 0; i < blk.rows(); ++i)
                for (std::size_t j = 0; j < blk.cols(); ++j)
                    dst.at(row_off[r] + i, col_off[c] + j) = blk.at(i, j);
        }
        (void)ctx;
    };
    if (p == Parity::Even) {
        place(t.a0, fm.even_degs, fm.even_off, fm.even_degs, fm.even_off);
        place(t.a1, fm.odd_degs, fm.odd_off, fm.odd_degs, fm.odd_off);
    } else {
        place(t.a0, fm.odd_degs, fm.odd_off, fm.even_degs, fm.even_off);
        place(t.a1, fm.even_degs, fm.even_off, fm.odd_degs, fm.odd_off);
    }
    return t;
}

namespace {

using BasisTag = std::tuple<int, int, std::size_t, std::size_t>;  // (i, j, a, b)

// permutation sending original index -> sorted position
std::vector<std::size_t> sort_permutation(const std::vector<BasisTag>& tags) {
    std::vector<std::size_t> idx(tags.size());
    for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return tags[a] < tags[b]; });
    std::vector<std::size_t> pos(tags.size());
    for (std::size_t k = 0; k < idx.size(); ++k) pos[idx[k]] = k;
    return pos;
}

std::vector<BasisTag> sorted_tags(std::vector<BasisTag> tags) {
    std::sort(tags.begin(), tags.end());
    return tags;
}

bool conjugated_equal(const PolyMatrix& a, const std::vector<std::size_t>& a_row,
                      const std::vector<std::size_t>& a_col, const PolyMatrix& b,
                      const std::vector<std::size_t>& b_row,
                      const std::vector<std::size_t>& b_col) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    std::vector<std::size_t> a_row_inv(a.rows()), a_col_inv(a.cols());
    std::vector<std::size_t> b_row_inv(b.rows()), b_col_inv(b.cols());
    for (std::size_t k = 0; k < a.rows(); ++k) a_row_inv[a_row[k]] = k;
    for (std::size_t k = 0; k < a.cols(); ++k) a_col_inv[a_col[k]] = k;
    for (std::size_t k = 0; k < b.rows(); ++k) b_row_inv[b_row[k]] = k;
    for (std::size_t k = 0; k < b.cols(); ++k) b_col_inv[b_col[k]] = k;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (a.at(a_row_inv[r], a_col_inv[c]) != b.at(b_row_inv[r], b_col_inv[c]))
                return false;
    return true;
}

} // namespace

bool fold_monoidality_check(const KoszulModule& m, const KoszulModule& n) {
    KoszulModule conv = convolve_ext(m, n);
    Fold fa = fold(conv);
    Fold fm = fold(m);
    Fold fn = fold(n);
    MatrixFactorization bb = box_product(fm.mf, fn.mf);

    // fold(M ⊞ N): degrees of one parity ascending, then the (i, j = g−i)
    // summands with i ascending, Kronecker a-major
    auto conv_tags = [&](const std::vector<int>& degs) {
        std::vector<BasisTag> tags;
        for (int g : degs)
            for (int i = m.lo; i <= m.hi; ++i) {
                int j = g - i;
                if (j < n.lo || j > n.hi) continue;
                for (std::size_t a = 0; a < m.rank(i); ++a)
                    for (std::size_t b = 0; b < n.rank(j); ++b)
                        tags.emplace_back(i, j, a, b);
            }
        return tags;
    };
    // fold(M) ⊠ fold(N): two Kronecker blocks per parity
    auto layout = [&](const Fold& f, const KoszulModule& mod, bool even) {
        std::vector<std::pair<int, std::size_t>> basis;
        const std::vector<int>& degs = even ? f.even_degs : f.odd_degs;
        for (int g : degs)
            for (std::size_t a = 0; a < mod.rank(g); ++a) basis.emplace_back(g, a);
        return basis;
    };
    auto kron_tags = [&](bool first_even, bool second_even) {
        std::vector<BasisTag> tags;
        for (auto [i, a] : layout(fm, m, first_even))
            for (auto [j, b] : layout(fn, n, second_even)) tags.emplace_back(i, j, a, b);
        return tags;
    };
    std::vector<BasisTag> a_even = conv_tags(fa.even_degs);
    std::vector<BasisTag> a_odd = conv_tags(fa.odd_degs);
    std::vector<BasisTag> b_even = kron_tags(true, true);
    {
        std::vector<BasisTag> t = kron_tags(false, false);
        b_even.insert(b_even.end(), t.begin(), t.end());
    }
    std::vector<BasisTag> b_odd = kron_tags(false, true);
    {
        std::vector<BasisTag> t = kron_tags(true, false);
        b_odd.insert(b_odd.end(), t.begin(), t.end());
    }
    if (sorted_tags(a_even) != sorted_tags(b_even)) return false;
    if (sorted_tags(a_odd) != sorted_tags(b_odd)) return false;
    if (fa.mf.lg.f != bb.lg.f) return false;

    std::vector<std::size_t> pae = sort_permutation(a_even);
    std::vector<std::size_t> pao = sort_permutation(a_odd);
    std::vector<std::size_t> pbe = sort_permutation(b_even);
    std::vector<std::size_t> pbo = sort_permutation(b_odd);
    return conjugated_equal(fa.mf.d0, pao, pae, bb.d0, pbo, pbe) &&
           conjugated_equal(fa.mf.d1, pae, pao, bb.d1, pbe, pbo);
}

ContractionWitness contraction_witness(const Fold& fm, const KoszulModule& m,
                                       const std::vector<PolyMatrix>& k) {
    const RingCtxPtr& ctx = m.lg.ctx;
    if (int(k.size()) != m.width())
        throw ContractionInvalid("contraction: expected one matrix per degree");
    auto kk = [&](int g) -> PolyMatrix {
        if (g >= m.lo && g <= m.hi) {
            const PolyMatrix& c = k[std::size_t(g - m.lo)];
            if (c.rows() != m.rank(g - 1) || c.cols() != m.rank(g))
                throw ContractionInvalid("contraction: shape mismatch in degree " +
                                         std::to_string(g));
            return c;
        }
        return PolyMatrix(ctx, m.rank(g - 1), m.rank(g));
    };
    for (int g = m.lo; g <= m.hi; ++g) {
        PolyMatrix lhs = m.dmat(g - 1) * kk(g) + kk(g + 1) * m.dmat(g);
        if (lhs != PolyMatrix::identity(ctx, m.rank(g)))
            throw ContractionInvalid("dk + kd != Id in degree " + std::to_string(g));
    }

    // u = hk + kh has degree −2, commutes with δ, and is nilpotent
    std::vector<PolyMatrix> u;
    for (int g = m.lo; g <= m.hi; ++g)
        u.push_back(m.hmat(g - 1) * kk(g) + kk(g - 1) * m.hmat(g));
    auto u_at = [&](int g) -> PolyMatrix {
        if (g >= m.lo && g <= m.hi) return u[std::size_t(g - m.lo)];
        return PolyMatrix(ctx, m.rank(g - 2), m.rank(g));
    };
    auto all_zero = [&](const std::vector<PolyMatrix>& p) {
        for (auto& blk : p)
            if (!blk.is_zero()) return false;
        return true;
    };

    GradedHom kf = fold_degree_map(fm, m, k, -1);
    GradedHom h = kf;
    std::vector<PolyMatrix> power = u;  // u^{i} as per-degree maps, i starting at 1
    int n = 1;
    int bound = (m.width() + 1) / 2 + 1;
    while (!all_zero(power)) {
        GradedHom term = hom_compose(kf, fold_degree_map(fm, m, power, -2 * n));
        h = n % 2 == 1 ? hom_add(h, hom_scale(term, -Scalar::one(ctx->field)))
                       : hom_add(h, term);
        std::vector<PolyMatrix> next;
        for (int g = m.lo; g <= m.hi; ++g)
            next.push_back(u_at(g - 2 * n) * power[std::size_t(g - m.lo)]);
        power = std::move(next);
        ++n;
        if (n > bound)
            throw MathError("contraction: nilpotence bound exceeded");
    }

    GradedHom cert = hom_diff(h);
    GradedHom id = identity_hom(fm.mf);
    if (cert.a0 != id.a0 || cert.a1 != id.a1)
        throw MathError("contraction: certificate failed");
    return ContractionWitness{h, n};
}

namespace {

// Removes unit entries (nonzero constants) of a presentation by row and
// column operations, shrinking the matrix; also drops zero columns.
PolyMatrix minimize_presentation(PolyMatrix a) {
    const RingCtxPtr& ctx = a.ctx();
    for (;;) {
        std::optional<std::pair<std::size_t, std::size_t>> unit;
        for (std::size_t r = 0; r < a.rows() && !unit; ++r)
            for (std::size_t c = 0; c < a.cols() && !unit; ++c)
                if (!a.at(r, c).is_zero() && a.at(r, c).is_constant())
                    unit = {r, c};
        if (!unit) break;
        auto [r, c] = *unit;
        Poly inv = Poly::constant(ctx, a.at(r, c).constant_value().inv());
        for (std::size_t c2 = 0; c2 < a.cols(); ++c2) {
            if (c2 == c || a.at(r, c2).is_zero()) continue;
            Poly coef = a.at(r, c2) * inv;
            for (std::size_t r2 = 0; r2 < a.rows(); ++r2)
                a.at(r2, c2) = a.at(r2, c2) - coef * a.at(r2, c);
        }
        for (std::size_t r2 = 0; r2 < a.rows(); ++r2) {
            if (r2 == r || a.at(r2, c).is_zero()) continue;
            Poly coef = a.at(r2, c) * inv;
            for (std::size_t c2 = 0; c2 < a.cols(); ++c2)
                a.at(r2, c2) = a.at(r2, c2) - coef * a.at(r, c2);
        }
        PolyMatrix next(ctx, a.rows() - 1, a.cols() - 1);
        for (std::size_t r2 = 0, rr = 0; r2 < a.rows(); ++r2) {
            if (r2 == r) continue;
            for (std::size_t c2 = 0, cc = 0; c2 < a.cols(); ++c2) {
                if (c2 == c) continue;
                next.at(rr, cc) = a.at(r2, c2);
                ++cc;
            }
            ++rr;
        }
        a = std::move(next);
    }
    std::vector<std::size_t> keep;
    for (std::size_t c = 0; c < a.cols(); ++c) {
        bool zero = true;
        for (std::size_t r = 0; r < a.rows() && zero; ++r)
            zero = a.at(r, c).is_zero();
        if (!zero) keep.push_back(c);
    }
    if (keep.size() == a.cols()) return a;
    PolyMatrix out(ctx, a.rows(), keep.size());
    for (std::size_t c = 0; c < keep.size(); ++c)
        for (std::size_t r = 0; r < a.rows(); ++r) out.at(r, c) = a.at(r, keep[c]);
    return out;
}

// Drop columns that are B-linear combinations of the remaining columns and
// the implicit hypersurface relations f·e_i; syzygy generating sets are not
// minimal and redundant relations would block 2-periodicity.
PolyMatrix drop_redundant_columns(PolyMatrix a, const Poly& f,
                                  const GBOptions& opts) {
    const RingCtxPtr& ctx = a.ctx();
    for (std::size_t c = 0; c < a.cols();) {
        std::vector<ModVec> gens;
        for (std::size_t c2 = 0; c2 < a.cols(); ++c2) {
            if (c2 == c) continue;
            ModVec g;
            for (std::size_t r = 0; r < a.rows(); ++r) g.push_back(a.at(r, c2));
            gens.push_back(std::move(g));
        }
        for (std::size_t r = 0; r < a.rows(); ++r) {
            ModVec g(a.rows(), Poly::zero(ctx));
            g[r] = f;
            gens.push_back(std::move(g));
        }
        ModVec col;
        for (std::size_t r = 0; r < a.rows(); ++r) col.push_back(a.at(r, c));
        auto gb = GroebnerBasis::compute(gens, a.rows(), ctx, opts);
        if (gb.contains(col)) {
            PolyMatrix next(ctx, a.rows(), a.cols() - 1);
            for (std::size_t c2 = 0, cc = 0; c2 < a.cols(); ++c2) {
                if (c2 == c) continue;
                for (std::size_t r = 0; r < a.rows(); ++r)
                    next.at(r, cc) = a.at(r, c2);
                ++cc;
            }
            a = std::move(next);
        } else {
            ++c;
        }
    }
    return a;
}

} // namespace

MatrixFactorization stabilize(const LGPair& lg, const PolyMatrix& presentation,
                              int cap, const GBOptions& opts) {
    const RingCtxPtr& ctx = lg.ctx;
    if (lg.f.is_zero()) throw MathError("stabilize: zero potential");
    if (cap < 0) cap = 2 * int(ctx->nvars()) + 4;
    PolyMatrix a =
        drop_redundant_columns(minimize_presentation(presentation), lg.f, opts);
    for (int step = 0; step <= cap; ++step) {
        if (a.cols() == 0 || a.rows() == 0) {
            // a free module: its stabilization is the zero factorization
            return new_mf(lg, PolyMatrix(ctx, 0, 0), PolyMatrix(ctx, 0, 0));
        }
        // try to complete a to a matrix factorization: b with a·b = f·Id
        bool ok = true;
        PolyMatrix b(ctx, a.cols(), a.rows());
        for (std::size_t j = 0; j < a.rows() && ok; ++j) {
            ModVec rhs(a.rows(), Poly::zero(ctx));
            rhs[j] = lg.f;
            auto sol = solve_linear(a, rhs, opts);
            if (!sol) {
                ok = false;
                break;
            }
            for (std::size_t i = 0; i < a.cols(); ++i) b.at(i, j) = (*sol)[i];
        }
        if (ok && b * a == PolyMatrix::scalar(ctx, a.cols(), lg.f))
            return new_mf(lg, std::move(b), a);

        // next syzygy over B/(f): syzygies over B of [a | f·Id], top block
        PolyMatrix aug(ctx, a.rows(), a.cols() + a.rows());
        for (std::size_t r = 0; r < a.rows(); ++r) {
            for (std::size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
            aug.at(r, a.cols() + r) = lg.f;
        }
        std::vector<ModVec> syz = syzygy_generators(aug, opts);
        PolyMatrix next(ctx, a.cols(), syz.size());
        for (std::size_t c = 0; c < syz.size(); ++c)
            for (std::size_t r = 0; r < a.cols(); ++r) next.at(r, c) = syz[c][r];
        a = drop_redundant_columns(minimize_presentation(next), lg.f, opts);
    }
    throw PeriodicityNotReached("stabilize: resolution not 2-periodic within " +
                                std::to_string(cap) + " steps");
}

bool homotopy_equivalent_cert(const MatrixFactorization& e,
                              const MatrixFactorization& f, const GBOptions& opts) {
    std::vector<GradedHom> gens = closed_hom_generators(e, f, Parity::Even, opts);
    std::vector<GradedHom> candidates;
    for (auto& g : gens)
        if (!hom_is_zero(g)) candidates.push_back(g);
    std::size_t single = candidates.size();
    for (std::size_t i = 0; i < single && candidates.size() < 40; ++i)
        for (std::size_t j = i + 1; j < single && candidates.size() < 40; ++j)
            candidates.push_back(hom_add(candidates[i], candidates[j]));
    candidates.push_back(zero_hom(e, f, Parity::Even));  // both-contractible case
    for (auto& phi : candidates) {
        MatrixFactorization cone = cone_mf(phi);
        GradedHom id = identity_hom(cone);
        if (is_null_homotopic(id, opts)) return true;
    }
    return false;
}

} // namespace lgcat
