#include "lgcat/koszul.hpp"

namespace lgcat {

PolyMatrix KoszulModule::dmat(int n) const {
    if (n >= lo && n <= hi && !d.empty()) {
        const PolyMatrix& m = d[std::size_t(n - lo)];
        if (m.rows() == rank(n + 1) && m.cols() == rank(n)) return m;
    }
    return PolyMatrix(lg.ctx, rank(n + 1), rank(n));
}

PolyMatrix KoszulModule::hmat(int n) const {
    if (n >= lo && n <= hi && !h.empty()) {
        const PolyMatrix& m = h[std::size_t(n - lo)];
        if (m.rows() == rank(n - 1) && m.cols() == rank(n)) return m;
    }
    return PolyMatrix(lg.ctx, rank(n - 1), rank(n));
}

KoszulModule new_koszul(const LGPair& lg, int lo, std::vector<std::size_t> ranks,
                        std::vector<PolyMatrix> d, std::vector<PolyMatrix> h) {
    KoszulModule m;
    m.lg = lg;
    m.lo = lo;
    m.hi = lo + int(ranks.size()) - 1;
    m.ranks = std::move(ranks);
    if (d.size() != m.ranks.size() || h.size() != m.ranks.size())
        throw MathError("koszul module: per-degree matrix count mismatch");
    for (int n = m.lo; n <= m.hi; ++n) {
        const PolyMatrix& dn = d[std::size_t(n - m.lo)];
        const PolyMatrix& hn = h[std::size_t(n - m.lo)];
        if (dn.rows() != m.rank(n + 1) || dn.cols() != m.rank(n))
            throw MathError("koszul module: d shape mismatch in degree " +
                            std::to_string(n));
        if (hn.rows() != m.rank(n - 1) || hn.cols() != m.rank(n))
            throw MathError("koszul module: h shape mismatch in degree " +
                            std::to_string(n));
    }
    m.d = std::move(d);
    m.h = std::move(h);

    auto check_zero = [&](const PolyMatrix& prod, int n, const std::string& what) {
        for (std::size_t i = 0; i < prod.rows(); ++i)
            for (std::size_t j = 0; j < prod.cols(); ++j)
                if (!prod.at(i, j).is_zero())
                    throw IdentityViolation(what + " in degree " + std::to_string(n),
                                            i, j, prod.at(i, j));
    };
    for (int n = m.lo; n <= m.hi; ++n) {
        check_zero(m.dmat(n + 1) * m.dmat(n), n, "d*d != 0");
        check_zero(m.hmat(n - 1) * m.hmat(n), n, "h*h != 0");
        PolyMatrix comm = m.dmat(n - 1) * m.hmat(n) + m.hmat(n + 1) * m.dmat(n);
        for (std::size_t i = 0; i < comm.rows(); ++i)
            for (std::size_t j = 0; j < comm.cols(); ++j) {
                Poly expect = i == j ? lg.f : Poly::zero(lg.ctx);
                Poly diff = comm.at(i, j) - expect;
                if (!diff.is_zero())
                    throw IdentityViolation(
                        "dh + hd != f*Id in degree " + std::to_string(n), i, j, diff);
            }
    }
    return m;
}

KoszulModule koszul_algebra(const LGPair& lg) {
    const RingCtxPtr& ctx = lg.ctx;
    PolyMatrix d_bot(ctx, 1, 1), h_top(ctx, 1, 1);
    d_bot.at(0, 0) = lg.f;
    h_top.at(0, 0) = Poly::from_long(ctx, 1);
    return new_koszul(lg, -1, {1, 1},
                      {d_bot, PolyMatrix(ctx, 0, 1)},
                      {PolyMatrix(ctx, 0, 1), h_top});
}

KoszulModule trivial_koszul(const RingCtxPtr& ctx) {
    LGPair lg(ctx, Poly::zero(ctx));
    return new_koszul(lg, 0, {1}, {PolyMatrix(ctx, 0, 1)}, {PolyMatrix(ctx, 0, 1)});
}

KoszulModule forget(const KoszulModule& m) {
    KoszulModule out = m;
    out.lg = LGPair(m.lg.ctx, Poly::zero(m.lg.ctx));
    for (int n = m.lo; n <= m.hi; ++n)
        out.h[std::size_t(n - m.lo)] = PolyMatrix(m.lg.ctx, m.rank(n - 1), m.rank(n));
    return out;
}

namespace {

// Shared tensor assembly; the caller fixes the target ring (the product ring
// for convolve_ext, the right factor's ring for the point-case action).
KoszulModule convolve_core(const KoszulModule& m, const KoszulModule& n,
                           const RingCtxPtr& ctx) {
    if (m.width() == 0 || n.width() == 0) {
        LGPair lg(ctx, m.lg.f.embed(ctx) + n.lg.f.embed(ctx));
        return new_koszul(lg, 0, {}, {}, {});
    }
    int lo = m.lo + n.lo, hi = m.hi + n.hi;
    // summands of degree g: (i, g - i) for i in [m.lo, m.hi], ordered by i
    auto sizes_at = [&](int g) {
        std::vector<std::size_t> s;
        for (int i = m.lo; i <= m.hi; ++i) s.push_back(m.rank(i) * n.rank(g - i));
        return s;
    };
    auto block_index = [&](int i) { return std::size_t(i - m.lo); };

    std::vector<std::size_t> ranks;
    std::vector<PolyMatrix> dd, hh;
    std::vector<PolyMatrix> md(std::size_t(m.width())), mh(std::size_t(m.width()));
    std::vector<PolyMatrix> nd(std::size_t(n.width())), nh(std::size_t(n.width()));
    for (int i = m.lo; i <= m.hi; ++i) {
        md[block_index(i)] = m.dmat(i).embed(ctx);
        mh[block_index(i)] = m.hmat(i).embed(ctx);
    }
    for (int j = n.lo; j <= n.hi; ++j) {
        nd[std::size_t(j - n.lo)] = n.dmat(j).embed(ctx);
        nh[std::size_t(j - n.lo)] = n.hmat(j).embed(ctx);
    }
    auto ident = [&](std::size_t r) { return PolyMatrix::identity(ctx, r); };

    for (int g = lo; g <= hi; ++g) {
        std::vector<std::size_t> cols = sizes_at(g);
        std::size_t total = 0;
        for (auto s : cols) total += s;
        ranks.push_back(total);

        BlockMatrix dg(ctx, sizes_at(g + 1), cols);
        BlockMatrix hg(ctx, sizes_at(g - 1), cols);
        for (int i = m.lo; i <= m.hi; ++i) {
            int j = g - i;
            if (j < n.lo || j > n.hi) continue;
            if (m.rank(i) * n.rank(j) == 0) continue;
            bool neg = (i % 2 + 2) % 2 == 1;
            // d(x ⊗ y) = dx ⊗ y + (−1)^{deg x} x ⊗ dy, and likewise for h
            if (i + 1 <= m.hi)
                dg.add(block_index(i + 1), block_index(i),
                       PolyMatrix::kronecker(md[block_index(i)], ident(n.rank(j))));
            if (j + 1 <= n.hi) {
                PolyMatrix blk = PolyMatrix::kronecker(ident(m.rank(i)),
                                                       nd[std::size_t(j - n.lo)]);
                dg.add(block_index(i), block_index(i), neg ? -blk : blk);
            }
            if (i - 1 >= m.lo)
                hg.add(block_index(i - 1), block_index(i),
                       PolyMatrix::kronecker(mh[block_index(i)], ident(n.rank(j))));
            if (j - 1 >= n.lo) {
                PolyMatrix blk = PolyMatrix::kronecker(ident(m.rank(i)),
                                                       nh[std::size_t(j - n.lo)]);
                hg.add(block_index(i), block_index(i), neg ? -blk : blk);
            }
        }
        dd.push_back(dg.assemble());
        hh.push_back(hg.assemble());
    }
    LGPair lg(ctx, m.lg.f.embed(ctx) + n.lg.f.embed(ctx));
    return new_koszul(lg, lo, std::move(ranks), std::move(dd), std::move(hh));
}

} // namespace

KoszulModule convolve_ext(const KoszulModule& m, const KoszulModule& n) {
    RingCtxPtr ctx =
        std::make_shared<const RingCtx>(RingCtx::product(*m.lg.ctx, *n.lg.ctx));
    return convolve_core(m, n, ctx);
}

KoszulModule act_point(const KoszulModule& f, const KoszulModule& m) {
    if (f.lg.ctx->nvars() != 0)
        throw MathError("act_point: acting module must live over the coefficient field");
    if (!f.lg.f.is_zero())
        throw MathError("act_point: acting module must have zero potential");
    if (!(f.lg.ctx->field == m.lg.ctx->field))
        throw MathError("act_point: coefficient field mismatch");
    return convolve_core(f, m, m.lg.ctx);
}

KoszulModule pull_push(const KoszulModule& m) {
    RingCtxPtr point = make_ring(m.lg.ctx->field, {}, m.lg.ctx->order);
    return act_point(koszul_algebra(LGPair(point, Poly::zero(point))), m);
}

KoszulModule telescope(const RingCtxPtr& point_ctx, int n) {
    if (n < 1) throw MathError("telescope: n must be >= 1");
    if (point_ctx->nvars() != 0)
        throw MathError("telescope: point-case context required");
    int lo = -2 * n + 1;
    std::vector<std::size_t> ranks(std::size_t(2 * n), 1);
    std::vector<PolyMatrix> d, h;
    PolyMatrix one(point_ctx, 1, 1), zero(point_ctx, 1, 1);
    one.at(0, 0) = Poly::from_long(point_ctx, 1);
    for (int j = lo; j <= 0; ++j) {
        bool even = (j % 2 + 2) % 2 == 0;
        d.push_back(j == 0 ? PolyMatrix(point_ctx, 0, 1) : (even ? one : zero));
        h.push_back(j == lo ? PolyMatrix(point_ctx, 0, 1) : (even ? one : zero));
    }
    return new_koszul(LGPair(point_ctx, Poly::zero(point_ctx)), lo, std::move(ranks),
                      std::move(d), std::move(h));
}

KoszulModule shift_koszul(const KoszulModule& m, int k) {
    std::vector<std::size_t> ranks;
    std::vector<PolyMatrix> d, h;
    bool odd = (k % 2 + 2) % 2 == 1;
    for (int n = m.lo - k; n <= m.hi - k; ++n) {
        ranks.push_back(m.rank(n + k));
        PolyMatrix dn = m.dmat(n + k), hn = m.hmat(n + k);
        d.push_back(odd ? -dn : dn);
        h.push_back(odd ? -hn : hn);
    }
    return new_koszul(m.lg, m.lo - k, std::move(ranks), std::move(d), std::move(h));
}

PolyMatrix KoszulHom::at(int n) const {
    const KoszulModule& m = *source;
    const KoszulModule& t = *target;
    int idx = n - lo;
    if (idx >= 0 && idx < int(comps.size())) {
        const PolyMatrix& c = comps[std::size_t(idx)];
        if (c.rows() == t.rank(n) && c.cols() == m.rank(n)) return c;
    }
    return PolyMatrix(m.lg.ctx, t.rank(n), m.rank(n));
}

KoszulHom identity_koszul_hom(const KoszulModule& m) {
    KoszulHom t;
    t.source = &m;
    t.target = &m;
    t.lo = m.lo;
    for (int n = m.lo; n <= m.hi; ++n)
        t.comps.push_back(PolyMatrix::identity(m.lg.ctx, m.rank(n)));
    return t;
}

bool koszul_hom_is_strict(const KoszulHom& t) {
    const KoszulModule& m = *t.source;
    const KoszulModule& n = *t.target;
    if (!(m.lg == n.lg)) return false;
    int lo = std::min(m.lo, n.lo), hi = std::max(m.hi, n.hi);
    for (int g = lo; g <= hi; ++g) {
        if (n.dmat(g) * t.at(g) != t.at(g + 1) * m.dmat(g)) return false;
        if (n.hmat(g) * t.at(g) != t.at(g - 1) * m.hmat(g)) return false;
    }
    return true;
}

KoszulModule koszul_cone(const KoszulHom& t) {
    if (!koszul_hom_is_strict(t))
        throw MathError("koszul_cone: morphism is not a strict chain map");
    const KoszulModule& m = *t.source;
    const KoszulModule& n = *t.target;
    const RingCtxPtr& ctx = m.lg.ctx;
    int lo = std::min(n.lo, m.lo - 1), hi = std::max(n.hi, m.hi - 1);
    auto sizes = [&](int g) {
        return std::vector<std::size_t>{n.rank(g), m.rank(g + 1)};
    };
    std::vector<std::size_t> ranks;
    std::vector<PolyMatrix> dd, hh;
    for (int g = lo; g <= hi; ++g) {
        ranks.push_back(n.rank(g) + m.rank(g + 1));
        BlockMatrix dg(ctx, sizes(g + 1), sizes(g));
        dg.set(0, 0, n.dmat(g));
        dg.set(0, 1, t.at(g + 1));
        dg.set(1, 1, -m.dmat(g + 1));
        dd.push_back(dg.assemble());
        BlockMatrix hg(ctx, sizes(g - 1), sizes(g));
        hg.set(0, 0, n.hmat(g));
        hg.set(1, 1, -m.hmat(g + 1));
        hh.push_back(hg.assemble());
    }
    return new_koszul(n.lg, lo, std::move(ranks), std::move(dd), std::move(hh));
}

std::vector<PolyMatrix> cone_id_contraction(const KoszulModule& cone_of_id,
                                            const KoszulModule& m) {
    const RingCtxPtr& ctx = m.lg.ctx;
    std::vector<PolyMatrix> k;
    for (int g = cone_of_id.lo; g <= cone_of_id.hi; ++g) {
        BlockMatrix kg(ctx, {m.rank(g - 1), m.rank(g)}, {m.rank(g), m.rank(g + 1)});
        kg.set(1, 0, PolyMatrix::identity(ctx, m.rank(g)));
        k.push_back(kg.assemble());
    }
    return k;
}

PolyMatrix AuModule::dmat(int n) const {
    if (n >= lo && n <= hi) {
        const PolyMatrix& m = diff[std::size_t(n - lo)];
        if (m.rows() == rank(n + 1) && m.cols() == rank(n)) return m;
    }
    return PolyMatrix(ctx, rank(n + 1), rank(n));
}

PolyMatrix AuModule::umat(int n) const {
    if (n >= lo && n <= hi) {
        const PolyMatrix& m = u[std::size_t(n - lo)];
        if (m.rows() == rank(n + 2) && m.cols() == rank(n)) return m;
    }
    return PolyMatrix(ctx, rank(n + 2), rank(n));
}

AuModule twisted_E(const KoszulModule& m, int window) {
    if (m.lg.ctx->nvars() != 0)
        throw MathError("twisted_E: point-case context required");
    if (!m.lg.f.is_zero()) throw MathError("twisted_E: zero potential required");
    if (window < m.width()) throw MathError("twisted_E: window smaller than module width");
    const RingCtxPtr& ctx = m.lg.ctx;

    AuModule x;
    x.ctx = ctx;
    x.lo = m.lo;
    x.hi = m.hi + 2 * window + 1;
    x.report_lo = m.lo;
    x.report_hi = m.hi + 2 * window;
    // level n = ⊕_{i ≥ 0} E^{n−2i}; block i kept when n−2i lies in the window
    auto pieces = [&](int n) {
        std::vector<int> degs;
        for (int i = 0; n - 2 * i >= m.lo; ++i)
            if (n - 2 * i <= m.hi) degs.push_back(n - 2 * i);
        return degs;
    };
    auto sizes = [&](int n) {
        std::vector<std::size_t> s;
        for (int g : pieces(n)) s.push_back(m.rank(g));
        return s;
    };
    auto index_of = [&](int n, int g) -> std::size_t {
        auto degs = pieces(n);
        for (std::size_t k = 0; k < degs.size(); ++k)
            if (degs[k] == g) return k;
        throw MathError("twisted_E: internal index error");
    };
    for (int n = x.lo; n <= x.hi; ++n) {
        std::size_t total = 0;
        for (auto s : sizes(n)) total += s;
        x.ranks.push_back(total);
    }
    for (int n = x.lo; n <= x.hi; ++n) {
        BlockMatrix dn(ctx, sizes(n + 1), sizes(n));
        BlockMatrix un(ctx, sizes(n + 2), sizes(n));
        for (int g : pieces(n)) {
            if (g + 1 <= m.hi && g + 1 >= m.lo)
                dn.set(index_of(n + 1, g + 1), index_of(n, g), m.dmat(g));
            if (g - 1 >= m.lo && g - 1 <= m.hi)
                dn.set(index_of(n + 1, g - 1), index_of(n, g), m.hmat(g));
            if (n + 2 <= x.hi)
                un.set(index_of(n + 2, g), index_of(n, g),
                       PolyMatrix::identity(ctx, m.rank(g)));
        }
        x.diff.push_back(dn.assemble());
        x.u.push_back(un.assemble());
    }
    // the two structural invariants, checked on everything we will report
    for (int n = x.lo; n <= x.hi - 1; ++n) {
        if (!(x.dmat(n + 1) * x.dmat(n)).is_zero())
            throw MathError("twisted_E: differential does not square to zero");
        if (n + 2 <= x.hi - 1 &&
            x.dmat(n + 2) * x.umat(n) != x.umat(n + 1) * x.dmat(n))
            throw MathError("twisted_E: u is not a chain map");
    }
    return x;
}

ScalarMatrix to_scalar_matrix(const PolyMatrix& m) {
    ScalarMatrix a(m.rows(), std::vector<Scalar>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!m.at(i, j).is_constant())
                throw MathError("expected a constant matrix");
            a[i][j] = m.at(i, j).constant_value();
        }
    return a;
}

std::size_t field_rank(ScalarMatrix a) {
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][c].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[rank]);
        Scalar inv = a[rank][c].inv();
        for (std::size_t j = c; j < cols; ++j) a[rank][j] = a[rank][j] * inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][c].is_zero()) continue;
            Scalar factor = a[r][c];
            for (std::size_t j = c; j < cols; ++j)
                a[r][j] = a[r][j] - factor * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

std::optional<std::vector<Scalar>> field_solve(ScalarMatrix a, std::vector<Scalar> b) {
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    if (b.size() != rows) throw MathError("field_solve: shape mismatch");
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][c].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[rank]);
        std::swap(b[pivot], b[rank]);
        Scalar inv = a[rank][c].inv();
        for (std::size_t j = c; j < cols; ++j) a[rank][j] = a[rank][j] * inv;
        b[rank] = b[rank] * inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][c].is_zero()) continue;
            Scalar factor = a[r][c];
            for (std::size_t j = c; j < cols; ++j)
                a[r][j] = a[r][j] - factor * a[rank][j];
            b[r] = b[r] - factor * b[rank];
        }
        pivot_col.push_back(c);
        ++rank;
    }
    for (std::size_t r = rank; r < rows; ++r)
        if (!b[r].is_zero()) return std::nullopt;
    Field f = [&] {
        for (auto& row : a)
            for (auto& s : row) return s.field();
        return Field{};
    }();
    std::vector<Scalar> x(cols, Scalar::zero(f));
    for (std::size_t r = 0; r < rank; ++r) x[pivot_col[r]] = b[r];
    return x;
}

std::map<int, std::uint64_t> au_cohomology_dims(const AuModule& x) {
    std::map<int, std::uint64_t> dims;
    for (int n = x.report_lo; n <= x.report_hi; ++n) {
        std::size_t out = field_rank(to_scalar_matrix(x.dmat(n)));
        std::size_t in = field_rank(to_scalar_matrix(x.dmat(n - 1)));
        dims[n] = std::uint64_t(x.rank(n) - out - in);
    }
    return dims;
}

std::map<int, std::uint64_t> rhom_trivial_dims(const KoszulModule& m, int window) {
    return au_cohomology_dims(twisted_E(m, window));
}

UConeReport u_cone_check(const KoszulModule& m, int window) {
    AuModule x = twisted_E(m, window);
    const RingCtxPtr& ctx = x.ctx;

    // cone of u: C^n = X^n ⊕ X^{n−1}, d(b, a) = (db + u·a, −da)
    AuModule cone;
    cone.ctx = ctx;
    cone.lo = x.lo;
    cone.hi = x.hi;
    cone.report_lo = x.report_lo;
    cone.report_hi = x.report_hi;
    auto sizes = [&](int n) {
        return std::vector<std::size_t>{x.rank(n), x.rank(n - 1)};
    };
    for (int n = cone.lo; n <= cone.hi; ++n)
        cone.ranks.push_back(x.rank(n) + x.rank(n - 1));
    for (int n = cone.lo; n <= cone.hi; ++n) {
        BlockMatrix dn(ctx, sizes(n + 1), sizes(n));
        dn.set(0, 0, x.dmat(n));
        dn.set(0, 1, x.umat(n - 1));
        dn.set(1, 1, -x.dmat(n - 1));
        cone.diff.push_back(dn.assemble());
        cone.u.push_back(PolyMatrix(ctx, cone.rank(n + 2), cone.rank(n)));
    }

    AuModule z = twisted_E(pull_push(m), window);
    std::map<int, std::uint64_t> zdims = au_cohomology_dims(z);

    UConeReport rep;
    rep.lo = x.report_lo;
    rep.hi = x.report_hi;
    // (Z[−1])^n = Z^{n−1}; compare where both sides are exact
    std::map<int, std::uint64_t> cdims = au_cohomology_dims(cone);
    rep.ok = true;
    for (int n = rep.lo; n <= rep.hi; ++n) {
        std::uint64_t lhs = cdims.count(n) ? cdims[n] : 0;
        std::uint64_t rhs = zdims.count(n - 1) ? zdims[n - 1] : 0;
        rep.cone_dims[n] = lhs;
        rep.pullpush_dims[n] = rhs;
        if (lhs != rhs) rep.ok = false;
    }
    return rep;
}

} // namespace lgcat
