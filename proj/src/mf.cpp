#include "lgcat/mf.hpp"

namespace lgcat {

LGPair::LGPair(RingCtxPtr c, Poly potential) : ctx(std::move(c)), f(std::move(potential)) {
    if (!f.ctx() || !(*f.ctx() == *ctx))
        throw MathError("potential does not live in the given ring");
}

IdentityViolation::IdentityViolation(const std::string& what, std::size_t r,
                                     std::size_t c, const Poly& diff)
    : MathError(what + " at entry (" + std::to_string(r) + ", " + std::to_string(c) +
                "), difference " + diff.str()),
      row(r), col(c), offending(diff.str()) {}

namespace {

void check_product_is(const PolyMatrix& prod, const Poly& f, const std::string& what) {
    const RingCtxPtr& ctx = prod.ctx();
    for (std::size_t i = 0; i < prod.rows(); ++i)
        for (std::size_t j = 0; j < prod.cols(); ++j) {
            Poly expect = i == j ? f : Poly::zero(ctx);
            Poly diff = prod.at(i, j) - expect;
            if (!diff.is_zero())
                throw IdentityViolation(what, i, j, diff);
        }
}

} // namespace

MatrixFactorization new_mf(const LGPair& lg, PolyMatrix d0, PolyMatrix d1) {
    MatrixFactorization e;
    e.lg = lg;
    e.rank0 = d0.cols();
    e.rank1 = d0.rows();
    if (d1.rows() != e.rank0 || d1.cols() != e.rank1)
        throw MathError("matrix factorization shape mismatch");
    e.d0 = std::move(d0);
    e.d1 = std::move(d1);
    check_product_is(e.d1 * e.d0, lg.f, "d1*d0 != f*Id");
    check_product_is(e.d0 * e.d1, lg.f, "d0*d1 != f*Id");
    return e;
}

MatrixFactorization unit_mf(const RingCtxPtr& ctx) {
    LGPair lg(ctx, Poly::zero(ctx));
    return new_mf(lg, PolyMatrix(ctx, 0, 1), PolyMatrix(ctx, 1, 0));
}

MatrixFactorization shift_mf(const MatrixFactorization& e) {
    return new_mf(e.lg, -e.d1, -e.d0);
}

GradedHom make_hom(const MatrixFactorization& src, const MatrixFactorization& tgt,
                   Parity p, PolyMatrix a0, PolyMatrix a1) {
    if (!(*src.lg.ctx == *tgt.lg.ctx))
        throw MathError("hom between factorizations over different rings");
    std::size_t r0 = src.rank0, r1 = src.rank1;
    std::size_t s0 = tgt.rank0, s1 = tgt.rank1;
    bool ok = p == Parity::Even
                  ? (a0.rows() == s0 && a0.cols() == r0 && a1.rows() == s1 && a1.cols() == r1)
                  : (a0.rows() == s1 && a0.cols() == r0 && a1.rows() == s0 && a1.cols() == r1);
    if (!ok) throw MathError("graded hom shape mismatch");
    return GradedHom{&src, &tgt, p, std::move(a0), std::move(a1)};
}

GradedHom identity_hom(const MatrixFactorization& e) {
    return make_hom(e, e, Parity::Even,
                    PolyMatrix::identity(e.lg.ctx, e.rank0),
                    PolyMatrix::identity(e.lg.ctx, e.rank1));
}

GradedHom zero_hom(const MatrixFactorization& src, const MatrixFactorization& tgt,
                   Parity p) {
    std::size_t r0 = src.rank0, r1 = src.rank1;
    std::size_t s0 = tgt.rank0, s1 = tgt.rank1;
    if (p == Parity::Even)
        return make_hom(src, tgt, p, PolyMatrix(src.lg.ctx, s0, r0),
                        PolyMatrix(src.lg.ctx, s1, r1));
    return make_hom(src, tgt, p, PolyMatrix(src.lg.ctx, s1, r0),
                    PolyMatrix(src.lg.ctx, s0, r1));
}

GradedHom hom_diff(const GradedHom& t) {
    const MatrixFactorization& e = *t.source;
    const MatrixFactorization& f = *t.target;
    if (t.parity == Parity::Even) {
        // odd result: (E0 -> F1, E1 -> F0)
        PolyMatrix u0 = t.a1 * e.d0 - f.d0 * t.a0;
        PolyMatrix u1 = t.a0 * e.d1 - f.d1 * t.a1;
        return make_hom(e, f, Parity::Odd, std::move(u0), std::move(u1));
    }
    // even result: (E0 -> F0, E1 -> F1)
    PolyMatrix u0 = t.a1 * e.d0 + f.d1 * t.a0;
    PolyMatrix u1 = t.a0 * e.d1 + f.d0 * t.a1;
    return make_hom(e, f, Parity::Even, std::move(u0), std::move(u1));
}

bool hom_is_zero(const GradedHom& t) { return t.a0.is_zero() && t.a1.is_zero(); }

bool is_closed(const GradedHom& t) { return hom_is_zero(hom_diff(t)); }

GradedHom hom_compose(const GradedHom& g, const GradedHom& f) {
    if (f.target != g.source)
        throw MathError("hom composition: target/source mismatch");
    Parity p = f.parity == g.parity ? Parity::Even : Parity::Odd;
    // components indexed by the parity of the source piece
    const PolyMatrix& f_on0 = f.a0;
    const PolyMatrix& f_on1 = f.a1;
    // g applied to the piece f lands in
    bool f_flips = f.parity == Parity::Odd;
    const PolyMatrix& g_after0 = f_flips ? g.a1 : g.a0;
    const PolyMatrix& g_after1 = f_flips ? g.a0 : g.a1;
    return make_hom(*f.source, *g.target, p, g_after0 * f_on0, g_after1 * f_on1);
}

GradedHom hom_add(const GradedHom& a, const GradedHom& b) {
    if (a.source != b.source || a.target != b.target || a.parity != b.parity)
        throw MathError("hom addition: incompatible homs");
    return make_hom(*a.source, *a.target, a.parity, a.a0 + b.a0, a.a1 + b.a1);
}

GradedHom hom_scale(const GradedHom& a, const Scalar& c) {
    Poly p = Poly::constant(a.source->lg.ctx, c);
    return make_hom(*a.source, *a.target, a.parity, a.a0.mul_poly(p), a.a1.mul_poly(p));
}

MatrixFactorization cone_mf(const GradedHom& t) {
    if (t.parity != Parity::Even) throw MathError("cone of a non-even morphism");
    if (!is_closed(t)) throw MathError("cone of a non-closed morphism");
    const MatrixFactorization& e = *t.source;
    const MatrixFactorization& f = *t.target;
    const RingCtxPtr& ctx = e.lg.ctx;
    // C0 = F0 ⊕ E1, C1 = F1 ⊕ E0
    BlockMatrix d0(ctx, {f.rank1, e.rank0}, {f.rank0, e.rank1});
    d0.set(0, 0, f.d0);
    d0.set(0, 1, t.a1);
    d0.set(1, 1, -e.d1);
    BlockMatrix d1(ctx, {f.rank0, e.rank1}, {f.rank1, e.rank0});
    d1.set(0, 0, f.d1);
    d1.set(0, 1, t.a0);
    d1.set(1, 1, -e.d0);
    return new_mf(e.lg, d0.assemble(), d1.assemble());
}

GradedHom cone_inclusion(const MatrixFactorization& cone, const GradedHom& t) {
    const MatrixFactorization& f = *t.target;
    const RingCtxPtr& ctx = f.lg.ctx;
    PolyMatrix a0(ctx, cone.rank0, f.rank0), a1(ctx, cone.rank1, f.rank1);
    for (std::size_t i = 0; i < f.rank0; ++i) a0.at(i, i) = Poly::from_long(ctx, 1);
    for (std::size_t i = 0; i < f.rank1; ++i) a1.at(i, i) = Poly::from_long(ctx, 1);
    return make_hom(f, cone, Parity::Even, std::move(a0), std::move(a1));
}

GradedHom cone_projection(const MatrixFactorization& cone, const GradedHom& t,
                          const MatrixFactorization& shifted_source) {
    const MatrixFactorization& e = *t.source;
    const MatrixFactorization& f = *t.target;
    const RingCtxPtr& ctx = f.lg.ctx;
    PolyMatrix a0(ctx, e.rank1, cone.rank0), a1(ctx, e.rank0, cone.rank1);
    for (std::size_t i = 0; i < e.rank1; ++i)
        a0.at(i, f.rank0 + i) = Poly::from_long(ctx, 1);
    for (std::size_t i = 0; i < e.rank0; ++i)
        a1.at(i, f.rank1 + i) = Poly::from_long(ctx, 1);
    return make_hom(cone, shifted_source, Parity::Even, std::move(a0), std::move(a1));
}

ModVec flatten_hom(const GradedHom& t) {
    ModVec v;
    for (std::size_t i = 0; i < t.a0.rows(); ++i)
        for (std::size_t j = 0; j < t.a0.cols(); ++j) v.push_back(t.a0.at(i, j));
    for (std::size_t i = 0; i < t.a1.rows(); ++i)
        for (std::size_t j = 0; j < t.a1.cols(); ++j) v.push_back(t.a1.at(i, j));
    return v;
}

GradedHom unflatten_hom(const MatrixFactorization& src, const MatrixFactorization& tgt,
                        Parity p, const ModVec& v) {
    GradedHom t = zero_hom(src, tgt, p);
    std::size_t k = 0;
    for (std::size_t i = 0; i < t.a0.rows(); ++i)
        for (std::size_t j = 0; j < t.a0.cols(); ++j) t.a0.at(i, j) = v.at(k++);
    for (std::size_t i = 0; i < t.a1.rows(); ++i)
        for (std::size_t j = 0; j < t.a1.cols(); ++j) t.a1.at(i, j) = v.at(k++);
    if (k != v.size()) throw MathError("unflatten_hom: length mismatch");
    return t;
}

PolyMatrix hom_operator_matrix(const MatrixFactorization& e,
                               const MatrixFactorization& f, Parity source_parity) {
    GradedHom probe = zero_hom(e, f, source_parity);
    std::size_t n = probe.a0.rows() * probe.a0.cols() + probe.a1.rows() * probe.a1.cols();
    GradedHom out_probe = zero_hom(
        e, f, source_parity == Parity::Even ? Parity::Odd : Parity::Even);
    std::size_t m =
        out_probe.a0.rows() * out_probe.a0.cols() + out_probe.a1.rows() * out_probe.a1.cols();
    PolyMatrix D(e.lg.ctx, m, n);
    for (std::size_t k = 0; k < n; ++k) {
        ModVec unit(n, Poly::zero(e.lg.ctx));
        unit[k] = Poly::from_long(e.lg.ctx, 1);
        ModVec col = flatten_hom(hom_diff(unflatten_hom(e, f, source_parity, unit)));
        for (std::size_t i = 0; i < m; ++i) D.at(i, k) = col[i];
    }
    return D;
}

namespace {

DimOrInfinite cohomology_dim(const PolyMatrix& d_out, const PolyMatrix& d_in,
                             const GBOptions& opts) {
    // ker(d_out) / im(d_in), with d_in·... landing inside the kernel
    std::vector<ModVec> kernel = syzygy_generators(d_out, opts);
    if (kernel.empty()) return DimOrInfinite::of(0);
    const RingCtxPtr& ctx = d_out.ctx();
    PolyMatrix K(ctx, d_out.cols(), kernel.size());
    for (std::size_t j = 0; j < kernel.size(); ++j)
        for (std::size_t i = 0; i < kernel[j].size(); ++i) K.at(i, j) = kernel[j][i];
    AugmentedGB solver(K, opts);
    std::vector<ModVec> relations;
    for (std::size_t j = 0; j < d_in.cols(); ++j) {
        auto rep = solver.solve(d_in.column(j));
        if (!rep)
            throw MathError("boundary not inside the kernel (d^2 != 0?)");
        relations.push_back(*rep);
    }
    for (auto& s : solver.syzygies()) relations.push_back(s);
    PolyMatrix R(ctx, kernel.size(), relations.size());
    for (std::size_t j = 0; j < relations.size(); ++j)
        for (std::size_t i = 0; i < relations[j].size(); ++i) R.at(i, j) = relations[j][i];
    return quotient_k_dim(R, opts);
}

} // namespace

StableDims hom_cohomology_dims(const MatrixFactorization& e,
                               const MatrixFactorization& f, const GBOptions& opts) {
    if (!(e.lg == f.lg)) throw MathError("hom cohomology over different LG pairs");
    PolyMatrix d_even = hom_operator_matrix(e, f, Parity::Even);
    PolyMatrix d_odd = hom_operator_matrix(e, f, Parity::Odd);
    StableDims dims;
    dims.even = cohomology_dim(d_even, d_odd, opts);
    dims.odd = cohomology_dim(d_odd, d_even, opts);
    return dims;
}

std::optional<GradedHom> null_homotopy_witness(const GradedHom& t, const GBOptions& opts) {
    if (!is_closed(t)) throw MathError("null-homotopy test of a non-closed morphism");
    Parity opposite = t.parity == Parity::Even ? Parity::Odd : Parity::Even;
    PolyMatrix D = hom_operator_matrix(*t.source, *t.target, opposite);
    auto sol = solve_linear(D, flatten_hom(t), opts);
    if (!sol) return std::nullopt;
    GradedHom s = unflatten_hom(*t.source, *t.target, opposite, *sol);
    // the witness is certified, not trusted
    GradedHom check = hom_diff(s);
    if (!(check.a0 == t.a0 && check.a1 == t.a1))
        throw MathError("internal: null-homotopy certificate failed");
    return s;
}

bool is_null_homotopic(const GradedHom& t, const GBOptions& opts) {
    return null_homotopy_witness(t, opts).has_value();
}

std::vector<GradedHom> closed_hom_generators(const MatrixFactorization& e,
                                             const MatrixFactorization& f,
                                             Parity p, const GBOptions& opts) {
    PolyMatrix d = hom_operator_matrix(e, f, p);
    std::vector<GradedHom> out;
    for (auto& v : syzygy_generators(d, opts)) out.push_back(unflatten_hom(e, f, p, v));
    return out;
}

MatrixFactorization box_product(const MatrixFactorization& e,
                                const MatrixFactorization& f) {
    RingCtxPtr ctx = std::make_shared<const RingCtx>(
        RingCtx::product(*e.lg.ctx, *f.lg.ctx));
    PolyMatrix e0 = PolyMatrix::identity(ctx, e.rank0);
    PolyMatrix e1 = PolyMatrix::identity(ctx, e.rank1);
    PolyMatrix f0 = PolyMatrix::identity(ctx, f.rank0);
    PolyMatrix f1 = PolyMatrix::identity(ctx, f.rank1);
    PolyMatrix ed0 = e.d0.embed(ctx), ed1 = e.d1.embed(ctx);
    PolyMatrix fd0 = f.d0.embed(ctx), fd1 = f.d1.embed(ctx);

    // even = E0F0 ⊕ E1F1, odd = E1F0 ⊕ E0F1
    std::vector<std::size_t> even_sizes{e.rank0 * f.rank0, e.rank1 * f.rank1};
    std::vector<std::size_t> odd_sizes{e.rank1 * f.rank0, e.rank0 * f.rank1};

    BlockMatrix d0(ctx, odd_sizes, even_sizes);
    d0.set(0, 0, PolyMatrix::kronecker(ed0, f0));
    d0.set(1, 0, PolyMatrix::kronecker(e0, fd0));
    d0.set(1, 1, PolyMatrix::kronecker(ed1, f1));
    d0.set(0, 1, -PolyMatrix::kronecker(e1, fd1));

    BlockMatrix d1(ctx, even_sizes, odd_sizes);
    d1.set(0, 0, PolyMatrix::kronecker(ed1, f0));
    d1.set(1, 0, -PolyMatrix::kronecker(e1, fd0));
    d1.set(0, 1, PolyMatrix::kronecker(e0, fd1));
    d1.set(1, 1, PolyMatrix::kronecker(ed0, f1));

    LGPair lg(ctx, e.lg.f.embed(ctx) + f.lg.f.embed(ctx));
    return new_mf(lg, d0.assemble(), d1.assemble());
}

MatrixFactorization base_change_mf(const MatrixFactorization& e,
                                   const std::map<std::string, Poly>& images,
                                   const RingCtxPtr& target) {
    auto sub = [&](const Poly& p) { return p.substitute(images, target); };
    LGPair lg(target, sub(e.lg.f));
    PolyMatrix d0(target, e.d0.rows(), e.d0.cols());
    PolyMatrix d1(target, e.d1.rows(), e.d1.cols());
    for (std::size_t i = 0; i < d0.rows(); ++i)
        for (std::size_t j = 0; j < d0.cols(); ++j) d0.at(i, j) = sub(e.d0.at(i, j));
    for (std::size_t i = 0; i < d1.rows(); ++i)
        for (std::size_t j = 0; j < d1.cols(); ++j) d1.at(i, j) = sub(e.d1.at(i, j));
    return new_mf(lg, std::move(d0), std::move(d1));
}

} // namespace lgcat
