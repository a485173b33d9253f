#include "lgcat/groebner.hpp"

#include <algorithm>
#include <map>

namespace lgcat {

bool modvec_is_zero(const ModVec& v) {
    for (const auto& p : v)
        if (!p.is_zero()) return false;
    return true;
}

ModVec modvec_add(const ModVec& a, const ModVec& b) {
    ModVec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] + b[i];
    return r;
}

ModVec modvec_sub(const ModVec& a, const ModVec& b) {
    ModVec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] - b[i];
    return r;
}

ModVec modvec_mul_term(const ModVec& a, const Monomial& m, const Scalar& c) {
    ModVec r;
    r.reserve(a.size());
    for (const auto& p : a) r.push_back(p.mul_term(m, c));
    return r;
}

namespace {

struct ModLead {
    std::size_t comp;
    Monomial mono;
    Scalar coeff;
};

// position-over-term: lower component index dominates
std::optional<ModLead> mod_lead(const ModVec& v) {
    for (std::size_t c = 0; c < v.size(); ++c)
        if (!v[c].is_zero()) {
            const Term& t = v[c].leading();
            return ModLead{c, t.mono, t.coeff};
        }
    return std::nullopt;
}

ModVec make_monic(const ModVec& v) {
    auto l = mod_lead(v);
    if (!l) return v;
    Scalar inv = l->coeff.inv();
    ModVec r;
    r.reserve(v.size());
    for (const auto& p : v) r.push_back(p.mul_scalar(inv));
    return r;
}

bool supported_only_in(const ModVec& v, std::size_t comp) {
    for (std::size_t c = 0; c < v.size(); ++c)
        if (c != comp && !v[c].is_zero()) return false;
    return true;
}

} // namespace

ModVec GroebnerBasis::normal_form(const ModVec& v) const {
    if (v.size() != rank_) throw MathError("normal_form: rank mismatch");
    ModVec r(rank_, Poly::zero(ctx_));
    ModVec p = v;
    while (true) {
        auto l = mod_lead(p);
        if (!l) break;
        bool reduced = false;
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            if (leads_[i].comp != l->comp) continue;
            if (!mono_divides(leads_[i].mono, l->mono)) continue;
            Monomial q = mono_div(l->mono, leads_[i].mono);
            p = modvec_sub(p, modvec_mul_term(gens_[i], q, l->coeff));
            reduced = true;
            break;
        }
        if (!reduced) {
            // move the irreducible leading term to the remainder
            Poly t = Poly::monomial(ctx_, l->mono, l->coeff);
            r[l->comp] = r[l->comp] + t;
            p[l->comp] = p[l->comp] - t;
        }
    }
    return r;
}

GroebnerBasis GroebnerBasis::compute(const std::vector<ModVec>& gens, std::size_t rank,
                                     RingCtxPtr ctx, const GBOptions& opts,
                                     bool use_product_criterion) {
    GroebnerBasis gb;
    gb.ctx_ = std::move(ctx);
    gb.rank_ = rank;

    for (const auto& g : gens) {
        if (g.size() != rank) throw MathError("groebner: generator rank mismatch");
        if (modvec_is_zero(g)) continue;
        gb.gens_.push_back(make_monic(g));
        auto l = mod_lead(gb.gens_.back());
        gb.leads_.push_back(Lead{l->comp, l->mono});
    }

    // pending S-pairs keyed by lcm total degree (normal selection strategy)
    std::multimap<std::int64_t, std::pair<std::size_t, std::size_t>> pairs;
    auto push_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            if (gb.leads_[i].comp != gb.leads_[j].comp) continue;
            if (use_product_criterion &&
                supported_only_in(gb.gens_[i], gb.leads_[i].comp) &&
                supported_only_in(gb.gens_[j], gb.leads_[j].comp)) {
                Monomial l = mono_lcm(gb.leads_[i].mono, gb.leads_[j].mono);
                if (l == mono_mul(gb.leads_[i].mono, gb.leads_[j].mono))
                    continue;
            }
            Monomial l = mono_lcm(gb.leads_[i].mono, gb.leads_[j].mono);
            pairs.emplace(total_degree(l), std::make_pair(i, j));
        }
    };
    for (std::size_t j = 0; j < gb.gens_.size(); ++j) push_pairs(j);

    std::size_t processed = 0;
    while (!pairs.empty()) {
        if (++processed > opts.max_pairs)
            throw ResourceCapExceeded("S-pair budget exceeded");
        auto it = pairs.begin();
        auto [i, j] = it->second;
        pairs.erase(it);

        Monomial l = mono_lcm(gb.leads_[i].mono, gb.leads_[j].mono);
        Scalar one = Scalar::one(gb.ctx_->field);
        ModVec s = modvec_sub(
            modvec_mul_term(gb.gens_[i], mono_div(l, gb.leads_[i].mono), one),
            modvec_mul_term(gb.gens_[j], mono_div(l, gb.leads_[j].mono), one));
        ModVec r = gb.normal_form(s);
        if (modvec_is_zero(r)) continue;
        if (gb.gens_.size() >= opts.max_basis)
            throw ResourceCapExceeded("basis size budget exceeded");
        gb.gens_.push_back(make_monic(r));
        auto lr = mod_lead(gb.gens_.back());
        gb.leads_.push_back(Lead{lr->comp, lr->mono});
        push_pairs(gb.gens_.size() - 1);
    }

    // self-reduction: drop redundant leads, then tail-reduce
    std::vector<bool> keep(gb.gens_.size(), true);
    for (std::size_t i = 0; i < gb.gens_.size(); ++i)
        for (std::size_t j = 0; j < gb.gens_.size(); ++j) {
            if (i == j || !keep[i] || !keep[j]) continue;
            if (gb.leads_[j].comp == gb.leads_[i].comp &&
                mono_divides(gb.leads_[j].mono, gb.leads_[i].mono) &&
                !(gb.leads_[j].mono == gb.leads_[i].mono && j > i))
                keep[i] = false;
        }
    GroebnerBasis out;
    out.ctx_ = gb.ctx_;
    out.rank_ = rank;
    for (std::size_t i = 0; i < gb.gens_.size(); ++i)
        if (keep[i]) {
            out.gens_.push_back(gb.gens_[i]);
            out.leads_.push_back(gb.leads_[i]);
        }
    for (std::size_t i = 0; i < out.gens_.size(); ++i) {
        GroebnerBasis rest;
        rest.ctx_ = out.ctx_;
        rest.rank_ = rank;
        for (std::size_t j = 0; j < out.gens_.size(); ++j)
            if (j != i) {
                rest.gens_.push_back(out.gens_[j]);
                rest.leads_.push_back(out.leads_[j]);
            }
        out.gens_[i] = make_monic(rest.normal_form(out.gens_[i]));
    }
    return out;
}

AugmentedGB::AugmentedGB(const PolyMatrix& M, const GBOptions& opts)
    : top_(M.rows()), bottom_(M.cols()) {
    std::vector<ModVec> gens;
    for (std::size_t j = 0; j < M.cols(); ++j) {
        ModVec g(top_ + bottom_, Poly::zero(M.ctx()));
        for (std::size_t i = 0; i < top_; ++i) g[i] = M.at(i, j);
        g[top_ + j] = Poly::from_long(M.ctx(), 1);
        gens.push_back(std::move(g));
    }
    // criteria disabled: every S-pair reduction contributes to the syzygy part
    gb_ = GroebnerBasis::compute(gens, top_ + bottom_, M.ctx(), opts, false);
}

std::vector<ModVec> AugmentedGB::syzygies() const {
    std::vector<ModVec> out;
    for (const auto& g : gb_.generators()) {
        bool top_zero = true;
        for (std::size_t i = 0; i < top_; ++i)
            if (!g[i].is_zero()) { top_zero = false; break; }
        if (!top_zero) continue;
        out.emplace_back(g.begin() + static_cast<std::ptrdiff_t>(top_), g.end());
    }
    return out;
}

std::optional<ModVec> AugmentedGB::solve(const ModVec& b) const {
    if (b.size() != top_) throw MathError("solve: dimension mismatch");
    ModVec v(top_ + bottom_, Poly::zero(gb_.ring()));
    for (std::size_t i = 0; i < top_; ++i) v[i] = b[i];
    ModVec r = gb_.normal_form(v);
    for (std::size_t i = 0; i < top_; ++i)
        if (!r[i].is_zero()) return std::nullopt;
    ModVec x;
    x.reserve(bottom_);
    for (std::size_t j = 0; j < bottom_; ++j) x.push_back(-r[top_ + j]);
    return x;
}

std::optional<ModVec> solve_linear(const PolyMatrix& M, const ModVec& b,
                                   const GBOptions& opts) {
    return AugmentedGB(M, opts).solve(b);
}

std::vector<ModVec> syzygy_generators(const PolyMatrix& M, const GBOptions& opts) {
    return AugmentedGB(M, opts).syzygies();
}

namespace {

struct LeadData {
    // leading monomials per component
    std::vector<std::vector<Monomial>> by_comp;
};

LeadData collect_leads(const GroebnerBasis& gb, std::size_t rank) {
    LeadData ld;
    ld.by_comp.resize(rank);
    for (const auto& l : gb.leads())
        ld.by_comp[l.comp].push_back(l.mono);
    return ld;
}

// standard monomials of one component, or nullopt when infinite
std::optional<std::vector<Monomial>>
standard_monomials(const std::vector<Monomial>& leads, std::size_t nvars) {
    if (nvars == 0) {
        if (leads.empty()) return std::vector<Monomial>{Monomial{}};
        return std::vector<Monomial>{};
    }
    if (leads.empty()) return std::nullopt;
    std::vector<std::int32_t> bound(nvars, -1);
    for (const auto& m : leads) {
        std::size_t support = 0, var = 0;
        for (std::size_t i = 0; i < nvars; ++i)
            if (m[i] > 0) { ++support; var = i; }
        if (support == 0) return std::vector<Monomial>{};  // unit in the ideal
        if (support == 1 && (bound[var] < 0 || m[var] < bound[var]))
            bound[var] = m[var];
    }
    std::uint64_t box = 1;
    for (std::size_t i = 0; i < nvars; ++i) {
        if (bound[i] < 0) return std::nullopt;
        box *= static_cast<std::uint64_t>(bound[i]);
        if (box > 10000000) throw ResourceCapExceeded("standard-monomial box too large");
    }
    std::vector<Monomial> out;
    Monomial cur(nvars, 0);
    for (;;) {
        bool divisible = false;
        for (const auto& m : leads)
            if (mono_divides(m, cur)) { divisible = true; break; }
        if (!divisible) out.push_back(cur);
        std::size_t i = 0;
        while (i < nvars) {
            if (++cur[i] < bound[i]) break;
            cur[i] = 0;
            ++i;
        }
        if (i == nvars) break;
    }
    return out;
}

} // namespace

DimOrInfinite quotient_k_dim(const PolyMatrix& presentation, const GBOptions& opts) {
    std::size_t rank = presentation.rows();
    std::vector<ModVec> gens;
    for (std::size_t j = 0; j < presentation.cols(); ++j)
        gens.push_back(presentation.column(j));
    auto gb = GroebnerBasis::compute(gens, rank, presentation.ctx(), opts);
    auto ld = collect_leads(gb, rank);
    std::uint64_t dim = 0;
    for (std::size_t c = 0; c < rank; ++c) {
        auto sm = standard_monomials(ld.by_comp[c], presentation.ctx()->nvars());
        if (!sm) return DimOrInfinite::infinite();
        dim += sm->size();
    }
    return DimOrInfinite::of(dim);
}

QuotientBasis::QuotientBasis(const PolyMatrix& presentation, const GBOptions& opts) {
    std::size_t rank = presentation.rows();
    std::vector<ModVec> gens;
    for (std::size_t j = 0; j < presentation.cols(); ++j)
        gens.push_back(presentation.column(j));
    gb_ = GroebnerBasis::compute(gens, rank, presentation.ctx(), opts);
    auto ld = collect_leads(gb_, rank);
    for (std::size_t c = 0; c < rank; ++c) {
        auto sm = standard_monomials(ld.by_comp[c], presentation.ctx()->nvars());
        if (!sm) { finite_ = false; basis_.clear(); return; }
        for (auto& m : *sm) basis_.emplace_back(c, std::move(m));
    }
}

std::vector<Scalar> QuotientBasis::coordinates(const ModVec& v) const {
    if (!finite_) throw MathError("coordinates in an infinite-dimensional quotient");
    ModVec r = gb_.normal_form(v);
    std::vector<Scalar> out(basis_.size(), Scalar::zero(gb_.ring()->field));
    for (std::size_t c = 0; c < r.size(); ++c) {
        for (const auto& t : r[c].terms()) {
            bool found = false;
            for (std::size_t k = 0; k < basis_.size(); ++k)
                if (basis_[k].first == c && basis_[k].second == t.mono) {
                    out[k] = t.coeff;
                    found = true;
                    break;
                }
            if (!found)
                throw MathError("normal form outside the standard-monomial basis");
        }
    }
    return out;
}

} // namespace lgcat
