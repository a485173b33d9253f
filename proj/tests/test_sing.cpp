#include <doctest.h>

#include "lgcat/sing.hpp"
#include "test_util.hpp"

using namespace lgcat;
using lgcat::testutil::mat;

namespace {

RingCtxPtr point_ring() { return make_ring(Field::rationals(), {}); }

LGPair point_pair() {
    auto pt = point_ring();
    return LGPair(pt, Poly::zero(pt));
}

KoszulModule k_rep() {
    auto ctx = make_ring(Field::rationals(), {"x"});
    LGPair lg(ctx, parse_poly("x^2", ctx));
    return new_koszul(lg, -1, {1, 1}, {mat(ctx, {{"x"}}), PolyMatrix(ctx, 0, 1)},
                      {PolyMatrix(ctx, 0, 1), mat(ctx, {{"x"}})});
}

} // namespace

TEST_CASE("stable hom dims through folding") {
    KoszulModule m = k_rep();
    CHECK(stable_hom_dims(m, m) == StableDims{DimOrInfinite::of(1),
                                              DimOrInfinite::of(1)});
    KoszulModule triv = trivial_koszul(point_ring());
    CHECK(stable_hom_dims(triv, triv) == StableDims{DimOrInfinite::of(1),
                                                    DimOrInfinite::of(0)});
}

TEST_CASE("perfectness dichotomy") {
    auto pt = point_ring();
    // perfect: the algebra itself, telescopes, cones of identities
    for (const KoszulModule& m :
         {koszul_algebra(point_pair()), telescope(pt, 2), telescope(pt, 3),
          koszul_cone(identity_koszul_hom(trivial_koszul(pt)))}) {
        PerfectCertificate c = is_perfect(m);
        CHECK(c.perfect);
        REQUIRE(c.witness.has_value());
        GradedHom back = hom_diff(*c.witness);
        GradedHom id = identity_hom(*c.folded);
        CHECK(back.a0 == id.a0);
        CHECK(back.a1 == id.a1);
    }
    // not perfect: the trivial module and the k-representative
    CHECK(!is_perfect(trivial_koszul(pt)).perfect);
    CHECK(!is_perfect(k_rep()).perfect);
}

TEST_CASE("perfect modules have vanishing stable endomorphisms") {
    KoszulModule k = koszul_algebra(point_pair());
    CHECK(stable_hom_dims(k, k) == StableDims{DimOrInfinite::of(0),
                                              DimOrInfinite::of(0)});
}

TEST_CASE("u-torsion orders in the point case") {
    auto pt = point_ring();
    UTorsionResult r = u_torsion_order_point(koszul_algebra(point_pair()), 5);
    CHECK(r.found);
    CHECK(r.order == 1);
    r = u_torsion_order_point(telescope(pt, 2), 5);
    CHECK(r.found);
    CHECK(r.order == 2);
    r = u_torsion_order_point(trivial_koszul(pt), 5);
    CHECK(!r.found);
    CHECK(r.max_tested == 5);
}

TEST_CASE("milnor numbers of the standard corpus") {
    auto cx = make_ring(Field::rationals(), {"x"});
    for (int n = 2; n <= 6; ++n)
        CHECK(milnor_number(parse_poly("x^" + std::to_string(n), cx)) ==
              DimOrInfinite::of(std::uint64_t(n - 1)));
    auto cxy = make_ring(Field::rationals(), {"x", "y"});
    CHECK(milnor_number(parse_poly("x^2 + y^2", cxy)) == DimOrInfinite::of(1));
    CHECK(milnor_number(parse_poly("x^3 + y^2", cxy)) == DimOrInfinite::of(2));
    CHECK(milnor_number(parse_poly("x*y", cxy)) == DimOrInfinite::of(1));
    CHECK(milnor_number(parse_poly("x^2*y", cxy)) == DimOrInfinite::infinite());
}

TEST_CASE("brute-force jacobian oracle agrees") {
    auto cxy = make_ring(Field::rationals(), {"x", "y"});
    struct Case { const char* f; std::uint64_t mu; };
    for (Case c : {Case{"x^2 + y^2", 1}, Case{"x^3 + y^2", 2}, Case{"x*y", 1},
                   Case{"x^3 + y^3", 4}}) {
        Poly f = parse_poly(c.f, cxy);
        std::uint64_t d8 = testutil::jacobian_dim_truncated(f, 8);
        std::uint64_t d10 = testutil::jacobian_dim_truncated(f, 10);
        CHECK(d8 == d10);  // stabilized
        CHECK(d10 == c.mu);
        CHECK(milnor_number(f) == DimOrInfinite::of(c.mu));
    }
    // non-isolated: the truncated dimension keeps growing
    Poly bad = parse_poly("x^2*y", cxy);
    CHECK(testutil::jacobian_dim_truncated(bad, 10) >
          testutil::jacobian_dim_truncated(bad, 8));
}

TEST_CASE("milnor characteristic guard") {
    auto c3 = make_ring(Field::prime(3), {"x"});
    CHECK_THROWS_AS(milnor_number(parse_poly("x^5", c3)), MathError);
    auto c101 = make_ring(Field::prime(101), {"x"});
    CHECK(milnor_number(parse_poly("x^5", c101)) == DimOrInfinite::of(4));
}

TEST_CASE("thom-sebastiani multiplicativity") {
    auto cx = make_ring(Field::rationals(), {"x"});
    auto cy = make_ring(Field::rationals(), {"y"});
    struct Case { const char* f; const char* g; std::uint64_t prod; };
    for (Case c : {Case{"x^2", "y^2", 1}, Case{"x^3", "y^2", 2},
                   Case{"x^3", "y^3", 4}}) {
        TSReport r = thom_sebastiani_check(parse_poly(c.f, cx),
                                           parse_poly(c.g, cy));
        CHECK(r.multiplicative);
        CHECK(r.mu_sum == DimOrInfinite::of(c.prod));
        CHECK(!r.kunneth_ok.has_value());
    }
}

TEST_CASE("kunneth check on box products") {
    auto cx = make_ring(Field::rationals(), {"x"});
    auto cy = make_ring(Field::rationals(), {"y"});
    LGPair lgx(cx, parse_poly("x^2", cx));
    LGPair lgy(cy, parse_poly("y^2", cy));
    auto ex = new_mf(lgx, mat(cx, {{"x"}}), mat(cx, {{"x"}}));
    auto ey = new_mf(lgy, mat(cy, {{"y"}}), mat(cy, {{"y"}}));
    TSReport r = thom_sebastiani_check(lgx.f, lgy.f, &ex, &ey);
    REQUIRE(r.kunneth_ok.has_value());
    CHECK(*r.kunneth_ok);
    CHECK(r.kunneth_direct == StableDims{DimOrInfinite::of(2),
                                         DimOrInfinite::of(2)});
    CHECK(r.kunneth_direct == r.kunneth_expected);
}

TEST_CASE("stable dims are invariant under renaming variables") {
    auto cxy = make_ring(Field::rationals(), {"x", "y"});
    LGPair lg(cxy, parse_poly("x^2 + y^3", cxy));
    auto e = new_mf(lg, mat(cxy, {{"x", "y"}, {"y^2", "-x"}}),
                    mat(cxy, {{"x", "y"}, {"y^2", "-x"}}));
    auto cvu = make_ring(Field::rationals(), {"v", "u"});
    auto moved = base_change_mf(
        e, {{"x", parse_poly("u", cvu)}, {"y", parse_poly("v", cvu)}}, cvu);
    CHECK(hom_cohomology_dims(e, e) == hom_cohomology_dims(moved, moved));
}

TEST_CASE("point-case consistency report") {
    for (Field f : {Field::rationals(), Field::prime(101)}) {
        SingReport r = point_case_report(f, 5);
        CHECK(r.stable_end == StableDims{DimOrInfinite::of(1),
                                         DimOrInfinite::of(0)});
        CHECK(!r.perfect);
        CHECK(r.au_pattern_ok);
        CHECK(r.torsion_free_ok);
    }
}
