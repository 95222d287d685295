#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "degfn/construction_a.hpp"
#include "degfn/construction_b.hpp"

using namespace degfn;

TEST_CASE("construction A: witness table with all a_j = 1") {
    ConstructionA ca;
    auto rows = ca.witness(10);
    REQUIRE(rows.size() == 11);
    for (int n = 0; n <= 10; ++n) {
        CHECK(rows[(std::size_t)n].n == n);
        CHECK(rows[(std::size_t)n].deg_g == 0);
        CHECK(rows[(std::size_t)n].delta == n);
    }
}

TEST_CASE("construction A: g_0 = y and the derivative image") {
    ConstructionA ca;
    CHECK(ca.g(0) == ca.y());
    // d g_n / dy = x^n
    for (int n = 0; n <= 5; ++n)
        CHECK(ca.d_dy().apply(ca.g(n)) == ca.x().pow((unsigned)n));
}

TEST_CASE("construction A: zero coefficients are skipped") {
    // a_1 = 0: row n=1 is not emitted, the others still hold
    ConstructionA ca([](int j) { return j == 1 ? Rational(0) : Rational(1); });
    auto rows = ca.witness(4);
    REQUIRE(rows.size() == 4);
    for (const auto& r : rows) {
        CHECK(r.n != 1);
        CHECK(r.deg_g == 0);
        CHECK(r.delta == r.n);
    }
}

TEST_CASE("construction A: truncation too small surfaces precision error") {
    ConstructionA ca(ConstructionA::all_ones, 4, 4);
    CHECK_THROWS_AS(ca.witness(10), PrecisionExhausted);
}

TEST_CASE("construction B: build solves the a_p") {
    ConstructionB cb = ConstructionB::build(5, 36);
    CHECK(cb.horizon() == 7);
    CHECK(cb.level() == 8);

    // a_0 = e_0 = sqrt(s-1)
    CHECK(cb.a(0) == cb.e(0));
    CHECK(cb.a(0) * cb.a(0) == MultiQuad(RatFunc::s_minus(1)));

    // a_1 = e_1 / (2 a_0): single coordinate at mu({1,2}) with value 1/(2(s-1))
    MultiQuad a1 = cb.a(1);
    CHECK(MultiQuad(2) * cb.a(0) * a1 == cb.e(1));
    CHECK(a1.coords().size() == 1);
    CHECK(a1.coord(0b11u) == RatFunc(UPoly(1), UPoly(2) * (UPoly::variable() - UPoly(1))));

    // a_2 solves e_2 = 4 a_0 a_1^3 + 8 a_0^2 a_1 a_2  (f_{2,2} written out)
    MultiQuad lhs = MultiQuad(4) * cb.a(0) * a1 * a1 * a1;
    CHECK(lhs + MultiQuad(8) * cb.a(0) * cb.a(0) * a1 * cb.a(2) == cb.e(2));
}

TEST_CASE("construction B: f polynomial recursion") {
    ConstructionB cb = ConstructionB::build(3, 36);
    using PQ = Polynomial<Rational>;
    std::size_t vc = (std::size_t)cb.horizon() + 2;
    PQ X0 = PQ::variable(vc, 0), X1 = PQ::variable(vc, 1), X2 = PQ::variable(vc, 2);
    CHECK(cb.f_poly(0, 0) == X0);
    CHECK(cb.f_poly(1, 1) == Rational(2) * X0 * X1);
    CHECK(cb.f_poly(1, 2) == Rational(2) * X0 * X2 + X1 * X1);
    CHECK(cb.f_poly(2, 2) == Rational(4) * X0 * X1.pow(3) + Rational(8) * X0 * X0 * X1 * X2);
}

TEST_CASE("construction B: series leading terms") {
    ConstructionB cb = ConstructionB::build(5, 36);
    CHECK(cb.x_series().ord() == -2);
    // every y_p has ord -3 with leading coefficient e_p
    for (int p = 0; p <= 5; ++p) {
        const auto& yp = cb.y_p_series(p);
        CHECK(yp.ord() == -3);
        CHECK(yp.leading_coeff() == cb.e(p));
    }
    // image via expansion agrees with the recursion series
    for (int p = 0; p <= 5; ++p) CHECK(agree(cb.image(cb.F(p)), cb.y_p_series(p)));
}

TEST_CASE("construction B: witness table") {
    ConstructionB cb = ConstructionB::build(5, 36);
    auto rows = cb.witness(5);
    REQUIRE(rows.size() == 6);
    for (int p = 0; p <= 5; ++p) {
        CHECK(rows[(std::size_t)p].deg_y == 3);
        CHECK(rows[(std::size_t)p].deg_dy == 3 * p);
        CHECK(rows[(std::size_t)p].delta == 3 * p - 3);
    }
}

TEST_CASE("construction B: degrees of simple elements") {
    ConstructionB cb = ConstructionB::build(3, 36);
    using P1 = ConstructionB::P1;
    P1 x = P1::variable(2, 0);
    P1 y = P1::variable(2, 1);
    CHECK(cb.degree(x) == GroupValue(2));
    CHECK(cb.degree(y) == GroupValue(3));
    CHECK(cb.degree(P1::constant(2, RatFunc(1))) == GroupValue(0));
    CHECK(cb.degree(P1(2)).is_minus_infinity());
    CHECK(cb.degree(x * x * y) == GroupValue(7));
}

TEST_CASE("construction B: value monoid") {
    ConstructionB cb = ConstructionB::build(3, 36);
    auto rep = cb.monoid_check(200, 1234);
    CHECK(rep.samples == 200);
    CHECK(rep.precision_errors == 0);
    CHECK(rep.failures.empty());
}

TEST_CASE("construction B: the negative-degree element over the full tower") {
    ConstructionB cb = ConstructionB::build(5, 36);
    auto [w, deg] = cb.negative_degree_element();
    CHECK(!w.is_zero());
    CHECK(deg == GroupValue(-3));
    LaurentSeries<MultiQuad> s = cb.image(w);
    CHECK(s.ord() == 3);
    CHECK(s.leading_coeff() == MultiQuad(2) * cb.a(0) * cb.a(3));
}

TEST_CASE("construction B: axioms for the pulled-back degree functions") {
    ConstructionB cb = ConstructionB::build(3, 36);
    B1Degree df(cb);
    auto sampler = [](Rng& rng) {
        return random_poly<RatFunc>(
            rng, 2, 4, 3, [](Rng& r) { return RatFunc(random_rational(r)); }, false);
    };
    AxiomReport rep =
        check_axioms<B1Degree, RatFunc>("laurentB1", df, sampler, {"x", "y"}, 200, 77);
    CHECK(rep.passed());
    CHECK(rep.precision_errors == 0);
}

TEST_CASE("construction B: distinct polynomials have distinct images") {
    ConstructionB cb = ConstructionB::build(3, 36);
    using P1 = ConstructionB::P1;
    std::vector<P1> polys;
    for (std::uint64_t i = 0; i < 40; ++i) {
        Rng rng = Rng::for_sample(55, i);
        polys.push_back(random_poly<RatFunc>(
            rng, 2, 3, 3, [](Rng& r) { return RatFunc(random_rational(r)); }, true));
    }
    for (std::size_t i = 0; i < polys.size(); ++i)
        for (std::size_t j = i + 1; j < polys.size(); ++j) {
            if (polys[i] == polys[j]) continue;
            CHECK(!agree(cb.image(polys[i]), cb.image(polys[j])));
        }
}

TEST_CASE("construction B: parameter validation") {
    CHECK_THROWS_AS(ConstructionB::build(-1, 36), PreconditionError);
    CHECK_THROWS_AS(ConstructionB::build(10, 36), ConstructionError);  // window too small
    ConstructionB cb = ConstructionB::build(2, 36);
    CHECK_THROWS_AS(cb.witness(3), PreconditionError);
    CHECK_THROWS_AS(ConstructionB::build(2, 36).w_element(), PreconditionError);
}
