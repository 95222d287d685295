#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "degfn/laurent.hpp"
#include "degfn/rational.hpp"
#include "degfn/sampling.hpp"

using namespace degfn;
using LS = LaurentSeries<Rational>;

static LS random_series(Rng& rng, int low, int prec) {
    std::vector<Rational> c((std::size_t)(prec - low));
    for (auto& q : c) q = random_rational(rng, 5);
    return LS(low, std::move(c), prec);
}

TEST_CASE("construction and ord") {
    LS x = LS::monomial(Rational(1), -2);
    CHECK(x.ord() == -2);
    CHECK(x.is_exact());
    CHECK(x.leading_coeff() == Rational(1));

    LS z;
    CHECK(z.is_exactly_zero());
    CHECK_THROWS_AS(z.ord(), PrecisionExhausted);

    // leading exact zeros are skipped, unknown tail is not guessed
    LS f(0, {Rational(0), Rational(0), Rational(3)}, 3);
    CHECK(f.ord() == 2);
    LS g(0, {Rational(0), Rational(0), Rational(0)}, 3);
    CHECK_THROWS_AS(g.ord(), PrecisionExhausted);
}

TEST_CASE("arithmetic") {
    LS x = LS::monomial(Rational(1), 1);
    LS one = LS::constant(Rational(1));
    LS f = one + x;                 // 1 + t
    CHECK((f * f).coeff(1) == Rational(2));
    CHECK(f.pow(3).coeff(2) == Rational(3));
    CHECK((f - f).is_exactly_zero());
    CHECK((-f).coeff(0) == Rational(-1));
}

TEST_CASE("precision propagation") {
    // f known modulo t^3, g exact: product known modulo t^(3+ord g)
    LS f(0, {Rational(1), Rational(1), Rational(1)}, 3);
    LS g = LS::monomial(Rational(1), 2);
    LS p = f * g;
    CHECK(p.prec_bound() == 5);
    CHECK(p.ord() == 2);
    // sum takes the weaker bound
    LS h(0, {Rational(1)}, 1);
    CHECK((f + h).prec_bound() == 1);
    // multiplying truncated by truncated
    LS q = f * f;
    CHECK(q.prec_bound() == 3);
    CHECK(q.coeff(2) == Rational(3));
}

TEST_CASE("ord additivity under multiplication") {
    for (std::uint64_t i = 0; i < 200; ++i) {
        Rng rng = Rng::for_sample(11, i);
        LS f = random_series(rng, (int)rng.int_in(-5, 0), (int)rng.int_in(3, 8));
        LS g = random_series(rng, (int)rng.int_in(-5, 0), (int)rng.int_in(3, 8));
        auto of = f.try_ord();
        auto og = g.try_ord();
        if (!of || !og) continue;
        auto op = (f * g).try_ord();
        REQUIRE(op.has_value());
        CHECK(*op == *of + *og);
    }
}

TEST_CASE("substitution is a ring homomorphism") {
    using P = Polynomial<Rational>;
    for (std::uint64_t i = 0; i < 100; ++i) {
        Rng rng = Rng::for_sample(12, i);
        P f = random_rational_poly<Rational>(rng, 2, 3, 3, false);
        P g = random_rational_poly<Rational>(rng, 2, 3, 3, false);
        std::vector<LS> args{random_series(rng, -2, 4), random_series(rng, 0, 5)};
        LS lhs_mul = substitute(f * g, args);
        LS rhs_mul = substitute(f, args) * substitute(g, args);
        CHECK(agree(lhs_mul, rhs_mul));
        CHECK(lhs_mul.prec_bound() >= rhs_mul.prec_bound());  // never claims more than computed
        CHECK(agree(substitute(f + g, args), substitute(f, args) + substitute(g, args)));
    }
}

TEST_CASE("recomputing at higher precision preserves determined coefficients") {
    using P = Polynomial<Rational>;
    for (std::uint64_t i = 0; i < 100; ++i) {
        Rng rng = Rng::for_sample(13, i);
        P f = random_rational_poly<Rational>(rng, 1, 4, 4, false);
        // the same underlying series at two precisions
        std::vector<Rational> c;
        for (int k = 0; k < 10; ++k) c.push_back(random_rational(rng, 5));
        LS lo(-3, std::vector<Rational>(c.begin(), c.begin() + 6), 3);
        LS hi(-3, c, 7);
        LS flo = substitute(f, std::vector<LS>{lo});
        LS fhi = substitute(f, std::vector<LS>{hi});
        CHECK(agree(flo, fhi));
        CHECK(fhi.prec_bound() >= flo.prec_bound());
    }
}

TEST_CASE("rendering") {
    LS f(-2, {Rational(1), Rational(0), Rational(3)}, 1);
    CHECK(f.str() == "(1)*t^-2 + (3) + O(t^1)");
    CHECK(LS().str() == "0");
}
