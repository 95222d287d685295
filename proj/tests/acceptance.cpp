// Acceptance suite: one line per criterion, nonzero exit if any fails.
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "degfn/construction_a.hpp"
#include "degfn/construction_b.hpp"
#include "degfn/degree.hpp"
#include "degfn/expand.hpp"
#include "degfn/sampling.hpp"

using namespace degfn;
using P = Polynomial<Rational>;
using P1 = ConstructionB::P1;

namespace {

struct Check {
    bool ok = true;
    std::string detail;
    void require(bool cond, const std::string& msg) {
        if (!cond && ok) {
            ok = false;
            detail = msg;
        }
    }
};

bool criterion_wild_b(const ConstructionB& cb) {
    Check c;
    auto rows = cb.witness(5);
    c.require(rows.size() == 6, "row count");
    for (const auto& r : rows) {
        c.require(r.deg_y == 3, "deg y_p != 3 at p=" + std::to_string(r.p));
        c.require(r.delta == 3 * r.p - 3, "delta != 3p-3 at p=" + std::to_string(r.p));
    }
    if (!c.ok) std::cerr << "  " << c.detail << "\n";
    return c.ok;
}

bool criterion_monoid(const ConstructionB& cb) {
    auto rep = cb.monoid_check(200, 20240817);
    if (!rep.passed()) {
        for (const auto& f : rep.failures)
            std::cerr << "  degree " << f.degree << " for " << f.input << "\n";
        std::cerr << "  precision errors: " << rep.precision_errors << "\n";
    }
    return rep.passed();
}

bool criterion_w_element(const ConstructionB& cb) {
    Check c;
    auto [w, deg] = cb.negative_degree_element();
    c.require(deg == GroupValue(-3), "deg w = " + deg.str());
    auto s = cb.image(w);
    c.require(s.ord() == 3, "ord != 3");
    c.require(s.leading_coeff() == MultiQuad(2) * cb.a(0) * cb.a(3),
              "leading coefficient != 2 a0 a3");
    if (!c.ok) std::cerr << "  " << c.detail << "\n";
    return c.ok;
}

bool criterion_wild_a() {
    Check c;
    ConstructionA ca;
    auto rows = ca.witness(10);
    c.require(rows.size() == 11, "row count");
    for (const auto& r : rows) {
        c.require(r.deg_g == 0, "deg g_n != 0 at n=" + std::to_string(r.n));
        c.require(r.delta == r.n, "delta != n at n=" + std::to_string(r.n));
    }
    if (!c.ok) std::cerr << "  " << c.detail << "\n";
    return c.ok;
}

bool criterion_graded_tame() {
    Check c;
    Weighting w = Weighting::from_ints({2, 3});
    P x = P::variable(2, 0), y = P::variable(2, 1);
    Derivation<Rational> ddy = Derivation<Rational>::partial(2, 1);
    TameResult r = deg_of_derivation_graded(w, {}, {x, y}, ddy);
    c.require(r.value == GroupValue(-3), "deg(D) = " + r.value.str());
    GradedDegree<Rational> df(w);
    bool attained = false;
    for (std::uint64_t i = 0; i < 500; ++i) {
        Rng rng = Rng::for_sample(501, i);
        P f = random_rational_poly<Rational>(rng, 2, 5, 4);
        GroupValue dl = delta(df, ddy, f);
        c.require(dl <= r.value, "delta above deg(D)");
        if (dl == r.value) attained = true;
    }
    c.require(attained, "equality never attained");
    if (!c.ok) std::cerr << "  " << c.detail << "\n";
    return c.ok;
}

bool criterion_lnd_tame() {
    Check c;
    P z = P::variable(2, 0), t = P::variable(2, 1);
    Derivation<Rational> dt = Derivation<Rational>::partial(2, 1);
    Derivation<Rational> d(std::vector<P>{z, t * t});
    TameResult r = deg_of_derivation_lnd(dt, t, {z}, d);
    c.require(r.value == GroupValue(1), "formula value = " + r.value.str());
    // ker-only evaluation misses the slice contribution
    LndDegree<Rational> df(dt);
    GroupValue ker_only = delta(df, d, z);
    c.require(ker_only == GroupValue(0), "ker-only value = " + ker_only.str());
    c.require(ker_only != r.value, "ker-only value should differ");
    if (!c.ok) std::cerr << "  " << c.detail << "\n";
    return c.ok;
}

bool criterion_expansion() {
    Check c;
    for (std::uint64_t i = 0; i < 200 && c.ok; ++i) {
        Rng rng = Rng::for_sample(700, i);
        std::vector<P> a;
        for (int k = 0; k < 5; ++k) a.push_back(P::constant(1, random_rational(rng)));
        int deg = (int)rng.int_in(0, 31);
        P f(1);
        for (int k = 0; k <= deg; ++k) f.add_term({(std::uint32_t)k}, random_rational(rng));
        if (f.is_zero()) f = P::constant(1, Rational(1));
        Expansion<Rational> e = expand(f, 0, a);
        c.require(reconstruct(e, a, 1) == f, "reconstruction mismatch at sample " + std::to_string(i));
        Expansion<Rational> e2 = expand(f, 0, a);
        bool same = e2.terms.size() == e.terms.size();
        for (std::size_t s = 0; same && s < e.terms.size(); ++s)
            same = e2.terms[s].set == e.terms[s].set && e2.terms[s].coeff == e.terms[s].coeff;
        c.require(same, "expansion not stable at sample " + std::to_string(i));
    }
    if (!c.ok) std::cerr << "  " << c.detail << "\n";
    return c.ok;
}

bool criterion_axiom_suites(const ConstructionB& cb) {
    Check c;
    auto sampler = [](Rng& rng) { return random_rational_poly<Rational>(rng, 2, 5, 4, false); };

    Weighting w = Weighting::from_ints({2, 3});
    GradedDegree<Rational> graded(w);
    Derivation<Rational> ddy = Derivation<Rational>::partial(2, 1);
    AxiomReport r1 = check_axioms<GradedDegree<Rational>, Rational>("graded", graded, sampler,
                                                                   {"x", "y"}, 500, 801, &ddy);
    c.require(r1.passed(), "graded axioms: " + std::to_string(r1.failures.size()) + " failures");

    Derivation<Rational> dt = Derivation<Rational>::partial(2, 1);
    LndDegree<Rational> lnd(dt);
    AxiomReport r2 =
        check_axioms<LndDegree<Rational>, Rational>("lnd", lnd, sampler, {"z", "t"}, 500, 802);
    c.require(r2.passed(), "lnd axioms: " + std::to_string(r2.failures.size()) + " failures");

    // localized: fractions n/d under the graded base degree
    {
        std::size_t failures = 0;
        for (std::uint64_t i = 0; i < 500; ++i) {
            Rng rng = Rng::for_sample(803, i);
            P n1 = random_rational_poly<Rational>(rng, 2, 4, 3, false);
            P n2 = random_rational_poly<Rational>(rng, 2, 4, 3, false);
            P d1 = random_rational_poly<Rational>(rng, 2, 3, 2, true);
            P d2 = random_rational_poly<Rational>(rng, 2, 3, 2, true);
            LocalizedElem<Rational> f{n1, d1}, g{n2, d2};
            GroupValue degf = degree_localized(graded, f);
            GroupValue degg = degree_localized(graded, g);
            if (degf.is_minus_infinity() != n1.is_zero()) ++failures;
            LocalizedElem<Rational> prod{n1 * n2, d1 * d2};
            if (degree_localized(graded, prod) != degf + degg) ++failures;
            LocalizedElem<Rational> sum{n1 * d2 + n2 * d1, d1 * d2};
            GroupValue degsum = degree_localized(graded, sum);
            if (degsum > max(degf, degg)) ++failures;
            if (degf != degg && degsum != max(degf, degg)) ++failures;
        }
        c.require(failures == 0, "localized axioms: " + std::to_string(failures) + " failures");
    }

    // Laurent pullback, construction A
    {
        ConstructionA ca;
        auto dfa = ca.degree_fn(64);
        AxiomReport r3 = check_axioms<LaurentPullbackDegree<Rational, Rational>, Rational>(
            "laurentA", dfa, sampler, {"x", "y"}, 500, 804);
        c.require(r3.passed() && r3.precision_errors == 0,
                  "laurent-A axioms: " + std::to_string(r3.failures.size()) + " failures, " +
                      std::to_string(r3.precision_errors) + " precision errors");
    }

    // Laurent pullback, construction B (coefficients in Q(s))
    {
        B1Degree dfb(cb);
        auto sampler_b = [](Rng& rng) {
            return random_poly<RatFunc>(
                rng, 2, 4, 3, [](Rng& r) { return RatFunc(random_rational(r)); }, false);
        };
        AxiomReport r4 =
            check_axioms<B1Degree, RatFunc>("laurentB", dfb, sampler_b, {"x", "y"}, 500, 805);
        c.require(r4.passed() && r4.precision_errors == 0,
                  "laurent-B axioms: " + std::to_string(r4.failures.size()) + " failures, " +
                      std::to_string(r4.precision_errors) + " precision errors");
    }

    if (!c.ok) std::cerr << "  " << c.detail << "\n";
    return c.ok;
}

bool criterion_localization_identity() {
    Check c;
    Weighting w = Weighting::from_ints({2, 3});
    GradedDegree<Rational> df(w);
    P one = P::constant(2, Rational(1));
    for (std::uint64_t i = 0; i < 100; ++i) {
        Rng rng = Rng::for_sample(901, i);
        P s = random_rational_poly<Rational>(rng, 2, 4, 3);
        std::vector<P> images{random_rational_poly<Rational>(rng, 2, 3, 2, false),
                              random_rational_poly<Rational>(rng, 2, 3, 2, false)};
        Derivation<Rational> d(images);
        GroupValue lhs = delta_localized(df, d, LocalizedElem<Rational>{one, s});
        GroupValue rhs = delta(df, d, s);
        c.require(lhs == rhs, "mismatch at sample " + std::to_string(i));
    }
    if (!c.ok) std::cerr << "  " << c.detail << "\n";
    return c.ok;
}

bool criterion_gr_derivation() {
    Check c;
    Weighting w = Weighting::from_ints({1, 1});
    P x = P::variable(2, 0), y = P::variable(2, 1);
    Derivation<Rational> d(std::vector<P>{x + y * y, x * y});
    TameResult deg_d = deg_of_derivation_graded(w, {}, {x, y}, d);
    Derivation<Rational> g = gr_derivation(w, d);
    for (std::uint64_t i = 0; i < 200; ++i) {
        Rng rng = Rng::for_sample(1001, i);
        auto rand_homog = [&](int deg) {
            P p(2);
            for (int k = 0; k <= deg; ++k)
                p.add_term({(std::uint32_t)(deg - k), (std::uint32_t)k}, random_rational(rng));
            return p;
        };
        P f = rand_homog((int)rng.int_in(1, 4));
        P h = rand_homog((int)rng.int_in(1, 4));
        c.require(g.apply(f * h) == g.apply(f) * h + f * g.apply(h), "Leibniz failure");
        if (!f.is_zero() && !g.apply(f).is_zero()) {
            c.require(w.is_homogeneous(g.apply(f)), "image not homogeneous");
            c.require(w.degree(g.apply(f)) == w.degree(f) + deg_d.value, "degree shift wrong");
        }
    }
    // two fixed locally nilpotent derivations keep that property under gr
    {
        Derivation<Rational> d1(std::vector<P>{y + y * y, P(2)});
        Derivation<Rational> g1 = gr_derivation(w, d1);
        try {
            LndDegree<Rational> check1(g1);  // constructor verifies nilpotency
        } catch (const PreconditionError&) {
            c.require(false, "gr of first LND example not locally nilpotent");
        }
        Weighting w3 = Weighting::from_ints({1, 1, 1});
        using P3 = Polynomial<Rational>;
        P3 y3 = P3::variable(3, 1), z3 = P3::variable(3, 2);
        Derivation<Rational> d2(std::vector<P3>{y3, z3 * z3, P3(3)});
        Derivation<Rational> g2 = gr_derivation(w3, d2);
        try {
            LndDegree<Rational> check2(g2);
        } catch (const PreconditionError&) {
            c.require(false, "gr of second LND example not locally nilpotent");
        }
    }
    if (!c.ok) std::cerr << "  " << c.detail << "\n";
    return c.ok;
}

}  // namespace

int main() {
    ConstructionB cb = ConstructionB::build(5, 36);
    std::vector<std::pair<std::string, std::function<bool()>>> criteria = {
        {"1 wild witness B: deg y_p = 3, delta = 3p-3 for p=0..5", [&] { return criterion_wild_b(cb); }},
        {"2 value monoid <2,3> on 200 samples", [&] { return criterion_monoid(cb); }},
        {"3 negative-degree element w: deg -3, leading 2*a0*a3", [&] { return criterion_w_element(cb); }},
        {"4 wild witness A: deg g_n = 0, delta = n for n=0..10", [] { return criterion_wild_a(); }},
        {"5 graded tame formula: deg(D) = -3 with 500-sample oracle", [] { return criterion_graded_tame(); }},
        {"6 lnd tame formula: value 1, kernel-only gives 0", [] { return criterion_lnd_tame(); }},
        {"7 expansion roundtrip and uniqueness on 200 samples", [] { return criterion_expansion(); }},
        {"8 axiom suites (graded, lnd, localized, both Laurent pullbacks)", [&] { return criterion_axiom_suites(cb); }},
        {"9 localization identity on 100 pairs", [] { return criterion_localization_identity(); }},
        {"10 gr(D): Leibniz, degree shift, nilpotency preserved", [] { return criterion_gr_derivation(); }},
    };
    int failures = 0;
    for (auto& [name, fn] : criteria) {
        bool ok = false;
        try {
            ok = fn();
        } catch (const std::exception& e) {
            std::cerr << "  exception: " << e.what() << "\n";
        }
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << name << std::endl;
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
