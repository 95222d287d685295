// Command-line front end: evaluators, wild constructions, expansion and
// the axiom harness, with deterministic JSON reports.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "degfn/construction_a.hpp"
#include "degfn/construction_b.hpp"
#include "degfn/degree.hpp"
#include "degfn/expand.hpp"
#include "degfn/parse.hpp"
#include "degfn/sampling.hpp"

using json = nlohmann::ordered_json;
using namespace degfn;
using P = Polynomial<Rational>;

namespace {

constexpr int EXIT_OK = 0, EXIT_PARSE = 2, EXIT_PRECOND = 3, EXIT_PRECISION = 4;

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

std::vector<long long> parse_ints(const std::string& s) {
    std::vector<long long> out;
    for (const auto& p : split(s, ',')) out.push_back(std::stoll(p));
    return out;
}

Rational parse_rational_lit(const std::string& s) {
    Rational q(s);
    q.canonicalize();
    return q;
}

// derivation from ';'-separated images, one per variable
Derivation<Rational> parse_derivation(const std::string& text,
                                      const std::vector<std::string>& vars) {
    std::vector<P> images;
    for (const auto& part : split(text, ';'))
        images.push_back(parse_poly<Rational>(part, vars));
    if (images.size() != vars.size())
        throw ParseError(0, "derivation needs one image per variable");
    return Derivation<Rational>(images);
}

struct Output {
    json report;
    bool json_only = false;
    std::string out_file;
    std::ostringstream human;

    int finish(int code) {
        report["verdict"] = (code == EXIT_OK) ? "ok" : "fail";
        emit();
        return code;
    }
    void emit() {
        std::string text = report.dump(2);
        if (!out_file.empty()) {
            std::ofstream f(out_file);
            f << text << "\n";
        }
        if (!json_only) std::cout << human.str();
        if (out_file.empty() || json_only) std::cout << text << "\n";
    }
};

json row_json(std::initializer_list<std::pair<const char*, long long>> kv) {
    json r;
    for (const auto& [k, v] : kv) r[k] = v;
    return r;
}

int run_tame_eval(const std::string& vars_s, const std::string& weights_s, const std::string& d_s,
                  const std::string& zs_s, std::size_t samples, std::uint64_t seed, Output& out) {
    std::vector<std::string> vars = split(vars_s, ',');
    Weighting w = Weighting::from_ints(parse_ints(weights_s));
    Derivation<Rational> d = parse_derivation(d_s, vars);
    std::vector<P> zs;
    if (!zs_s.empty())
        for (const auto& part : split(zs_s, ';')) zs.push_back(parse_poly<Rational>(part, vars));
    std::vector<P> xs;
    for (std::size_t i = 0; i < vars.size(); ++i) xs.push_back(P::variable(vars.size(), i));

    TameResult r = deg_of_derivation_graded(w, zs, xs, d);
    out.report["params"] = {{"vars", vars_s}, {"weights", weights_s}, {"D", d_s},
                            {"zs", zs_s},     {"samples", samples},   {"seed", seed}};
    std::string gen = "-";
    if (r.argmax != TameResult::npos)
        gen = r.argmax < zs.size() ? zs[r.argmax].str(vars) : vars[r.argmax - zs.size()];
    out.report["certificate"] = {{"value", r.value.str()}, {"argmaxGenerator", gen}};

    GradedDegree<Rational> df(w);
    std::size_t violations = 0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        Rng rng = Rng::for_sample(seed, i);
        P f = random_rational_poly<Rational>(rng, vars.size(), 5, 4);
        if (delta(df, d, f) > r.value) ++violations;
    }
    out.report["oracle"] = {{"samples", samples}, {"violations", violations}};
    out.human << "deg(D) = " << r.value.str() << "  (attained by " << gen << ")\n"
              << "oracle: " << violations << " violations in " << samples << " samples\n";
    return out.finish(violations == 0 ? EXIT_OK : EXIT_PRECOND);
}

int run_lnd_eval(const std::string& vars_s, const std::string& delta_s, const std::string& t_s,
                 const std::string& zs_s, const std::string& d_s, Output& out) {
    std::vector<std::string> vars = split(vars_s, ',');
    Derivation<Rational> Delta = parse_derivation(delta_s, vars);
    Derivation<Rational> d = parse_derivation(d_s, vars);
    P t = parse_poly<Rational>(t_s, vars);
    std::vector<P> zs;
    if (!zs_s.empty())
        for (const auto& part : split(zs_s, ';')) zs.push_back(parse_poly<Rational>(part, vars));

    TameResult r = deg_of_derivation_lnd(Delta, t, zs, d);
    out.report["params"] = {
        {"vars", vars_s}, {"Delta", delta_s}, {"t", t_s}, {"zs", zs_s}, {"D", d_s}};
    std::string gen = r.argmax == TameResult::npos ? "-"
                      : r.argmax < zs.size()       ? zs[r.argmax].str(vars)
                                                   : t.str(vars);
    out.report["certificate"] = {{"value", r.value.str()}, {"argmaxGenerator", gen}};
    out.human << "deg_Delta(D) = " << r.value.str() << "  (attained by " << gen << ")\n";
    return out.finish(EXIT_OK);
}

int run_sandwich_eval(const std::string& vars_s, const std::string& weights_s,
                      const std::string& d_s, Output& out) {
    std::vector<std::string> vars = split(vars_s, ',');
    Weighting w = Weighting::from_ints(parse_ints(weights_s));
    Derivation<Rational> d = parse_derivation(d_s, vars);
    TameResult r = deg_of_derivation_laurent_sandwich(w, d);
    out.report["params"] = {{"vars", vars_s}, {"weights", weights_s}, {"D", d_s}};
    std::string gen = r.argmax == TameResult::npos ? "-" : vars[r.argmax];
    out.report["certificate"] = {{"value", r.value.str()}, {"argmaxGenerator", gen}};
    out.human << "deg(D) = " << r.value.str() << "  (attained by " << gen << ")\n";
    return out.finish(EXIT_OK);
}

int run_wild_a(int n_max, int precision, bool random_coeffs, std::uint64_t seed, Output& out) {
    std::function<Rational(int)> coeff = ConstructionA::all_ones;
    if (random_coeffs)
        coeff = [seed](int j) {
            Rng rng = Rng::for_sample(seed, (std::uint64_t)j);
            return Rational((long)rng.int_in(0, 3));  // zeros happen, rows get skipped
        };
    ConstructionA ca(coeff, precision, 4 * precision);
    auto rows = ca.witness(n_max);
    out.report["params"] = {{"nMax", n_max}, {"precision", precision},
                            {"randomCoeffs", random_coeffs}, {"seed", seed}};
    bool ok = true;
    json jr = json::array();
    out.human << "  n  deg(g_n)  delta\n";
    for (const auto& r : rows) {
        jr.push_back(row_json({{"n", r.n}, {"deg", r.deg_g}, {"delta", r.delta}}));
        out.human << "  " << r.n << "  " << r.deg_g << "  " << r.delta << "\n";
        if (r.deg_g != 0 || r.delta != r.n) ok = false;
    }
    out.report["rows"] = jr;
    return out.finish(ok ? EXIT_OK : EXIT_PRECOND);
}

int run_wild_b(int steps, int precision, Output& out) {
    ConstructionB cb = ConstructionB::build(steps, precision);
    auto rows = cb.witness(steps);
    out.report["params"] = {{"steps", steps}, {"precision", precision},
                            {"level", cb.level()}, {"horizon", cb.horizon()}};
    bool ok = true;
    json jr = json::array();
    out.human << "  p  deg(y_p)  deg(D y_p)  delta\n";
    for (const auto& r : rows) {
        jr.push_back(row_json(
            {{"p", r.p}, {"deg", r.deg_y}, {"degD", r.deg_dy}, {"delta", r.delta}}));
        out.human << "  " << r.p << "  " << r.deg_y << "  " << r.deg_dy << "  " << r.delta << "\n";
        if (r.deg_y != 3 || r.delta != 3 * r.p - 3) ok = false;
    }
    out.report["rows"] = jr;
    return out.finish(ok ? EXIT_OK : EXIT_PRECOND);
}

int run_expand(const std::string& a_s, const std::string& poly_s, Output& out) {
    std::vector<P> a;
    for (const auto& part : split(a_s, ',')) a.push_back(P::constant(1, parse_rational_lit(part)));
    P f = parse_poly<Rational>(poly_s, {"Y"});
    Expansion<Rational> e = expand(f, 0, a);
    bool recon_ok = reconstruct(e, a, 1) == f;
    out.report["params"] = {{"a", a_s}, {"poly", poly_s}};
    json terms = json::array();
    for (const auto& t : e.terms) {
        json jt;
        jt["set"] = t.set;
        jt["coeff"] = t.coeff.str({"Y"});
        terms.push_back(jt);
        out.human << "  ({";
        for (std::size_t i = 0; i < t.set.size(); ++i) out.human << (i ? "," : "") << t.set[i];
        out.human << "}, " << t.coeff.str({"Y"}) << ")\n";
    }
    out.report["rows"] = terms;
    out.report["reconstructionOk"] = recon_ok;
    return out.finish(recon_ok ? EXIT_OK : EXIT_PRECOND);
}

int run_axioms(const std::string& kind, const std::string& weights_s, std::size_t samples,
               std::uint64_t seed, int precision, Output& out) {
    out.report["params"] = {{"kind", kind}, {"weights", weights_s}, {"samples", samples},
                            {"seed", seed}, {"precision", precision}};
    auto sampler = [](Rng& rng) { return random_rational_poly<Rational>(rng, 2, 5, 4, false); };
    AxiomReport rep;
    std::vector<std::string> vars{"x", "y"};
    if (kind == "graded") {
        Weighting w = Weighting::from_ints(weights_s.empty() ? std::vector<long long>{2, 3}
                                                             : parse_ints(weights_s));
        GradedDegree<Rational> df(w);
        Derivation<Rational> ddy = Derivation<Rational>::partial(2, 1);
        rep = check_axioms<GradedDegree<Rational>, Rational>(kind, df, sampler, vars, samples,
                                                             seed, &ddy);
    } else if (kind == "lnd") {
        Derivation<Rational> dt = Derivation<Rational>::partial(2, 1);
        LndDegree<Rational> df(dt);
        rep = check_axioms<LndDegree<Rational>, Rational>(kind, df, sampler, {"z", "t"}, samples,
                                                          seed);
    } else if (kind == "laurentA") {
        ConstructionA ca;
        auto df = ca.degree_fn(precision);
        rep = check_axioms<LaurentPullbackDegree<Rational, Rational>, Rational>(
            kind, df, sampler, vars, samples, seed);
    } else if (kind == "laurentB") {
        ConstructionB cb = ConstructionB::build(3, precision);
        B1Degree df(cb);
        auto sampler_b = [](Rng& rng) {
            return random_poly<RatFunc>(
                rng, 2, 4, 3, [](Rng& r) { return RatFunc(random_rational(r)); }, false);
        };
        rep = check_axioms<B1Degree, RatFunc>(kind, df, sampler_b, vars, samples, seed);
        // additionally: all attained degrees lie in <2,3>
        auto mon = cb.monoid_check(samples, seed);
        out.report["monoid"] = {{"samples", mon.samples},
                                {"failures", mon.failures.size()},
                                {"precisionErrors", mon.precision_errors}};
        if (!mon.passed()) rep.failures.push_back({"monoid", "degree in <2,3>", "", ""});
    } else {
        throw std::invalid_argument("--kind must be graded|lnd|laurentA|laurentB");
    }
    json jf = json::array();
    for (const auto& f : rep.failures)
        jf.push_back({{"input", f.input}, {"axiom", f.axiom}, {"lhs", f.lhs}, {"rhs", f.rhs}});
    out.report["failures"] = jf;
    out.report["precisionErrors"] = rep.precision_errors;
    out.human << kind << ": " << rep.failures.size() << " failures in " << rep.samples
              << " samples (" << rep.precision_errors << " precision errors)\n";
    return out.finish(rep.passed() ? EXIT_OK : EXIT_PRECOND);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"degree functions, tame formulas and wild witnesses"};
    app.require_subcommand(1);

    std::uint64_t seed = 1;
    std::size_t samples = 200;
    int precision = 36;
    bool json_only = false;
    std::string out_file;
    app.add_option("--seed", seed, "PRNG seed");
    app.add_option("--samples", samples, "sample count for property checks");
    app.add_option("--precision", precision, "series precision window");
    app.add_flag("--json-only", json_only, "suppress the human-readable table");
    app.add_option("--out", out_file, "write the JSON report to FILE");

    std::string vars = "x,y", weights = "2,3", d_expr = "0;1", zs, delta_expr = "0;1", t_expr = "t";
    std::string a_list = "2,5", poly = "Y^3", kind = "graded";
    int n_max = 10, steps = 5;
    bool random_coeffs = false;

    auto* tame = app.add_subcommand("tame-eval", "graded deg(D) via the generator formula");
    tame->add_option("--vars", vars);
    tame->add_option("--weights", weights);
    tame->add_option("--D", d_expr, "';'-separated images of the variables");
    tame->add_option("--zs", zs, "';'-separated degree-0 generators");

    auto* lnd = app.add_subcommand("lnd-eval", "deg_Delta(D) via the slice formula");
    lnd->add_option("--vars", vars);
    lnd->add_option("--Delta", delta_expr, "';'-separated images defining Delta");
    lnd->add_option("--t", t_expr, "element with Delta t != 0, Delta^2 t = 0");
    lnd->add_option("--zs", zs, "';'-separated kernel generators");
    lnd->add_option("--D", d_expr);

    auto* sandwich = app.add_subcommand("sandwich-eval", "deg(D) on a Laurent sandwich ring");
    sandwich->add_option("--vars", vars);
    sandwich->add_option("--weights", weights);
    sandwich->add_option("--D", d_expr);

    auto* wa = app.add_subcommand("wild-a", "series construction witness table");
    wa->add_option("--n-max", n_max);
    wa->add_flag("--random-coeffs", random_coeffs, "seeded random a_j (exercises zero skips)");

    auto* wb = app.add_subcommand("wild-b", "recursive N-valued construction witness table");
    wb->add_option("--steps", steps);

    auto* ex = app.add_subcommand("expand", "tower expansion of a polynomial in Y");
    ex->add_option("--a", a_list, "comma-separated rational a_i");
    ex->add_option("--poly", poly, "polynomial in Y");

    auto* ax = app.add_subcommand("axioms", "degree-function axiom property run");
    ax->add_option("--kind", kind, "graded|lnd|laurentA|laurentB")
        ->check(CLI::IsMember({"graded", "lnd", "laurentA", "laurentB"}));
    ax->add_option("--weights", weights);

    // global options (seed, precision, ...) may appear after the subcommand
    for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return EXIT_PARSE;
    }

    Output out;
    out.json_only = json_only;
    out.out_file = out_file;
    out.report["command"] = app.get_subcommands()[0]->get_name();

    try {
        if (tame->parsed()) return run_tame_eval(vars, weights, d_expr, zs, samples, seed, out);
        if (lnd->parsed()) return run_lnd_eval(vars, delta_expr, t_expr, zs, d_expr, out);
        if (sandwich->parsed()) return run_sandwich_eval(vars, weights, d_expr, out);
        if (wa->parsed()) return run_wild_a(n_max, precision, random_coeffs, seed, out);
        if (wb->parsed()) return run_wild_b(steps, precision, out);
        if (ex->parsed()) return run_expand(a_list, poly, out);
        if (ax->parsed()) return run_axioms(kind, weights, samples, seed, precision, out);
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return EXIT_PARSE;
    } catch (const PrecisionExhausted& e) {
        std::cerr << e.what() << "\n";
        return EXIT_PRECISION;
    } catch (const PreconditionError& e) {
        std::cerr << e.what() << "\n";
        return EXIT_PRECOND;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return EXIT_PRECOND;
    }
    return EXIT_OK;
}
