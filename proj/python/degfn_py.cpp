// Python bindings for the main operations: parsing, graded/lnd degree
// evaluation, the tame formulas, expansion and the wild witness tables.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "degfn/construction_a.hpp"
#include "degfn/construction_b.hpp"
#include "degfn/degree.hpp"
#include "degfn/expand.hpp"
#include "degfn/parse.hpp"

namespace py = pybind11;
using namespace degfn;
using P = Polynomial<Rational>;

namespace {

// GroupValue -> int | None (arity-1 values only, which is all we expose)
py::object gv(const GroupValue& v) {
    if (v.is_minus_infinity()) return py::none();
    return py::int_(v.as_int());
}

P parse(const std::string& text, const std::vector<std::string>& vars) {
    return parse_poly<Rational>(text, vars);
}

Derivation<Rational> derivation(const std::vector<std::string>& images,
                                const std::vector<std::string>& vars) {
    std::vector<P> ps;
    for (const auto& s : images) ps.push_back(parse(s, vars));
    return Derivation<Rational>(ps);
}

}  // namespace

PYBIND11_MODULE(_degfn, m) {
    m.doc() = "degree functions on polynomial rings: tame formulas and wild witnesses";

    py::register_exception<ParseError>(m, "ParseError");
    py::register_exception<PreconditionError>(m, "PreconditionError");
    py::register_exception<PrecisionExhausted>(m, "PrecisionExhausted");

    m.def("graded_degree",
          [](const std::string& f, const std::vector<std::string>& vars,
             const std::vector<long long>& weights) {
              return gv(Weighting::from_ints(weights).degree(parse(f, vars)));
          },
          py::arg("f"), py::arg("vars"), py::arg("weights"));

    m.def("graded_deg_of_derivation",
          [](const std::vector<std::string>& d_images, const std::vector<std::string>& vars,
             const std::vector<long long>& weights) {
              Weighting w = Weighting::from_ints(weights);
              std::vector<P> xs;
              for (std::size_t i = 0; i < vars.size(); ++i)
                  xs.push_back(P::variable(vars.size(), i));
              TameResult r = deg_of_derivation_graded(w, {}, xs, derivation(d_images, vars));
              return py::make_tuple(gv(r.value),
                                    r.argmax == TameResult::npos ? py::object(py::none())
                                                                 : py::object(py::str(vars[r.argmax])));
          },
          py::arg("d_images"), py::arg("vars"), py::arg("weights"));

    m.def("lnd_degree",
          [](const std::string& f, const std::vector<std::string>& vars,
             const std::vector<std::string>& delta_images) {
              LndDegree<Rational> df(derivation(delta_images, vars));
              return gv(df.degree(parse(f, vars)));
          },
          py::arg("f"), py::arg("vars"), py::arg("delta_images"));

    m.def("lnd_deg_of_derivation",
          [](const std::vector<std::string>& delta_images, const std::string& t,
             const std::vector<std::string>& zs, const std::vector<std::string>& d_images,
             const std::vector<std::string>& vars) {
              std::vector<P> zps;
              for (const auto& z : zs) zps.push_back(parse(z, vars));
              TameResult r = deg_of_derivation_lnd(derivation(delta_images, vars), parse(t, vars),
                                                   zps, derivation(d_images, vars));
              return gv(r.value);
          },
          py::arg("delta_images"), py::arg("t"), py::arg("zs"), py::arg("d_images"),
          py::arg("vars"));

    m.def("expand_tower",
          [](const std::string& f, const std::vector<std::string>& a) {
              std::vector<P> ap;
              for (const auto& s : a) ap.push_back(P::constant(1, Rational(s)));
              Expansion<Rational> e = expand(parse(f, {"Y"}), 0, ap);
              py::list out;
              for (const auto& t : e.terms)
                  out.append(py::make_tuple(t.set, t.coeff.str({"Y"})));
              return out;
          },
          py::arg("f"), py::arg("a"));

    m.def("wild_a_witness",
          [](int n_max) {
              ConstructionA ca;
              py::list out;
              for (const auto& r : ca.witness(n_max))
                  out.append(py::make_tuple(r.n, r.deg_g, r.delta));
              return out;
          },
          py::arg("n_max"));

    m.def("wild_b_witness",
          [](int steps, int precision) {
              ConstructionB cb = ConstructionB::build(steps, precision);
              py::list out;
              for (const auto& r : cb.witness(steps))
                  out.append(py::make_tuple(r.p, r.deg_y, r.deg_dy, r.delta));
              return out;
          },
          py::arg("steps") = 5, py::arg("precision") = 36);

    m.def("wild_b_degree",
          [](const std::string& f, int steps, int precision) {
              ConstructionB cb = ConstructionB::build(steps, precision);
              return gv(cb.degree(parse_poly<RatFunc>(
                  f, {"x", "y"}, {{"s", RatFunc::s()}})));
          },
          py::arg("f"), py::arg("steps") = 3, py::arg("precision") = 36);
}
