#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tangentia/boundary.hpp"
#include "tangentia/cli.hpp"
#include "tangentia/curves.hpp"
#include "tangentia/error.hpp"
#include "tangentia/geometry.hpp"

namespace py = pybind11;
using namespace tangentia;

namespace {

MonomialOrder order_named(const std::string& name, std::size_t block) {
  if (name == "grevlex") return MonomialOrder::grevlex();
  if (name == "lex") return MonomialOrder::lex();
  if (name == "block") return MonomialOrder::block_order(block);
  throw InputError("unknown monomial order '" + name + "'");
}

std::vector<Polynomial> polys(const Ring& ring, const std::vector<std::string>& texts) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(parse_polynomial(ring, t));
  return out;
}

std::vector<std::string> strings(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

py::int_ to_py(const Integer& z) { return py::int_(py::str(z.get_str())); }

std::vector<std::size_t> indices_of(const Ring& ring, const std::vector<std::string>& names) {
  std::vector<std::size_t> out;
  for (const auto& n : names) {
    const auto& all = ring->names();
    const auto it = std::find(all.begin(), all.end(), n);
    if (it == all.end()) throw InputError("unknown variable '" + n + "'");
    out.push_back(static_cast<std::size_t>(it - all.begin()));
  }
  return out;
}

UPoly component(const std::string& text) { return to_univariate(parse_polynomial(make_ring({"t"}), text), 0); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact projective duality and tangency computations.";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<InputError>(m, "InputError", error.ptr());
  py::register_exception<TimeoutError>(m, "TimeoutError", error.ptr());

  py::class_<PolyRing, std::shared_ptr<PolyRing>>(m, "Ring")
      .def_property_readonly("names", &PolyRing::names)
      .def("__repr__", [](const PolyRing& r) {
        std::string s = "Ring([";
        for (std::size_t i = 0; i < r.names().size(); ++i) s += (i ? ", " : "") + r.names()[i];
        return s + "])";
      });

  m.def(
      "ring",
      [](std::vector<std::string> names, const std::string& order, std::size_t block) {
        return std::const_pointer_cast<PolyRing>(make_ring(std::move(names), order_named(order, block)));
      },
      py::arg("names"), py::arg("order") = "grevlex", py::arg("block") = 0);

  py::class_<Polynomial>(m, "Polynomial")
      .def(py::init([](const std::shared_ptr<PolyRing>& r, const std::string& text) {
             return parse_polynomial(r, text);
           }),
           py::arg("ring"), py::arg("text"))
      .def("__str__", &Polynomial::to_string)
      .def("__repr__", [](const Polynomial& p) { return "Polynomial('" + p.to_string() + "')"; })
      .def("__add__", [](const Polynomial& a, const Polynomial& b) { return a + b; })
      .def("__sub__", [](const Polynomial& a, const Polynomial& b) { return a - b; })
      .def("__mul__", [](const Polynomial& a, const Polynomial& b) { return a * b; })
      .def("__eq__", [](const Polynomial& a, const Polynomial& b) { return (a - b).is_zero(); })
      .def_property_readonly("total_degree", &Polynomial::total_degree)
      .def("is_zero", &Polynomial::is_zero);

  py::class_<Ideal>(m, "Ideal")
      .def(py::init([](const std::shared_ptr<PolyRing>& r, const std::vector<std::string>& gens) {
             return Ideal(r, polys(r, gens));
           }),
           py::arg("ring"), py::arg("generators"))
      .def_property_readonly("generators", [](const Ideal& I) { return strings(I.generators()); })
      .def("groebner_basis", [](const Ideal& I) { return strings(I.groebner_basis()); })
      .def("contains", [](const Ideal& I, const std::string& f) { return I.contains(parse_polynomial(I.ring(), f)); })
      .def("same_ideal", &Ideal::same_ideal)
      .def("dimension", &Ideal::dimension)
      .def("is_homogeneous", &Ideal::is_homogeneous)
      .def("saturate", [](const Ideal& I, const std::string& f) { return saturate_principal(I, parse_polynomial(I.ring(), f)); })
      .def("saturate_irrelevant", &saturate_irrelevant)
      .def("eliminate",
           [](const Ideal& I, const std::vector<std::string>& vars) {
             return eliminate_variables(I, indices_of(I.ring(), vars));
           })
      .def("__repr__", [](const Ideal& I) {
        std::string s = "Ideal(";
        for (std::size_t i = 0; i < I.generators().size(); ++i) s += (i ? ", " : "") + I.generators()[i].to_string();
        return s + ")";
      });

  py::class_<ProjScheme>(m, "ProjScheme")
      .def(py::init([](const Ideal& I) { return ProjScheme::make(I); }), py::arg("ideal"))
      .def_property_readonly("ideal", &ProjScheme::ideal)
      .def_property_readonly("ring", [](const ProjScheme& X) { return std::const_pointer_cast<PolyRing>(X.ring()); })
      .def_property_readonly("ambient_dim", &ProjScheme::ambient_dim)
      .def("dim", &ProjScheme::dim)
      .def("degree", [](const ProjScheme& X) { return to_py(X.degree()); });

  m.def(
      "projective",
      [](const std::shared_ptr<PolyRing>& r, const std::vector<std::string>& gens) {
        return projective(r, polys(r, gens));
      },
      py::arg("ring"), py::arg("generators"));
  m.def("dual_variety", [](const ProjScheme& X) { return dual_variety(X); }, py::arg("X"));
  m.def("bidual_check", [](const ProjScheme& X) { return bidual_check(X); }, py::arg("X"));
  m.def(
      "tangency_scheme",
      [](const ProjScheme& X, const std::string& H) { return tangency_scheme(X, parse_polynomial(X.ring(), H)); },
      py::arg("X"), py::arg("H"));
  m.def("secant_variety", &secant_variety, py::arg("X"), py::arg("k"));
  m.def("r_of", [](const ProjScheme& X) { return r_of(X); }, py::arg("X"));

  m.def(
      "veronese_cone_stratum",
      [](std::size_t n, unsigned d, std::uint64_t seed) {
        const VeroneseConeResult v = veronese_cone_stratum(n, d, seed);
        py::dict out;
        out["ambient_dim"] = v.ambient_dim;
        out["stratum_dim"] = v.stratum_dim;
        out["stratum_dim_checked"] = v.stratum_dim_checked;
        out["span_dim"] = v.span_dim;
        out["span_lower_bound"] = v.span_lower_bound;
        out["scheme_span_bound"] = v.scheme_span_bound;
        out["violated"] = v.violated;
        return out;
      },
      py::arg("n"), py::arg("d"), py::arg("seed") = 42);

  m.def(
      "bitangent_osculating",
      [](const std::vector<std::string>& comps) {
        std::vector<UPoly> c;
        for (const auto& s : comps) c.push_back(component(s));
        const BitangencyRecord b = bitangent_osculating(ParamCurve::make(std::move(c)));
        py::dict out;
        py::list pairs;
        for (const auto& [s, t] : b.pairs) pairs.append(py::make_tuple(s.get_str(), t.get_str()));
        out["pairs"] = pairs;
        out["resultant"] = b.resultant.to_string("s");
        out["finite"] = b.finiteness_verdict;
        return out;
      },
      py::arg("components"));

  m.def(
      "run_source",
      [](const std::string& source, std::uint64_t seed, std::optional<double> timeout) {
        cli::RunOptions opts;
        opts.seed = seed;
        opts.timeout_seconds = timeout;
        cli::RunResult res;
        {
          py::gil_scoped_release release;
          res = cli::run_source(source, opts);
        }
        std::vector<std::string> records;
        for (const auto& r : res.records) records.push_back(r.json);
        return py::make_tuple(records, res.exit_code, res.error);
      },
      py::arg("source"), py::arg("seed") = 42, py::arg("timeout") = py::none());
}
