#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "addrep/closedform.hpp"
#include "addrep/compiler.hpp"
#include "addrep/oracles.hpp"
#include "addrep/polynomial.hpp"
#include "addrep/session.hpp"

namespace py = pybind11;
using namespace addrep;

namespace {

py::object to_fraction(const Rational& q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(rational_str(q));
}

oracles::AutoSet parse_set(const std::string& name) {
  if (name == "A") return oracles::AutoSet::A;
  if (name == "B") return oracles::AutoSet::B;
  if (name == "C") return oracles::AutoSet::C;
  if (name == "D") return oracles::AutoSet::D;
  throw std::invalid_argument("set must be one of A, B, C, D");
}

SequenceBinding env_with(const std::map<std::string, Dfao>& extra) {
  SequenceBinding env = SequenceBinding::builtins();
  for (const auto& [name, m] : extra) env.seqs[name] = m;
  return env;
}

}  // namespace

PYBIND11_MODULE(_addrep, m) {
  m.doc() = "exact decision and counting engine for k-automatic sequences";

  py::class_<Dfao>(m, "Dfao")
      .def_property_readonly("base", [](const Dfao& d) { return d.base; })
      .def_property_readonly("states", &Dfao::state_count)
      .def("value", &Dfao::value, py::arg("n"))
      .def("to_walnut", &to_walnut)
      .def("to_dot", [](const Dfao& d) { return to_dot(d); })
      .def("__repr__", [](const Dfao& d) {
        return "<Dfao base=" + std::to_string(d.base) + " states=" + std::to_string(d.state_count()) + ">";
      });

  py::class_<TupleDfa>(m, "TupleDfa")
      .def_property_readonly("base", [](const TupleDfa& a) { return a.base; })
      .def_property_readonly("states", &TupleDfa::state_count)
      .def_property_readonly("tracks", [](const TupleDfa& a) { return a.tracks; })
      .def("accepts", [](const TupleDfa& a, const std::map<std::string, std::uint64_t>& vals) {
        return accepts(a, vals);
      }, py::arg("values"))
      .def("to_dot", [](const TupleDfa& a) { return to_dot(a); })
      .def("serialize", [](const TupleDfa& a) { return serialize(a); })
      .def("__repr__", [](const TupleDfa& a) {
        std::string t;
        for (const auto& x : a.tracks) t += (t.empty() ? "" : ",") + x;
        return "<TupleDfa states=" + std::to_string(a.state_count()) + " tracks=" + t + ">";
      });

  py::class_<LinearRepresentation>(m, "LinearRepresentation")
      .def_property_readonly("base", [](const LinearRepresentation& r) { return r.base; })
      .def_property_readonly("rank", &LinearRepresentation::rank)
      .def("evaluate", [](const LinearRepresentation& r, std::uint64_t n) {
        return to_fraction(evaluate(r, n));
      }, py::arg("n"))
      .def("values", [](const LinearRepresentation& r, std::uint64_t lo, std::uint64_t hi) {
        py::list out;
        for (const Rational& v : evaluate_range(r, lo, hi)) out.append(to_fraction(v));
        return out;
      }, py::arg("lo"), py::arg("hi"))
      .def("minimize", &minimize_rep)
      .def("canonical", &canonical_form)
      .def("min_poly", [](const LinearRepresentation& r, int digit) {
        return poly_str(min_poly(r.gamma.at(static_cast<std::size_t>(digit))));
      }, py::arg("digit"))
      .def("pattern_value", [](const LinearRepresentation& r, const std::string& pattern, int t) {
        return to_fraction(pattern_value(r, parse_pattern(pattern, r.base), t));
      }, py::arg("pattern"), py::arg("t"))
      .def("closed_form", [](const LinearRepresentation& r, const std::string& pattern) {
        return fit_closed_form(r, parse_pattern(pattern, r.base)).render();
      }, py::arg("pattern"))
      .def("serialize", [](const LinearRepresentation& r) { return serialize(r); })
      .def("__eq__", [](const LinearRepresentation& a, const LinearRepresentation& b) { return a == b; })
      .def("__repr__", [](const LinearRepresentation& r) {
        return "<LinearRepresentation base=" + std::to_string(r.base) + " rank=" + std::to_string(r.rank()) + ">";
      });

  m.def("parse_dfao", &parse_dfao, py::arg("text"), "parse a Walnut-format DFAO");
  m.def("builtins", [] { return SequenceBinding::builtins().seqs; }, "built-in sequences T and TT");
  m.def("compile_formula", [](const std::string& text, const std::map<std::string, Dfao>& seqs) {
    return compile(text, env_with(seqs));
  }, py::arg("text"), py::arg("sequences") = std::map<std::string, Dfao>{});
  m.def("decide", [](const std::string& text, const std::map<std::string, Dfao>& seqs) {
    return decide(text, env_with(seqs));
  }, py::arg("text"), py::arg("sequences") = std::map<std::string, Dfao>{});
  m.def("extract", &extract, py::arg("automaton"), py::arg("index_var"));
  m.def("series_equal", &series_equal, py::arg("a"), py::arg("b"));
  m.def("difference", &difference, py::arg("a"), py::arg("b"));
  m.def("deserialize_rep", &deserialize_rep, py::arg("text"));
  m.def("thue_morse", &oracles::thue_morse, py::arg("n"));
  m.def("twisted_tm", &oracles::twisted_tm, py::arg("n"));
  m.def("brute_R", [](int i, const std::string& set, std::uint64_t n) {
    return oracles::brute_R(i, parse_set(set), n);
  }, py::arg("i"), py::arg("set"), py::arg("n"));
  m.def("brute_rs", [](int j, const std::string& which, std::uint64_t n) {
    if (which.size() != 1) throw std::invalid_argument("which must be 'r' or 's'");
    return oracles::brute_rs(j, which[0], n);
  }, py::arg("j"), py::arg("which"), py::arg("n"));
}
