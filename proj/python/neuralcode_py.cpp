#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <string>
#include <tuple>
#include <vector>

#include "neuralcode/classify.hpp"
#include "neuralcode/code.hpp"
#include "neuralcode/complex.hpp"
#include "neuralcode/document.hpp"
#include "neuralcode/errors.hpp"
#include "neuralcode/format.hpp"
#include "neuralcode/ideal.hpp"
#include "neuralcode/survey.hpp"

namespace py = pybind11;
using namespace neuralcode;

namespace {

using Neurons = std::vector<int>;
using Face = std::pair<Neurons, Neurons>;

Mask to_mask(const Neurons& neurons) {
  Mask m = 0;
  for (int i : neurons) {
    if (i < 1 || i > kMaxNeurons)
      throw py::value_error("neuron " + std::to_string(i) + " is outside 1..16");
    m |= neuron_bit(i);
  }
  return m;
}

Neurons to_neurons(Mask m) {
  Neurons out;
  for_each_bit(m, [&](int b) { out.push_back(b + 1); });
  return out;
}

Face to_face(const PolarVertexSet& f) { return {to_neurons(f.x), to_neurons(f.y)}; }

std::vector<Face> faces(const SimplicialComplex& cx) {
  std::vector<Face> out;
  for (const auto& f : cx.polar_facets()) out.push_back(to_face(f));
  return out;
}

std::vector<Face> generators(const SquarefreeMonomialIdeal& ideal) {
  std::vector<Face> out;
  for (Mask g : ideal.generators()) out.push_back(to_face(PolarVertexSet::unpack(g, ideal.n())));
  return out;
}

Code make_code(int n, const std::vector<Neurons>& words) {
  std::vector<Codeword> ws;
  for (const auto& w : words) ws.emplace_back(to_mask(w));
  return Code(n, std::move(ws));
}

py::object witness_object(const ClassificationReport& r, int n) {
  if (!r.witness) return py::none();
  py::dict d;
  std::visit(
      [&](const auto& v) {
        using W = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<W, MissingIntersection>) {
          py::list words;
          for (Codeword c : v.words) words.append(to_neurons(c.bits));
          d["kind"] = "missing_intersection";
          d["words"] = words;
          d["intersection"] = to_neurons(v.intersection.bits);
        } else if constexpr (std::is_same_v<W, ViolatingPseudomonomial>) {
          d["kind"] = "pseudomonomial";
          d["element"] = v.element;
        } else {
          d["kind"] = "facet";
          d["facet"] = to_face(v.facet);
          d["text"] = format_face(v.facet, n);
        }
      },
      *r.witness);
  return d;
}

Method parse_method(const std::string& name) {
  if (name == "brute") return Method::brute_force;
  if (name == "cf" || name == "algebraic") return Method::canonical_form;
  if (name == "facets") return Method::factor_complex;
  throw py::value_error("method must be brute, cf, algebraic or facets");
}

}  // namespace

PYBIND11_MODULE(neuralcode, m) {
  m.doc() = "Neural codes, their neural ideals, factor and polar complexes, and IC/MIC deciders.";

  auto base = py::register_exception<Error>(m, "NeuralCodeError", PyExc_ValueError);
  py::register_exception<InvalidCode>(m, "InvalidCode", base.ptr());
  py::register_exception<CapExceeded>(m, "CapExceeded", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  py::class_<Code>(m, "Code")
      .def(py::init(&make_code), py::arg("n"), py::arg("words"),
           "Words are iterables of 1-based neurons.")
      .def_property_readonly("n", &Code::n)
      .def_property_readonly("words", [](const Code& c) {
        std::vector<Neurons> out;
        for (Codeword w : c.words()) out.push_back(to_neurons(w.bits));
        return out;
      })
      .def("__len__", &Code::size)
      .def("__contains__", [](const Code& c, const Neurons& w) { return c.contains(Codeword{to_mask(w)}); })
      .def(py::self == py::self)
      .def("__str__", &format_code_inline)
      .def("__repr__", [](const Code& c) {
        return "Code(n=" + std::to_string(c.n()) + ", " + format_code_inline(c) + ")";
      });

  py::class_<Pseudomonomial>(m, "Pseudomonomial")
      .def(py::init([](const Neurons& s, const Neurons& t) { return Pseudomonomial(to_mask(s), to_mask(t)); }),
           py::arg("sigma"), py::arg("tau"))
      .def_property_readonly("sigma", [](const Pseudomonomial& p) { return to_neurons(p.sigma()); })
      .def_property_readonly("tau", [](const Pseudomonomial& p) { return to_neurons(p.tau()); })
      .def_property_readonly("degree", &Pseudomonomial::degree)
      .def_property_readonly("is_monomial", &Pseudomonomial::is_monomial)
      .def(py::self == py::self)
      .def("__str__", &format_pseudomonomial)
      .def("__repr__", [](const Pseudomonomial& p) { return "Pseudomonomial(" + format_pseudomonomial(p) + ")"; });

  py::class_<PrimePseudoIdeal>(m, "Prime")
      .def_property_readonly("x", [](const PrimePseudoIdeal& p) { return to_neurons(p.pos); })
      .def_property_readonly("one_minus_x", [](const PrimePseudoIdeal& p) { return to_neurons(p.neg); })
      .def("__str__", &format_prime)
      .def("__repr__", [](const PrimePseudoIdeal& p) { return "Prime(" + format_prime(p) + ")"; });

  py::class_<ClassificationReport>(m, "Report")
      .def_property_readonly("property", [](const ClassificationReport& r) { return to_string(r.property); })
      .def_property_readonly("method", [](const ClassificationReport& r) { return to_string(r.method); })
      .def_readonly("verdict", &ClassificationReport::verdict)
      .def_property_readonly("elapsed_us", [](const ClassificationReport& r) { return r.elapsed.count(); })
      .def("__bool__", [](const ClassificationReport& r) { return r.verdict; });

  m.def("parse_code", [](const std::string& text) { return parse_code(text); });
  m.def("render_code", &render_code);
  m.def("complement", &complement);

  m.def("maximal_codewords", [](const Code& c) {
    std::vector<Neurons> out;
    for (Codeword w : maximal_codewords(c)) out.push_back(to_neurons(w.bits));
    return out;
  });
  m.def("maximal_intervals", [](const Code& c) {
    std::vector<std::pair<Neurons, Neurons>> out;
    for (const auto& iv : maximal_intervals(c)) out.emplace_back(to_neurons(iv.lo().bits), to_neurons(iv.hi().bits));
    return out;
  }, "Maximal intervals as (lo, hi) pairs.");

  m.def("canonical_form", [](const Code& c) { return canonical_form(c).elements; });
  m.def("in_neural_ideal", &in_neural_ideal, py::arg("p"), py::arg("code"));
  m.def("primary_decomposition", &primary_decomposition);

  m.def("delta_facets", [](const Code& c) {
    std::vector<Neurons> out;
    const SimplicialComplex delta = downward_closure(c);
    for (Mask f : delta.facets()) out.push_back(to_neurons(f));
    return out;
  }, "Facets of the simplicial complex generated by the code.");
  m.def("sr_minimal_primes", [](const Code& c) {
    std::vector<Neurons> out;
    for (Mask b : sr_minimal_primes(c)) out.push_back(to_neurons(b));
    return out;
  });
  m.def("factor_ideal", [](const Code& c) { return generators(factor_ideal(c)); },
        "Generators as (x, y) support pairs.");
  m.def("polar_ideal", [](const Code& c) { return generators(polar_ideal(c)); });
  m.def("factor_complex", [](const Code& c) { return faces(factor_complex(c)); },
        "Facets as (plain, barred) pairs.");
  m.def("polar_complex", [](const Code& c) { return faces(polar_complex(c)); });
  m.def("prime_sets", [](const Code& c, bool minimal_only) {
    std::vector<Neurons> out;
    for (const auto& f : prime_sets(c, minimal_only)) out.push_back(to_neurons(f.y));
    return out;
  }, py::arg("code"), py::arg("minimal_only") = true, "Barred sets B of the factor complex.");
  m.def("format_face", [](const Face& f, int n) {
    return format_face(PolarVertexSet{to_mask(f.first), to_mask(f.second)}, n);
  });

  m.def("is_intersection_complete", [](const Code& c, const std::string& method) {
    switch (parse_method(method)) {
      case Method::brute_force: return is_intersection_complete_bruteforce(c);
      case Method::canonical_form: return is_intersection_complete_cf(c);
      default: return is_intersection_complete_facets(c);
    }
  }, py::arg("code"), py::arg("method") = "brute");
  m.def("is_max_intersection_complete", [](const Code& c, const std::string& method) {
    switch (parse_method(method)) {
      case Method::brute_force: return is_mic_bruteforce(c);
      case Method::canonical_form: return is_mic_algebraic(c);
      default: return is_mic_facets(c);
    }
  }, py::arg("code"), py::arg("method") = "brute");
  m.def("witness", [](const ClassificationReport& r, int n) { return witness_object(r, n); },
        py::arg("report"), py::arg("n"), "The report's witness as a dict, or None.");

  m.def("verify_dictionary", [](const Code& c) {
    std::vector<std::tuple<std::string, bool, std::string>> out;
    for (const auto& item : verify_dictionary(c).items) out.emplace_back(item.name, item.passed, item.detail);
    return out;
  });
  m.def("survey_text", [](int n) {
    SurveyResult r;
    {
      py::gil_scoped_release release;
      r = survey(n);
    }
    return render_survey_text(r);
  });
}
