// Copyright 2026 The hairpin Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hairpin/analysis.hpp"
#include "hairpin/automaton.hpp"
#include "hairpin/decision.hpp"
#include "hairpin/dynamics.hpp"
#include "hairpin/errors.hpp"
#include "hairpin/lang_expr.hpp"
#include "hairpin/report.hpp"
#include "hairpin/word.hpp"

namespace py = pybind11;
using namespace hairpin;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Iterated hairpin completions of non-crossing words";
  m.attr("__version__") = kToolVersion;

  auto base = py::register_exception<Error>(m, "HairpinError");
  py::register_exception<InvalidAlphabet>(m, "InvalidAlphabet", base);
  py::register_exception<AlphabetMismatch>(m, "AlphabetMismatch", base);
  py::register_exception<PrimerSelfComplementary>(m, "PrimerSelfComplementary",
                                                   base);
  py::register_exception<DomainError>(m, "DomainError", base);
  py::register_exception<CrossingError>(m, "CrossingError", base);
  py::register_exception<PreconditionError>(m, "PreconditionError", base);
  py::register_exception<InternalInvariantViolation>(
      m, "InternalInvariantViolation", base);

  py::class_<Alphabet>(m, "Alphabet")
      .def_static("dna", &Alphabet::dna)
      .def_static("parse", &Alphabet::parse, py::arg("spec"))
      .def_property_readonly("letters", &Alphabet::letters)
      .def_property_readonly("spec", &Alphabet::spec)
      .def("complement",
           [](const Alphabet& a, const std::string& w) {
             a.validate(w);
             return complement(a, w);
           })
      .def("__repr__",
           [](const Alphabet& a) { return "Alphabet('" + a.spec() + "')"; });

  py::class_<Primer>(m, "Primer")
      .def(py::init([](const std::string& word, const Alphabet& alphabet) {
             return Primer(alphabet, word);
           }),
           py::arg("word"), py::arg("alphabet") = Alphabet::dna())
      .def_property_readonly("word", &Primer::word)
      .def_property_readonly("complement", &Primer::complement)
      .def_property_readonly("alphabet", &Primer::alphabet)
      .def("__len__", &Primer::size);

  m.def("in_star",
        [](const std::string& x, const std::vector<Word>& tokens) {
          return in_star(x, tokens);
        });
  m.def("star_factorization",
        [](const std::string& x, const std::vector<Word>& tokens) {
          return star_factorization(x, tokens);
        });
  m.def("occurrences", [](const std::string& p, const std::string& w) {
    return occurrences(p, w);
  });
  m.def("alpha_index", [](const std::string& x, const Primer& p) {
    return alpha_index(x, p);
  });

  m.def("is_non_crossing", [](const std::string& w, const Primer& p) {
    return is_non_crossing(w, p);
  });
  m.def("alpha_prefixes", [](const std::string& w, const Primer& p) {
    return alpha_prefixes(w, p);
  });
  m.def("alpha_suffix_complements", [](const std::string& w, const Primer& p) {
    return alpha_suffix_complements(w, p);
  });

  py::class_<HairpinAnalysis>(m, "HairpinAnalysis")
      .def_property_readonly("word", &HairpinAnalysis::word)
      .def_property_readonly("primer", &HairpinAnalysis::primer)
      .def_property_readonly("prefixes", &HairpinAnalysis::prefixes)
      .def_property_readonly("suffix_complements",
                             &HairpinAnalysis::suffix_complements)
      .def_property_readonly("m", &HairpinAnalysis::m)
      .def_property_readonly("n", &HairpinAnalysis::n)
      .def_property_readonly("I", &HairpinAnalysis::index_set_i)
      .def_property_readonly("J", &HairpinAnalysis::index_set_j);
  m.def("analyze", [](const std::string& w, const Primer& p) {
    return analyze(w, p);
  });

  m.def("right_completions", [](const std::string& w, const Primer& p) {
    return right_completions(w, p);
  });
  m.def("left_completions", [](const std::string& w, const Primer& p) {
    return left_completions(w, p);
  });
  m.def("one_step", [](const std::string& w, const Primer& p) {
    return one_step(w, p);
  });
  m.def("enumerate_bounded",
        [](const std::string& w, const Primer& p, std::size_t max_len) {
          return enumerate_bounded(w, p, max_len);
        },
        py::arg("word"), py::arg("primer"), py::arg("max_len"));
  m.def("member",
        [](const std::string& z, const std::string& w, const Primer& p) {
          return member(z, w, p);
        },
        py::arg("target"), py::arg("word"), py::arg("primer"));
  m.def("hk_one_step",
        [](const std::string& w, std::size_t k, const Alphabet& a) {
          return hk_one_step(w, k, a);
        },
        py::arg("word"), py::arg("k"), py::arg("alphabet") = Alphabet::dna());

  py::class_<LangExpr>(m, "LangExpr")
      .def("render", &LangExpr::render)
      .def("enumerate",
           [](const LangExpr& e, std::size_t max_len) {
             return enumerate_expr(e, max_len);
           },
           py::arg("max_len"))
      .def("accepts",
           [](const LangExpr& e, const Alphabet& a, const std::string& z) {
             return accepts(determinize(compile(e, a)), z);
           })
      .def("to_dot",
           [](const LangExpr& e, const Alphabet& a) {
             return to_dot(determinize(compile(e, a)));
           })
      .def("__str__", &LangExpr::render);

  py::class_<Witness>(m, "Witness")
      .def_readonly("base_word", &Witness::base_word)
      .def_readonly("mirrored", &Witness::mirrored)
      .def_readonly("s", &Witness::s)
      .def_readonly("t", &Witness::t)
      .def_readonly("u_s", &Witness::u_s)
      .def_readonly("v_t", &Witness::v_t)
      .def_readonly("u_1", &Witness::u_1)
      .def_readonly("n", &Witness::n)
      .def_readonly("nonreg_expr", &Witness::nonreg_expr)
      .def_readonly("noncf_expr", &Witness::noncf_expr)
      .def_readonly("predicted_intersection",
                    &Witness::predicted_intersection)
      .def("pumped_word", &Witness::pumped_word)
      .def("doubled_word", &Witness::doubled_word);

  py::class_<Verdict>(m, "Verdict")
      .def_readonly("word", &Verdict::word)
      .def_property_readonly("kind",
                             [](const Verdict& v) { return to_string(v.kind); })
      .def_property_readonly("regular", &Verdict::regular)
      .def_readonly("m", &Verdict::m)
      .def_readonly("n", &Verdict::n)
      .def_readonly("construction", &Verdict::construction)
      .def_readonly("construction_external", &Verdict::construction_external)
      .def_readonly("witness", &Verdict::witness)
      .def_readonly("reduction", &Verdict::reduction);
  m.def("decide", [](const std::string& w, const Primer& p) {
    return decide(w, p);
  });

  m.def("report",
        [](const std::string& w, const Primer& p) {
          const HairpinAnalysis a = analyze(w, p);
          return dump(analysis_report(a, decide(a)));
        },
        py::arg("word"), py::arg("primer"),
        "JSON analysis report, identical to `hairpin analyze --json`.");
}
