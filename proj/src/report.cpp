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

#include "hairpin/report.hpp"

#include <sstream>

namespace hairpin {

namespace {

Json words_json(const std::vector<Word>& words) {
  Json out = Json::array();
  for (const Word& w : words) out.push_back(w);
  return out;
}

std::string show(const std::string& w) { return w.empty() ? "ε" : w; }

std::string join_words(const Json& words) {
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out += ", ";
    out += show(w.get<std::string>());
  }
  return out;
}

std::string join_indices(const Json& indices) {
  std::string out = "{";
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(indices[i].get<std::size_t>());
  }
  return out + "}";
}

void render_verdict(std::ostringstream& out, const Json& v,
                    const std::string& indent) {
  out << indent << "verdict: " << v["verdict"].get<std::string>() << "\n";
  if (!v["construction"].is_null()) {
    out << indent << "construction: " << v["construction"].get<std::string>()
        << "\n";
  }
  if (v["construction_external"].get<bool>()) {
    out << indent
        << "construction: external (m = 1 or n = 1, regular by the known "
           "construction)\n";
  }
  for (const auto& r : v["reduction"]) {
    out << indent << "reduced word " << r["word"].get<std::string>() << " ("
        << r["m"].get<std::size_t>() << "," << r["n"].get<std::size_t>()
        << "):\n";
    render_verdict(out, r, indent + "  ");
  }
  const Json& w = v["witness"];
  if (!w.is_null()) {
    out << indent << "witness on " << w["base_word"].get<std::string>()
        << (w["mirrored"].get<bool>() ? " (complement of the input)" : "")
        << ": s=" << w["s"].get<std::size_t>()
        << " t=" << w["t"].get<std::size_t>()
        << " n=" << w["n"].get<std::size_t>() << "\n";
    out << indent << "  u_s = " << w["u_s"].get<std::string>()
        << ", v_t = " << w["v_t"].get<std::string>()
        << ", u_1 = " << w["u_1"].get<std::string>() << "\n";
    out << indent << "  R  = " << w["R"].get<std::string>() << "\n";
    out << indent << "  L  = " << w["L"].get<std::string>() << "\n";
    out << indent << "  R' = " << w["R_prime"].get<std::string>() << "\n";
    out << indent << "  L' = " << w["L_prime"].get<std::string>() << "\n";
  }
}

}  // namespace

Json witness_json(const Witness& w) {
  Json out;
  out["base_word"] = w.base_word;
  out["mirrored"] = w.mirrored;
  out["s"] = w.s;
  out["t"] = w.t;
  out["u_s"] = w.u_s;
  out["v_t"] = w.v_t;
  out["u_1"] = w.u_1;
  out["n"] = w.n;
  out["R"] = w.nonreg_expr.render();
  out["L"] = w.predicted_intersection;
  out["R_prime"] = w.noncf_expr.render();
  out["L_prime"] = w.predicted_noncf_intersection;
  return out;
}

Json verdict_json(const Verdict& v) {
  Json out;
  out["word"] = v.word;
  out["m"] = v.m;
  out["n"] = v.n;
  out["verdict"] = to_string(v.kind);
  out["construction"] =
      v.construction ? Json(v.construction->render()) : Json(nullptr);
  out["construction_external"] = v.construction_external;
  out["reduction"] = Json::array();
  for (const Verdict& r : v.reduction) out["reduction"].push_back(verdict_json(r));
  out["witness"] = v.witness ? witness_json(*v.witness) : Json(nullptr);
  return out;
}

Json analysis_report(const HairpinAnalysis& a, const Verdict& v) {
  Json out;
  out["tool_version"] = kToolVersion;
  out["word"] = a.word();
  out["primer"] = a.primer().word();
  out["alphabet"] = a.primer().alphabet().spec();
  out["non_crossing"] = true;
  out["m"] = a.m();
  out["n"] = a.n();
  out["prefixes"] = words_json(a.prefixes());
  out["suffix_complements"] = words_json(a.suffix_complements());
  out["I"] = a.index_set_i();
  out["J"] = a.index_set_j();
  const Json verdict = verdict_json(v);
  for (const char* key : {"verdict", "construction", "construction_external",
                          "reduction", "witness"}) {
    out[key] = verdict[key];
  }
  return out;
}

std::string dump(const Json& report) {
  return report.dump(2, ' ', false, Json::error_handler_t::strict) + "\n";
}

std::string render_text(const Json& r) {
  std::ostringstream out;
  out << "word:               " << r["word"].get<std::string>() << "\n"
      << "primer:             " << r["primer"].get<std::string>() << "\n"
      << "alphabet:           " << r["alphabet"].get<std::string>() << "\n"
      << "non-crossing:       " << (r["non_crossing"].get<bool>() ? "yes" : "no")
      << "\n"
      << "(m, n):             (" << r["m"].get<std::size_t>() << ", "
      << r["n"].get<std::size_t>() << ")\n"
      << "prefixes:           " << join_words(r["prefixes"]) << "\n"
      << "suffix complements: " << join_words(r["suffix_complements"]) << "\n"
      << "I, J:               " << join_indices(r["I"]) << ", "
      << join_indices(r["J"]) << "\n";
  render_verdict(out, r, "");
  return out.str();
}

}  // namespace hairpin
