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

// Regularity decision for the iterated hairpin completion of a non-crossing
// word, with a regular construction for every Regular verdict and
// pumping-style witnesses for every NonRegular one.

#ifndef HAIRPIN_DECISION_HPP
#define HAIRPIN_DECISION_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hairpin/analysis.hpp"
#include "hairpin/lang_expr.hpp"
#include "hairpin/word.hpp"

namespace hairpin {

enum class VerdictKind { Regular, NonRegular };

const char* to_string(VerdictKind kind) noexcept;

/// Non-regularity witness for a word with u_1 = v_1. With
///   R  = u_s u_1^{>=n} v_t w ~u_1^{>=n} ~u_s
///   R' = (u_s u_1^{>=n} v_t)^2 w ~u_1^{>=n} ~u_s
/// (~ is the complement) the completion closure of `base_word` meets R in
/// { u_s u_1^l v_t w ~u_1^l ~u_s : l >= n }, which is not regular, and
/// meets R' in the doubled language, which is not context-free.
///
/// The indices refer to the analysis of `base_word`. When `mirrored` is set
/// the witness was selected on the complement of the analyzed word, and
/// `base_word` is that complement.
struct Witness {
  Word base_word;
  bool mirrored = false;
  std::size_t s = 0;
  std::size_t t = 0;
  Word u_s;
  Word v_t;
  Word u_1;
  Word u_s_complement;
  Word u_1_complement;
  std::size_t n = 0;
  LangExpr nonreg_expr = LangExpr::atom({});
  std::string predicted_intersection;
  LangExpr noncf_expr = LangExpr::atom({});
  std::string predicted_noncf_intersection;

  /// u_s u_1^left v_t w ~u_1^right ~u_s; a member iff left == right.
  Word pumped_word(std::size_t left, std::size_t right) const;
  /// (u_s u_1^first v_t)(u_s u_1^second v_t) w ~u_1^right ~u_s; a member
  /// iff all three counts agree.
  Word doubled_word(std::size_t first, std::size_t second,
                    std::size_t right) const;
};

/// The non-context-free intersection witness derived from a Witness.
struct NonCfWitness {
  LangExpr expr;
  std::string predicted_intersection;
};

struct Verdict {
  Word word;
  VerdictKind kind = VerdictKind::Regular;
  std::size_t m = 0;
  std::size_t n = 0;
  /// Present for every Regular verdict with m, n >= 2.
  std::optional<LangExpr> construction;
  /// Regular with m = 1 or n = 1: the construction is known to exist but is
  /// not produced here.
  bool construction_external = false;
  std::optional<Witness> witness;
  /// Sub-verdicts for w.~u_i (i in I) then v_j.w (j in J) when u_1 != v_1.
  std::vector<Verdict> reduction;

  bool regular() const noexcept { return kind == VerdictKind::Regular; }
};

/// Both regularity conditions for an analysis with m, n >= 2 and u_1 = v_1:
///   for all s: u_s in V* or V subset of {u_1..u_s}*
///   for all t: v_t in U* or U subset of {v_1..v_t}*
/// where U = {u_1..u_{m-1}}, V = {v_1..v_{n-1}}. Throws PreconditionError
/// outside that setting.
bool regularity_condition(const HairpinAnalysis& analysis);

/// Expression for the completion closure when regularity_condition holds.
/// Throws PreconditionError otherwise.
LangExpr construct_regular(const HairpinAnalysis& analysis);

/// Witness when regularity_condition fails. Throws PreconditionError
/// otherwise.
Witness witness_nonregular(const HairpinAnalysis& analysis);

NonCfWitness witness_noncf(const Witness& witness);

/// Full decision. Throws InternalInvariantViolation if a reduced word does
/// not have the expected shape.
Verdict decide(const HairpinAnalysis& analysis);
Verdict decide(std::string_view w, const Primer& primer);

}  // namespace hairpin

#endif  // HAIRPIN_DECISION_HPP
