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

#include "hairpin/decision.hpp"

#include <algorithm>

#include "hairpin/errors.hpp"

namespace hairpin {

const char* to_string(VerdictKind kind) noexcept {
  return kind == VerdictKind::Regular ? "Regular" : "NonRegular";
}

namespace {

void require_equal_shortest(const HairpinAnalysis& a) {
  if (a.m() < 2 || a.n() < 2 || a.u(1) != a.v(1)) {
    throw PreconditionError("word " + a.word() +
                            " needs m, n >= 2 and u_1 = v_1");
  }
}

bool all_in_star(const std::vector<Word>& xs, const std::vector<Word>& gens) {
  return std::all_of(xs.begin(), xs.end(),
                     [&](const Word& x) { return in_star(x, gens); });
}

bool prefix_condition(const HairpinAnalysis& a, std::size_t s) {
  const auto v_all = a.suffix_generators();
  return in_star(a.u(s), v_all) || all_in_star(v_all, a.prefix_generators(s));
}

bool suffix_condition(const HairpinAnalysis& a, std::size_t t) {
  const auto u_all = a.prefix_generators();
  return in_star(a.v(t), u_all) || all_in_star(u_all, a.suffix_generators(t));
}

std::vector<Word> complements(const Alphabet& alphabet,
                              const std::vector<Word>& words) {
  std::vector<Word> out;
  for (const Word& w : words) out.push_back(complement(alphabet, w));
  return out;
}

// First s with u_s outside V*, then the first t with v_t outside
// {u_1..u_s}*.
std::optional<std::pair<std::size_t, std::size_t>> select_indices(
    const HairpinAnalysis& a) {
  const auto v_all = a.suffix_generators();
  for (std::size_t s = 1; s < a.m(); ++s) {
    if (in_star(a.u(s), v_all)) continue;
    const auto u_upto = a.prefix_generators(s);
    for (std::size_t t = 1; t < a.n(); ++t) {
      if (!in_star(a.v(t), u_upto)) return std::pair{s, t};
    }
    return std::nullopt;
  }
  return std::nullopt;
}

Word power(const Word& w, std::size_t times) {
  Word out;
  out.reserve(w.size() * times);
  for (std::size_t i = 0; i < times; ++i) out += w;
  return out;
}

Witness build_witness(const HairpinAnalysis& a, std::size_t s, std::size_t t,
                      bool mirrored) {
  const Alphabet& alphabet = a.primer().alphabet();
  Witness wit;
  wit.base_word = a.word();
  wit.mirrored = mirrored;
  wit.s = s;
  wit.t = t;
  wit.u_s = a.u(s);
  wit.v_t = a.v(t);
  wit.u_1 = a.u(1);
  wit.u_s_complement = complement(alphabet, wit.u_s);
  wit.u_1_complement = complement(alphabet, wit.u_1);
  wit.n = a.n();
  auto pumped_block = [&] {
    return std::vector<LangExpr>{LangExpr::atom(wit.u_s),
                                 LangExpr::at_least(wit.u_1, wit.n),
                                 LangExpr::atom(wit.v_t)};
  };
  std::vector<LangExpr> tail{LangExpr::atom(wit.base_word),
                             LangExpr::at_least(wit.u_1_complement, wit.n),
                             LangExpr::atom(wit.u_s_complement)};
  std::vector<LangExpr> single = pumped_block();
  single.insert(single.end(), tail.begin(), tail.end());
  wit.nonreg_expr = LangExpr::concat(std::move(single));
  const std::string n_text = std::to_string(wit.n);
  wit.predicted_intersection = "{ " + wit.u_s + "·" + wit.u_1 + "^l·" +
                               wit.v_t + "·" + wit.base_word + "·" +
                               wit.u_1_complement + "^l·" +
                               wit.u_s_complement + " : l >= " + n_text + " }";
  NonCfWitness noncf = witness_noncf(wit);
  wit.noncf_expr = std::move(noncf.expr);
  wit.predicted_noncf_intersection = std::move(noncf.predicted_intersection);
  return wit;
}

Verdict decide_reduced(const HairpinAnalysis& a) {
  Verdict v;
  v.word = a.word();
  v.m = a.m();
  v.n = a.n();
  if (regularity_condition(a)) {
    v.kind = VerdictKind::Regular;
    v.construction = construct_regular(a);
  } else {
    v.kind = VerdictKind::NonRegular;
    v.witness = witness_nonregular(a);
  }
  return v;
}

}  // namespace

Word Witness::pumped_word(std::size_t left, std::size_t right) const {
  return u_s + power(u_1, left) + v_t + base_word +
         power(u_1_complement, right) + u_s_complement;
}

Word Witness::doubled_word(std::size_t first, std::size_t second,
                           std::size_t right) const {
  return u_s + power(u_1, first) + v_t + u_s + power(u_1, second) + v_t +
         base_word + power(u_1_complement, right) + u_s_complement;
}

bool regularity_condition(const HairpinAnalysis& a) {
  require_equal_shortest(a);
  for (std::size_t s = 1; s < a.m(); ++s) {
    if (!prefix_condition(a, s)) return false;
  }
  for (std::size_t t = 1; t < a.n(); ++t) {
    if (!suffix_condition(a, t)) return false;
  }
  return true;
}

LangExpr construct_regular(const HairpinAnalysis& a) {
  if (!regularity_condition(a)) {
    throw PreconditionError("the completion closure of " + a.word() +
                            " is not regular");
  }
  const Alphabet& alphabet = a.primer().alphabet();
  const auto u_all = a.prefix_generators();
  const auto v_all = a.suffix_generators();
  const Word& w = a.word();

  std::size_t s = 1;
  while (s < a.m() && in_star(a.u(s), v_all)) ++s;
  const bool prefix_violation = s < a.m();
  const bool suffix_violation = !all_in_star(v_all, u_all);

  if (!prefix_violation && !suffix_violation) {
    return LangExpr::concat({LangExpr::star_set(u_all), LangExpr::atom(w),
                             LangExpr::star_set(complements(alphabet, u_all))});
  }
  if (prefix_violation && suffix_violation) {
    throw InternalInvariantViolation(
        "both sides violate the inclusion for " + w);
  }
  if (suffix_violation) {
    const HairpinAnalysis mirror =
        analyze(complement(alphabet, w), a.primer());
    return complement_image(construct_regular(mirror), alphabet);
  }

  // Prefix side: R' = V* w {~u_1..~u_{s-1}}* together with, for s <= i < m,
  // R_i = {u_1..u_i}* w {~u_1..~u_i}* ~u_i {~u_1..~u_i}*.
  std::vector<LangExpr> parts;
  parts.push_back(LangExpr::concat(
      {LangExpr::star_set(v_all), LangExpr::atom(w),
       LangExpr::star_set(complements(alphabet, a.prefix_generators(s - 1)))}));
  for (std::size_t i = s; i < a.m(); ++i) {
    const auto upto = a.prefix_generators(i);
    const auto upto_bar = LangExpr::star_set(complements(alphabet, upto));
    parts.push_back(LangExpr::concat(
        {LangExpr::star_set(upto), LangExpr::atom(w), upto_bar,
         LangExpr::atom(complement(alphabet, a.u(i))), upto_bar}));
  }
  return LangExpr::union_of(std::move(parts));
}

Witness witness_nonregular(const HairpinAnalysis& a) {
  if (regularity_condition(a)) {
    throw PreconditionError("the completion closure of " + a.word() +
                            " is regular; no witness exists");
  }
  const auto direct = select_indices(a);
  if (direct && direct->first <= direct->second) {
    return build_witness(a, direct->first, direct->second, false);
  }
  const HairpinAnalysis mirror =
      analyze(complement(a.primer().alphabet(), a.word()), a.primer());
  const auto flipped = select_indices(mirror);
  if (flipped && flipped->first <= flipped->second) {
    return build_witness(mirror, flipped->first, flipped->second, true);
  }
  if (direct) return build_witness(a, direct->first, direct->second, false);
  if (flipped) {
    return build_witness(mirror, flipped->first, flipped->second, true);
  }
  throw InternalInvariantViolation("no witness indices found for " +
                                   a.word());
}

NonCfWitness witness_noncf(const Witness& wit) {
  std::vector<LangExpr> parts;
  for (int copy = 0; copy < 2; ++copy) {
    parts.push_back(LangExpr::atom(wit.u_s));
    parts.push_back(LangExpr::at_least(wit.u_1, wit.n));
    parts.push_back(LangExpr::atom(wit.v_t));
  }
  parts.push_back(LangExpr::atom(wit.base_word));
  parts.push_back(LangExpr::at_least(wit.u_1_complement, wit.n));
  parts.push_back(LangExpr::atom(wit.u_s_complement));
  const std::string block = wit.u_s + "·" + wit.u_1 + "^l·" + wit.v_t;
  return {LangExpr::concat(std::move(parts)),
          "{ " + block + "·" + block + "·" + wit.base_word + "·" +
              wit.u_1_complement + "^l·" + wit.u_s_complement +
              " : l >= " + std::to_string(wit.n) + " }"};
}

Verdict decide(const HairpinAnalysis& a) {
  if (a.m() == 1 || a.n() == 1) {
    Verdict v;
    v.word = a.word();
    v.m = a.m();
    v.n = a.n();
    v.kind = VerdictKind::Regular;
    v.construction_external = true;
    return v;
  }
  if (a.u(1) == a.v(1)) return decide_reduced(a);

  const Alphabet& alphabet = a.primer().alphabet();
  Verdict v;
  v.word = a.word();
  v.m = a.m();
  v.n = a.n();
  std::vector<Word> derived;
  for (std::size_t i : a.index_set_i()) {
    derived.push_back(a.word() + complement(alphabet, a.u(i)));
  }
  for (std::size_t j : a.index_set_j()) derived.push_back(a.v(j) + a.word());
  for (const Word& d : derived) {
    const HairpinAnalysis sub = analyze(d, a.primer());
    if (sub.m() < 2 || sub.n() < 2 || sub.u(1) != sub.v(1)) {
      throw InternalInvariantViolation(
          "reduced word " + d + " does not have m, n >= 2 and u_1 = v_1");
    }
    v.reduction.push_back(decide_reduced(sub));
  }
  const auto bad = std::find_if(v.reduction.begin(), v.reduction.end(),
                                [](const Verdict& r) { return !r.regular(); });
  if (bad == v.reduction.end()) {
    v.kind = VerdictKind::Regular;
    std::vector<LangExpr> parts{LangExpr::atom(a.word())};
    for (const Verdict& r : v.reduction) parts.push_back(*r.construction);
    v.construction = LangExpr::union_of(std::move(parts));
  } else {
    v.kind = VerdictKind::NonRegular;
    v.witness = bad->witness;
  }
  return v;
}

Verdict decide(std::string_view w, const Primer& primer) {
  return decide(analyze(w, primer));
}

}  // namespace hairpin
