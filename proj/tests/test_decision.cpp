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

#include <doctest.h>

#include <algorithm>
#include <iterator>

#include "hairpin/automaton.hpp"
#include "hairpin/decision.hpp"
#include "hairpin/dynamics.hpp"
#include "hairpin/errors.hpp"
#include "oracles.hpp"

using namespace hairpin;

namespace {
const Alphabet kDna = Alphabet::dna();
const Primer kA(kDna, "A");

std::size_t bound_for(const Word& w) { return w.size() + 10; }
}  // namespace

TEST_CASE("equal shortest generators, all-inclusion case") {
  const Verdict v = decide("ACAGTGT", kA);
  CHECK(v.regular());
  CHECK(v.m == 2);
  CHECK(v.n == 2);
  REQUIRE(v.construction);
  CHECK(v.construction->render() == "{AC}*·\"ACAGTGT\"·{GT}*");
  CHECK_FALSE(v.witness);
  CHECK(v.reduction.empty());
  CHECK(enumerate_expr(*v.construction, 17) == enumerate_bounded("ACAGTGT", kA, 17));
}

TEST_CASE("non-regular word with its witness") {
  const Verdict v = decide("ACAGACTGGTGT", kA);
  CHECK_FALSE(v.regular());
  REQUIRE(v.witness);
  const Witness& wit = *v.witness;
  CHECK_FALSE(wit.mirrored);
  CHECK(wit.s == 2);
  CHECK(wit.t == 2);
  CHECK(wit.n == 3);
  CHECK(wit.u_s == "ACAG");
  CHECK(wit.v_t == "ACACC");
  CHECK(wit.u_1 == "AC");
  CHECK(wit.u_s_complement == "CTGT");
  CHECK(wit.u_1_complement == "GT");
  CHECK(wit.nonreg_expr.render() ==
        "\"ACAG\"·AC^{>=3}·\"ACACC\"·\"ACAGACTGGTGT\"·GT^{>=3}·\"CTGT\"");
  CHECK(wit.predicted_intersection ==
        "{ ACAG·AC^l·ACACC·ACAGACTGGTGT·GT^l·CTGT : l >= 3 }");

  const Word good = wit.pumped_word(3, 3);
  CHECK(good.size() == 37);
  CHECK(good == "ACAG" "ACACAC" "ACACC" "ACAGACTGGTGT" "GTGTGT" "CTGT");
  CHECK(member(good, "ACAGACTGGTGT", kA));
  CHECK_FALSE(member(wit.pumped_word(3, 4), "ACAGACTGGTGT", kA));
  CHECK_FALSE(member(wit.pumped_word(4, 3), "ACAGACTGGTGT", kA));
  CHECK(member(wit.pumped_word(5, 5), "ACAGACTGGTGT", kA));

  const Word doubled = wit.doubled_word(3, 3, 3);
  CHECK(doubled.size() == 52);
  CHECK(member(doubled, "ACAGACTGGTGT", kA));
  CHECK_FALSE(member(wit.doubled_word(3, 4, 3), "ACAGACTGGTGT", kA));
  CHECK_FALSE(member(wit.doubled_word(3, 3, 4), "ACAGACTGGTGT", kA));
  CHECK_FALSE(member(wit.doubled_word(4, 3, 3), "ACAGACTGGTGT", kA));

  const NonCfWitness nc = witness_noncf(wit);
  CHECK(nc.expr == wit.noncf_expr);
  CHECK(nc.expr.render() ==
        "\"ACAG\"·AC^{>=3}·\"ACACC\"·\"ACAG\"·AC^{>=3}·\"ACACC\"·"
        "\"ACAGACTGGTGT\"·GT^{>=3}·\"CTGT\"");
}

TEST_CASE("reduction for distinct shortest generators") {
  const Verdict v = decide("ACATCT", kA);
  CHECK(v.regular());
  REQUIRE(v.reduction.size() == 2);
  CHECK(v.reduction[0].word == "ACATCTGT");
  CHECK(v.reduction[1].word == "AGACATCT");
  CHECK(v.reduction[0].regular());
  CHECK(v.reduction[1].regular());
  REQUIRE(v.construction);
  CHECK(v.construction->kind() == LangExpr::Kind::Union);
  for (std::size_t L : {6u, 10u, 14u, 18u}) {
    CHECK(enumerate_expr(*v.construction, L) == enumerate_bounded("ACATCT", kA, L));
  }

  // The three parts are pairwise disjoint.
  const auto& parts = v.construction->children();
  REQUIRE(parts.size() == 3);
  std::vector<WordSet> sets;
  for (const auto& p : parts) sets.push_back(enumerate_expr(p, 18));
  for (std::size_t a = 0; a < sets.size(); ++a) {
    for (std::size_t b = a + 1; b < sets.size(); ++b) {
      WordSet both;
      std::set_intersection(sets[a].begin(), sets[a].end(), sets[b].begin(), sets[b].end(),
                            std::back_inserter(both), ShortLex{});
      CHECK(both.empty());
    }
  }
}

TEST_CASE("constructions for a prefix-side and a suffix-side violation") {
  const auto prefix_side = analyze("AGACATCT", kA);
  CHECK(prefix_side.m() == 3);
  CHECK(prefix_side.n() == 2);
  CHECK(regularity_condition(prefix_side));
  const LangExpr r = construct_regular(prefix_side);
  CHECK(r.render() ==
        "{AG}*·\"AGACATCT\"·{CT}* ∪ {AG,AGAC}*·\"AGACATCT\"·{CT,GTCT}*·\"GTCT\"·{CT,GTCT}*");
  CHECK(enumerate_expr(r, 20) == enumerate_bounded("AGACATCT", kA, 20));

  const auto suffix_side = analyze("ACATCTGT", kA);
  CHECK(suffix_side.suffix_complements() == std::vector<Word>{"", "AC", "ACAG"});
  const LangExpr mirrored = construct_regular(suffix_side);
  CHECK(mirrored ==
        complement_image(construct_regular(analyze("ACAGATGT", kA)), kDna));
  CHECK(enumerate_expr(mirrored, 20) == enumerate_bounded("ACATCTGT", kA, 20));
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(regularity_condition(analyze("ACATCT", kA)), PreconditionError);
  CHECK_THROWS_AS(construct_regular(analyze("ACAGACTGGTGT", kA)), PreconditionError);
  CHECK_THROWS_AS(witness_nonregular(analyze("ACAGTGT", kA)), PreconditionError);
  CHECK_THROWS_AS(regularity_condition(analyze("AT", kA)), PreconditionError);

  const Verdict single = decide("AT", kA);
  CHECK(single.regular());
  CHECK(single.construction_external);
  CHECK_FALSE(single.construction);
}

TEST_CASE("every corpus verdict is sound at a bounded length") {
  std::size_t regular = 0, nonregular = 0;
  for (const Word& w : oracle::corpus(8)) {
    INFO(w);
    const auto a = analyze(w, kA);
    const Verdict v = decide(a);
    const std::size_t L = bound_for(w);
    if (v.regular()) {
      ++regular;
      if (v.construction_external) {
        CHECK((a.m() == 1 || a.n() == 1));
        continue;
      }
      REQUIRE(v.construction);
      const WordSet closure = enumerate_bounded(w, kA, L);
      REQUIRE(enumerate_expr(*v.construction, L) == closure);
      const auto dfa = determinize(compile(*v.construction, kDna));
      for (const Word& z : closure) REQUIRE(accepts(dfa, z));
    } else {
      ++nonregular;
      REQUIRE(v.witness);
      const Witness& wit = *v.witness;
      // The witness may come from a reduced word; its indices refer to the
      // analysis of base_word, whose complement was analyzed when mirrored.
      const Word analyzed = wit.mirrored ? complement(kDna, wit.base_word) : wit.base_word;
      auto as_analyzed = [&](const Word& z) { return wit.mirrored ? complement(kDna, z) : z; };
      if (analyzed != w) {
        CHECK(!v.reduction.empty());
        CHECK(member(analyzed, w, kA));
      }
      auto in_closure = [&](const Word& z) {
        const bool sub = member(as_analyzed(z), analyzed, kA);
        CHECK(member(as_analyzed(z), w, kA) == sub);
        return sub;
      };
      for (std::size_t l = wit.n; l < wit.n + 2; ++l) {
        CHECK(in_closure(wit.pumped_word(l, l)));
        CHECK_FALSE(in_closure(wit.pumped_word(l, l + 1)));
        CHECK_FALSE(in_closure(wit.pumped_word(l + 1, l)));
        CHECK(in_closure(wit.doubled_word(l, l, l)));
        CHECK_FALSE(in_closure(wit.doubled_word(l, l + 1, l)));
      }
    }
  }
  CHECK(regular > 0);
  CHECK(nonregular > 0);
}

TEST_CASE("verdicts are invariant under the complement") {
  for (const Word& w : oracle::corpus(8)) {
    INFO(w);
    const Word c = complement(kDna, w);
    const Verdict v = decide(w, kA);
    const Verdict vc = decide(c, kA);
    REQUIRE(v.kind == vc.kind);
    if (v.construction && w.size() <= 7) {
      WordSet mapped;
      for (const Word& z : enumerate_bounded(w, kA, w.size() + 8)) mapped.push_back(complement(kDna, z));
      normalize(mapped);
      CHECK(enumerate_expr(complement_image(*v.construction, kDna), w.size() + 8) == mapped);
    }
  }
}
