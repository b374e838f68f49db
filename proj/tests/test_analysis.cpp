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

#include <random>

#include "hairpin/analysis.hpp"
#include "hairpin/errors.hpp"
#include "invariants.hpp"
#include "oracles.hpp"

using namespace hairpin;
using Words = std::vector<Word>;
using Indices = std::vector<std::size_t>;

namespace {
const Primer kA(Alphabet::dna(), "A");
}  // namespace

TEST_CASE("non-crossing by start positions") {
  CHECK(is_non_crossing("ACAGTGT", kA));
  CHECK_FALSE(is_non_crossing("ATAT", kA));
  CHECK(is_non_crossing("ACGC", kA));
  CHECK(is_non_crossing("CGC", kA));
  CHECK_THROWS_AS(is_non_crossing("AT", Primer(Alphabet::dna(), "AT")),
                  PrimerSelfComplementary);
}

TEST_CASE("non-crossing by the unique minimal factor") {
  CHECK(is_non_crossing_by_minimal_factor("ACAGTGT", kA));
  CHECK_FALSE(is_non_crossing_by_minimal_factor("ATAT", kA));
  CHECK(is_non_crossing_by_minimal_factor("AT", kA));
  CHECK_THROWS_AS(is_non_crossing_by_minimal_factor("ACGC", kA), DomainError);
  CHECK_THROWS_AS(is_non_crossing_by_minimal_factor("TA", kA), DomainError);
}

TEST_CASE("both characterizations agree on every A...T word up to length 12") {
  std::size_t checked = 0;
  for (const Word& mid : oracle::all_words("ACGT", 0, 10)) {
    const Word w = "A" + mid + "T";
    const bool by_scan = is_non_crossing(w, kA);
    REQUIRE(by_scan == is_non_crossing_by_minimal_factor(w, kA));
    REQUIRE(by_scan == oracle::non_crossing_by_scan(w, "A"));
    ++checked;
  }
  CHECK(checked == 1398101);
}

TEST_CASE("alpha-prefixes") {
  CHECK(alpha_prefixes("ACAGTGT", kA) == Words{"", "AC"});
  CHECK(alpha_prefixes("ACAGACTGGTGT", kA) == Words{"", "AC", "ACAG"});
  CHECK(alpha_prefixes("CG", kA).empty());
}

TEST_CASE("complements of complement-suffixes") {
  CHECK(alpha_suffix_complements("ACAGTGT", kA) == Words{"", "AC"});
  CHECK(alpha_suffix_complements("ACAGACTGGTGT", kA) ==
        Words{"", "AC", "ACACC"});
  CHECK(alpha_suffix_complements("ACATCTGT", kA) == Words{"", "AC", "ACAG"});
}

TEST_CASE("analyze") {
  SUBCASE("(2,2) with u_1 = v_1") {
    const auto a = analyze("ACAGTGT", kA);
    CHECK(a.m() == 2);
    CHECK(a.n() == 2);
    CHECK(a.u(1) == "AC");
    CHECK(a.v(1) == "AC");
    CHECK(a.index_set_i() == Indices{1});
    CHECK(a.index_set_j() == Indices{1});
  }
  SUBCASE("(2,2) with u_1 != v_1") {
    const auto a = analyze("ACATCT", kA);
    CHECK(a.m() == 2);
    CHECK(a.n() == 2);
    CHECK(a.u(1) == "AC");
    CHECK(a.v(1) == "AG");
    CHECK(a.index_set_i() == Indices{1});
    CHECK(a.index_set_j() == Indices{1});
  }
  SUBCASE("(3,3)") {
    const auto a = analyze("ACAGACTGGTGT", kA);
    CHECK(a.prefixes() == Words{"", "AC", "ACAG"});
    CHECK(a.suffix_complements() == Words{"", "AC", "ACACC"});
    CHECK(a.index_set_i() == Indices{1, 2});
    CHECK(a.index_set_j() == Indices{1, 2});
    CHECK(a.prefix_generators() == Words{"AC", "ACAG"});
    CHECK(a.suffix_generators(1) == Words{"AC"});
  }
  SUBCASE("generated prefixes leave the index set") {
    // u = (e, AC, ACAC): ACAC = AC.AC
    const auto a = analyze("ACACAGT", kA);
    CHECK(a.prefixes() == Words{"", "AC", "ACAC"});
    CHECK(a.index_set_i() == Indices{1});
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(analyze("ATAT", kA), CrossingError);
    CHECK_THROWS_AS(analyze("CAGT", kA), DomainError);
    CHECK_THROWS_AS(analyze("ACAG", kA), DomainError);
    CHECK_THROWS_AS(analyze("ACUT", kA), AlphabetMismatch);
    CHECK_THROWS_AS(analyze("AT", Primer(Alphabet::dna(), "AT")),
                    PrimerSelfComplementary);
  }
}

TEST_CASE("longer primers") {
  const Primer ac(Alphabet::dna(), "AC");
  const auto a = analyze("ACGACTTGTGT", ac);
  CHECK(a.prefixes() == Words{"", "ACG"});
  CHECK(a.suffix_complements() == Words{"", "AC"});
  // Primer and complement may overlap: CAT / ATG in CATG.
  const Primer cat(Alphabet::dna(), "CAT");
  CHECK(is_non_crossing("CATG", cat));
  CHECK(analyze("CATG", cat).m() == 1);
}

TEST_CASE("word-level invariants on the corpus up to length 8") {
  std::mt19937 rng(11);
  for (const Word& w : oracle::corpus(8)) {
    const auto a = analyze(w, kA);
    for (auto r : {invariants::structure(a), invariants::primer_prefix(a, rng),
                   invariants::length_nonoverlap(a), invariants::suffix_index(a),
                   invariants::star_index(a), invariants::inclusions(a)}) {
      INFO(w);
      REQUIRE_FALSE(r.has_value());
    }
  }
}

TEST_CASE("word-level invariants with a two-letter primer") {
  std::mt19937 rng(12);
  const Primer ac(Alphabet::dna(), "AC");
  std::size_t analyzed = 0;
  for (const Word& mid : oracle::all_words("ACGT", 0, 6)) {
    const Word w = "AC" + mid + "GT";
    const bool non_crossing = is_non_crossing(w, ac);
    REQUIRE(non_crossing == is_non_crossing_by_minimal_factor(w, ac));
    if (!non_crossing) continue;
    const auto a = analyze(w, ac);
    ++analyzed;
    for (auto r : {invariants::structure(a), invariants::primer_prefix(a, rng),
                   invariants::length_nonoverlap(a), invariants::suffix_index(a),
                   invariants::star_index(a), invariants::inclusions(a)}) {
      INFO(w);
      REQUIRE_FALSE(r.has_value());
    }
  }
  CHECK(analyzed > 0);
}
