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
#include "hairpin/word.hpp"
#include "oracles.hpp"

using namespace hairpin;

namespace {
const Alphabet kDna = Alphabet::dna();
Primer primer_a() { return Primer(kDna, "A"); }
}  // namespace

TEST_CASE("alphabet parsing") {
  CHECK(Alphabet::parse("dna") == kDna);
  CHECK(Alphabet::parse("A:T,C:G") == kDna);
  CHECK(Alphabet::parse("G:C,T:A") == kDna);
  CHECK(kDna.spec() == "A:T,C:G");
  CHECK(kDna.letters() == "ACGT");

  const Alphabet self = Alphabet::parse("a:b,x:x");
  CHECK(self.complement('x') == 'x');
  CHECK(self.complement('a') == 'b');
  CHECK(self.spec() == "a:b,x:x");

  CHECK_THROWS_AS(Alphabet::parse(""), InvalidAlphabet);
  CHECK_THROWS_AS(Alphabet::parse("AT"), InvalidAlphabet);
  CHECK_THROWS_AS(Alphabet::parse("A:T,A:C"), InvalidAlphabet);
  CHECK_THROWS_AS(Alphabet::parse("A: "), InvalidAlphabet);
  CHECK_THROWS_AS(kDna.validate("ACGU"), AlphabetMismatch);
}

TEST_CASE("complement") {
  CHECK(complement(kDna, "ACG") == "CGT");
  CHECK(complement(kDna, "") == "");
  CHECK(complement(kDna, "GGTGT") == "ACACC");
  CHECK(oracle::complement("GGTGT") == "ACACC");
}

TEST_CASE("complement is an anti-morphic involution") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> letter(0, 3), len(0, 12);
  auto random_word = [&] {
    Word w(len(rng), 'A');
    for (char& c : w) c = "ACGT"[letter(rng)];
    return w;
  };
  for (int i = 0; i < 500; ++i) {
    const Word u = random_word();
    const Word v = random_word();
    CHECK(complement(kDna, complement(kDna, u)) == u);
    CHECK(complement(kDna, u + v) == complement(kDna, v) + complement(kDna, u));
    CHECK(complement(kDna, u) == oracle::complement(u));
    // u <=p uv iff ~(uv) >=s ~u
    CHECK(is_suffix(complement(kDna, u), complement(kDna, u + v)));
  }
}

TEST_CASE("prefix and suffix orders") {
  CHECK(is_prefix("AC", "ACAGTGT"));
  CHECK(is_prefix("ACAGTGT", "ACAGTGT"));
  CHECK_FALSE(is_proper_prefix("ACAGTGT", "ACAGTGT"));
  CHECK(is_proper_prefix("", "A"));
  CHECK(is_suffix("TGT", "ACAGTGT"));
  CHECK_FALSE(is_proper_suffix("ACAGTGT", "ACAGTGT"));
  CHECK(is_proper_suffix("GT", "ACAGTGT"));
  CHECK_FALSE(is_suffix("AG", "ACAGTGT"));
}

TEST_CASE("occurrences") {
  using V = std::vector<std::size_t>;
  CHECK(occurrences("A", "ACAGTGT") == V{0, 2});
  CHECK(occurrences("T", "ACAGTGT") == V{4, 6});
  CHECK(occurrences("GT", "TGTGT") == V{1, 3});
  CHECK(occurrences("AA", "AAAA") == V{0, 1, 2});
  CHECK(occurrences("", "AAAA").empty());
}

TEST_CASE("in_star examples") {
  const std::vector<Word> ac{"AC"};
  CHECK(in_star("ACAC", ac));
  CHECK_FALSE(in_star("ACACC", std::vector<Word>{"AC", "ACAG"}));
  CHECK(in_star("", ac));
  CHECK(in_star("", std::vector<Word>{}));
  CHECK_FALSE(in_star("A", std::vector<Word>{}));
  // Empty tokens are ignored.
  CHECK(in_star("ACAC", std::vector<Word>{"", "AC"}));
  CHECK_FALSE(in_star("AG", std::vector<Word>{""}));
}

TEST_CASE("star factorization takes the longest viable token") {
  const std::vector<Word> tokens{"A", "AB", "ABA", "BA"};
  auto f = star_factorization("ABAB", std::vector<Word>{"A", "AB", "ABA", "B"});
  REQUIRE(f.has_value());
  CHECK(*f == std::vector<Word>{"ABA", "B"});
  // Longest first token "ABA" leaves "C"; must fall back to "AB".
  f = star_factorization("ABAC", std::vector<Word>{"AB", "ABA", "AC"});
  REQUIRE(f.has_value());
  CHECK(*f == std::vector<Word>{"AB", "AC"});
  CHECK_FALSE(star_factorization("ABC", tokens).has_value());
  CHECK(star_factorization("", tokens)->empty());
}

TEST_CASE("in_star agrees with the recursive enumerator") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> letter(0, 1), tok_len(1, 4), count(1, 3);
  auto word_of = [&](int n) {
    Word w(n, 'a');
    for (char& c : w) c = "ab"[letter(rng)];
    return w;
  };
  const auto xs = oracle::all_words("ab", 0, 12);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Word> tokens;
    for (int i = count(rng); i > 0; --i) tokens.push_back(word_of(tok_len(rng)));
    for (const Word& x : xs) {
      const bool got = in_star(x, tokens);
      REQUIRE(got == oracle::in_star(x, tokens));
      if (got) {
        const auto f = star_factorization(x, tokens);
        REQUIRE(f.has_value());
        Word joined;
        for (const Word& part : *f) joined += part;
        CHECK(joined == x);
      }
    }
  }
}

TEST_CASE("alpha_index") {
  const Primer a = primer_a();
  CHECK(alpha_index("AC", a) == 1);
  CHECK(alpha_index("", a) == 0);
  CHECK(alpha_index("ACAG", a) == 2);
  CHECK(alpha_index("CG", a) == 0);
  // Overlapping occurrences straddling the boundary are counted.
  CHECK(alpha_index("A", Primer(kDna, "AA")) == 1);
}

TEST_CASE("alpha_index is additive on words x with A <=p xA") {
  const Primer a = primer_a();
  for (const Word& y : oracle::all_words("ACGT", 0, 4)) {
    for (const Word& x : oracle::all_words("ACGT", 0, 4)) {
      if (!is_prefix("A", x + "A")) continue;
      CHECK(alpha_index(y + x, a) == alpha_index(y, a) + alpha_index(x, a));
    }
  }
}

TEST_CASE("alpha_index counts alpha-prefixes of x.alpha") {
  for (const char* alpha : {"A", "AC", "CAC"}) {
    const Primer p(kDna, alpha);
    for (const Word& x : oracle::all_words("ACGT", 0, 5)) {
      CHECK(alpha_index(x, p) + 1 == alpha_prefixes(x + alpha, p).size());
    }
  }
}

TEST_CASE("primer validation") {
  CHECK_THROWS_AS(Primer(kDna, ""), DomainError);
  CHECK_THROWS_AS(Primer(kDna, "AU"), AlphabetMismatch);
  const Primer pal(kDna, "AT");
  CHECK(pal.self_complementary());
  CHECK_THROWS_AS(pal.require_not_self_complementary(),
                  PrimerSelfComplementary);
  const Primer ok(kDna, "AC");
  CHECK(ok.complement() == "GT");
  CHECK_NOTHROW(ok.require_not_self_complementary());
}
