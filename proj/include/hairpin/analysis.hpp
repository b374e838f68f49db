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

#ifndef HAIRPIN_ANALYSIS_HPP
#define HAIRPIN_ANALYSIS_HPP

#include <cstddef>
#include <string_view>
#include <vector>

#include "hairpin/word.hpp"

namespace hairpin {

/// Start-position rule: no primer occurrence, no complement occurrence, or
/// the last primer occurrence starts no later than the first complement
/// occurrence. Throws PrimerSelfComplementary.
bool is_non_crossing(std::string_view w, const Primer& primer);

/// Second characterization: w has exactly one factor occurrence that is
/// minimal with respect to primer.Sigma* & Sigma*.complement(primer).
/// Throws DomainError when w itself is not in that language.
bool is_non_crossing_by_minimal_factor(std::string_view w,
                                       const Primer& primer);

/// All u with u.primer a prefix of w, shortest first.
std::vector<Word> alpha_prefixes(std::string_view w, const Primer& primer);

/// Complements v of all complement-suffixes, i.e. the v with
/// complement(primer).complement(v) a suffix of w, ordered by length.
std::vector<Word> alpha_suffix_complements(std::string_view w,
                                           const Primer& primer);

/// A validated non-crossing word in primer.Sigma* & Sigma*.complement(primer)
/// together with its alpha-prefixes u_0..u_{m-1}, suffix complements
/// v_0..v_{n-1} and the index sets I, J of generators not produced by
/// shorter ones. Only analyze() builds one.
class HairpinAnalysis {
 public:
  const Word& word() const noexcept { return word_; }
  const Primer& primer() const noexcept { return primer_; }
  const std::vector<Word>& prefixes() const noexcept { return prefixes_; }
  const std::vector<Word>& suffix_complements() const noexcept {
    return suffixes_;
  }
  std::size_t m() const noexcept { return prefixes_.size(); }
  std::size_t n() const noexcept { return suffixes_.size(); }
  const std::vector<std::size_t>& index_set_i() const noexcept { return i_; }
  const std::vector<std::size_t>& index_set_j() const noexcept { return j_; }

  const Word& u(std::size_t i) const { return prefixes_.at(i); }
  const Word& v(std::size_t j) const { return suffixes_.at(j); }

  /// u_1..u_{last} (the empty u_0 dropped), ready for in_star.
  std::vector<Word> prefix_generators(std::size_t last) const;
  std::vector<Word> prefix_generators() const {
    return prefix_generators(m() - 1);
  }
  /// v_1..v_{last}.
  std::vector<Word> suffix_generators(std::size_t last) const;
  std::vector<Word> suffix_generators() const {
    return suffix_generators(n() - 1);
  }

 private:
  friend HairpinAnalysis analyze(std::string_view w, const Primer& primer);
  HairpinAnalysis(Word word, Primer primer)
      : word_(std::move(word)), primer_(std::move(primer)) {}

  Word word_;
  Primer primer_;
  std::vector<Word> prefixes_;
  std::vector<Word> suffixes_;
  std::vector<std::size_t> i_;
  std::vector<std::size_t> j_;
};

/// Throws PrimerSelfComplementary, AlphabetMismatch, DomainError (w not in
/// primer.Sigma* & Sigma*.complement(primer)) or CrossingError.
HairpinAnalysis analyze(std::string_view w, const Primer& primer);

}  // namespace hairpin

#endif  // HAIRPIN_ANALYSIS_HPP
