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

#include "hairpin/analysis.hpp"

#include <algorithm>

#include "hairpin/errors.hpp"

namespace hairpin {

namespace {

bool in_primer_language(std::string_view w, const Primer& primer) {
  return w.starts_with(primer.word()) && w.ends_with(primer.complement());
}

std::vector<Word> collect_generators(const std::vector<Word>& words,
                                     std::size_t last) {
  std::vector<Word> out;
  for (std::size_t i = 1; i <= last && i < words.size(); ++i) {
    out.push_back(words[i]);
  }
  return out;
}

std::vector<std::size_t> new_generators(const std::vector<Word>& words) {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i < words.size(); ++i) {
    if (!in_star(words[i], collect_generators(words, i - 1))) {
      out.push_back(i);
    }
  }
  return out;
}

}  // namespace

bool is_non_crossing(std::string_view w, const Primer& primer) {
  primer.require_not_self_complementary();
  const auto starts = occurrences(primer.word(), w);
  const auto ends = occurrences(primer.complement(), w);
  if (starts.empty() || ends.empty()) return true;
  return starts.back() <= ends.front();
}

bool is_non_crossing_by_minimal_factor(std::string_view w,
                                       const Primer& primer) {
  if (!in_primer_language(w, primer)) {
    throw DomainError("word " + std::string(w) +
                      " does not start with the primer and end with its "
                      "complement");
  }
  const std::size_t len = w.size();
  const std::size_t k = primer.size();
  auto member = [&](std::size_t i, std::size_t j) {
    return j - i >= k &&
           w.substr(i, k) == primer.word() &&
           w.substr(j - k, k) == primer.complement();
  };
  // contains[i][j]: some factor of w[i, j) is in the language.
  std::vector<std::vector<char>> contains(len + 1,
                                          std::vector<char>(len + 1, 0));
  std::size_t minimal = 0;
  for (std::size_t width = 1; width <= len; ++width) {
    for (std::size_t i = 0; i + width <= len; ++i) {
      const std::size_t j = i + width;
      const bool inner = width > 1 && (contains[i + 1][j] || contains[i][j - 1]);
      const bool self = member(i, j);
      contains[i][j] = inner || self;
      if (self && !inner) ++minimal;
    }
  }
  return minimal == 1;
}

std::vector<Word> alpha_prefixes(std::string_view w, const Primer& primer) {
  std::vector<Word> out;
  for (std::size_t p : occurrences(primer.word(), w)) {
    out.emplace_back(w.substr(0, p));
  }
  return out;
}

std::vector<Word> alpha_suffix_complements(std::string_view w,
                                           const Primer& primer) {
  return alpha_prefixes(complement(primer.alphabet(), w), primer);
}

std::vector<Word> HairpinAnalysis::prefix_generators(std::size_t last) const {
  return collect_generators(prefixes_, last);
}

std::vector<Word> HairpinAnalysis::suffix_generators(std::size_t last) const {
  return collect_generators(suffixes_, last);
}

HairpinAnalysis analyze(std::string_view w, const Primer& primer) {
  primer.require_not_self_complementary();
  primer.alphabet().validate(w);
  if (!in_primer_language(w, primer)) {
    throw DomainError("word " + std::string(w) + " must start with " +
                      primer.word() + " and end with " +
                      primer.complement());
  }
  if (!is_non_crossing(w, primer)) {
    throw CrossingError("word " + std::string(w) + " is " + primer.word() +
                        "-crossing: an occurrence of " + primer.word() +
                        " follows an occurrence of " + primer.complement());
  }
  HairpinAnalysis a{Word(w), primer};
  a.prefixes_ = alpha_prefixes(w, primer);
  a.suffixes_ = alpha_suffix_complements(w, primer);
  a.i_ = new_generators(a.prefixes_);
  a.j_ = new_generators(a.suffixes_);
  return a;
}

}  // namespace hairpin
