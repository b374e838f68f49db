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

#include "hairpin/word.hpp"

#include <algorithm>
#include <cctype>

#include "hairpin/errors.hpp"

namespace hairpin {

void normalize(WordSet& words) {
  std::sort(words.begin(), words.end(), ShortLex{});
  words.erase(std::unique(words.begin(), words.end()), words.end());
}

Alphabet Alphabet::dna() {
  Alphabet a;
  a.add_pair('A', 'T');
  a.add_pair('C', 'G');
  return a;
}

void Alphabet::add_pair(char a, char b) {
  auto check = [](char c) {
    if (!std::isgraph(static_cast<unsigned char>(c)) || c == ',' ||
        c == ':') {
      throw InvalidAlphabet(std::string("invalid letter '") + c + "'");
    }
  };
  check(a);
  check(b);
  for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
    char& slot = table_[static_cast<unsigned char>(x)];
    if (slot != '\0' && slot != y) {
      throw InvalidAlphabet(std::string("letter '") + x +
                            "' is paired twice");
    }
    if (slot == '\0') {
      slot = y;
      letters_.insert(std::lower_bound(letters_.begin(), letters_.end(), x),
                      x);
    }
  }
}

Alphabet Alphabet::parse(std::string_view spec) {
  if (spec == "dna" || spec == "DNA") return dna();
  if (spec.empty()) throw InvalidAlphabet("empty alphabet specification");
  Alphabet a;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    std::size_t end = spec.find(',', pos);
    if (end == std::string_view::npos) end = spec.size();
    std::string_view pair = spec.substr(pos, end - pos);
    if (pair.size() != 3 || pair[1] != ':') {
      throw InvalidAlphabet("malformed pair '" + std::string(pair) +
                            "', expected X:Y");
    }
    a.add_pair(pair[0], pair[2]);
    pos = end + 1;
  }
  return a;
}

bool Alphabet::is_word(std::string_view w) const noexcept {
  return std::all_of(w.begin(), w.end(),
                     [this](char c) { return contains(c); });
}

void Alphabet::validate(std::string_view w) const {
  for (char c : w) {
    if (!contains(c)) {
      throw AlphabetMismatch(std::string("letter '") + c +
                             "' is not in the alphabet " + spec());
    }
  }
}

std::string Alphabet::spec() const {
  std::string out;
  for (char c : letters_) {
    char d = complement(c);
    if (d < c) continue;
    if (!out.empty()) out += ',';
    out += c;
    out += ':';
    out += d;
  }
  return out;
}

Word complement(const Alphabet& alphabet, std::string_view w) {
  Word out(w.size(), '\0');
  std::transform(w.rbegin(), w.rend(), out.begin(),
                 [&](char c) { return alphabet.complement(c); });
  return out;
}

bool is_prefix(std::string_view u, std::string_view w) noexcept {
  return w.starts_with(u);
}
bool is_suffix(std::string_view u, std::string_view w) noexcept {
  return w.ends_with(u);
}
bool is_proper_prefix(std::string_view u, std::string_view w) noexcept {
  return u.size() < w.size() && w.starts_with(u);
}
bool is_proper_suffix(std::string_view u, std::string_view w) noexcept {
  return u.size() < w.size() && w.ends_with(u);
}

std::vector<std::size_t> occurrences(std::string_view pattern,
                                     std::string_view w) {
  std::vector<std::size_t> out;
  if (pattern.empty()) return out;
  for (std::size_t p = w.find(pattern); p != std::string_view::npos;
       p = w.find(pattern, p + 1)) {
    out.push_back(p);
  }
  return out;
}

namespace {

// reach[i] is true iff x[i..] is a concatenation of tokens.
std::vector<bool> suffix_reach(std::string_view x,
                               std::span<const Word> tokens) {
  std::vector<bool> reach(x.size() + 1, false);
  reach[x.size()] = true;
  for (std::size_t i = x.size(); i-- > 0;) {
    std::string_view rest = x.substr(i);
    for (const Word& t : tokens) {
      if (!t.empty() && rest.starts_with(t) && reach[i + t.size()]) {
        reach[i] = true;
        break;
      }
    }
  }
  return reach;
}

}  // namespace

bool in_star(std::string_view x, std::span<const Word> tokens) {
  return suffix_reach(x, tokens)[0];
}

std::optional<std::vector<Word>> star_factorization(
    std::string_view x, std::span<const Word> tokens) {
  const auto reach = suffix_reach(x, tokens);
  if (!reach[0]) return std::nullopt;
  std::vector<Word> parts;
  std::size_t i = 0;
  while (i < x.size()) {
    const Word* best = nullptr;
    for (const Word& t : tokens) {
      if (!t.empty() && x.substr(i).starts_with(t) && reach[i + t.size()] &&
          (best == nullptr || t.size() > best->size())) {
        best = &t;
      }
    }
    parts.push_back(*best);
    i += best->size();
  }
  return parts;
}

Primer::Primer(Alphabet alphabet, Word word)
    : alphabet_(std::move(alphabet)), word_(std::move(word)) {
  if (word_.empty()) throw DomainError("primer must be nonempty");
  alphabet_.validate(word_);
  complement_ = hairpin::complement(alphabet_, word_);
}

void Primer::require_not_self_complementary() const {
  if (self_complementary()) {
    throw PrimerSelfComplementary("primer " + word_ +
                                  " equals its own complement");
  }
}

std::size_t alpha_index(std::string_view x, const Primer& primer) {
  Word xa(x);
  xa += primer.word();
  std::size_t count = 0;
  for (std::size_t p : occurrences(primer.word(), xa)) {
    if (p < x.size()) ++count;
  }
  return count;
}

}  // namespace hairpin
