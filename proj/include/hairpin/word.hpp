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

// Words over an alphabet with an involution, and the small toolkit every
// other module builds on: anti-morphic complement, prefix/suffix orders,
// factor scanning, Kleene-star membership over finite word sets and the
// alpha-index.

#ifndef HAIRPIN_WORD_HPP
#define HAIRPIN_WORD_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hairpin {

/// A word is a finite letter sequence; letters are single printable chars.
using Word = std::string;

/// A finite set of words kept sorted in shortlex order (length, then
/// lexicographic) without duplicates.
using WordSet = std::vector<Word>;

/// Shortlex comparison: shorter words first, ties broken lexicographically.
struct ShortLex {
  bool operator()(std::string_view a, std::string_view b) const noexcept {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  }
};

/// Sorts into shortlex order and removes duplicates.
void normalize(WordSet& words);

/// Finite letter set with a total involution (the complement map).
class Alphabet {
 public:
  /// The DNA preset: A<->T, C<->G.
  static Alphabet dna();

  /// Parses "dna" or a comma separated pair list "X:Y,...". A pair "X:X"
  /// declares a self-complementary letter. Throws InvalidAlphabet.
  static Alphabet parse(std::string_view spec);

  bool contains(char letter) const noexcept {
    return table_[static_cast<unsigned char>(letter)] != '\0';
  }
  /// Complement of a letter; the letter must belong to the alphabet.
  char complement(char letter) const noexcept {
    return table_[static_cast<unsigned char>(letter)];
  }

  /// Letters in ascending char order.
  const std::string& letters() const noexcept { return letters_; }

  /// Throws AlphabetMismatch if some letter of w is not in the alphabet.
  void validate(std::string_view w) const;
  bool is_word(std::string_view w) const noexcept;

  /// Canonical pair list, each pair listed once with the smaller letter
  /// first, e.g. "A:T,C:G".
  std::string spec() const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  Alphabet() = default;
  void add_pair(char a, char b);

  std::array<char, 256> table_{};
  std::string letters_;
};

/// The anti-morphic extension of the letter involution: reverse w and
/// complement every letter.
Word complement(const Alphabet& alphabet, std::string_view w);

bool is_prefix(std::string_view u, std::string_view w) noexcept;
bool is_suffix(std::string_view u, std::string_view w) noexcept;
bool is_proper_prefix(std::string_view u, std::string_view w) noexcept;
bool is_proper_suffix(std::string_view u, std::string_view w) noexcept;

/// Start positions (0-based, ascending) of every occurrence of a nonempty
/// pattern in w, overlapping occurrences included.
std::vector<std::size_t> occurrences(std::string_view pattern,
                                     std::string_view w);

/// Whether x is a concatenation of words from tokens. Empty tokens are
/// ignored; the empty word is always a member.
bool in_star(std::string_view x, std::span<const Word> tokens);

/// A witness factorization of x over tokens, or nullopt if x is not in the
/// star. At every position the longest token that still allows the rest to
/// be factorized is taken.
std::optional<std::vector<Word>> star_factorization(
    std::string_view x, std::span<const Word> tokens);

/// A primer: a nonempty word over an alphabet, bundled with the alphabet so
/// that its complement is always available.
class Primer {
 public:
  /// Throws DomainError for the empty word, AlphabetMismatch if the word is
  /// not over the alphabet.
  Primer(Alphabet alphabet, Word word);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const Word& word() const noexcept { return word_; }
  const Word& complement() const noexcept { return complement_; }
  std::size_t size() const noexcept { return word_.size(); }

  bool self_complementary() const noexcept { return word_ == complement_; }
  /// Throws PrimerSelfComplementary when the primer equals its complement.
  void require_not_self_complementary() const;

 private:
  Alphabet alphabet_;
  Word word_;
  Word complement_;
};

/// Number of occurrences of the primer in x.primer, the final one excluded.
std::size_t alpha_index(std::string_view x, const Primer& primer);

}  // namespace hairpin

#endif  // HAIRPIN_WORD_HPP
