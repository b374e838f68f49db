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

// Symbolic language expressions over whole-word atoms.
//
//   Atom(w)         the singleton {w}
//   StarSet(X)      X*, X finite, nonempty, without the empty word
//   AtLeast(w, c)   w^{>=c}
//   Concat(e...)    concatenation
//   Union(e...)     union
//
// Expressions are immutable and share subtrees.

#ifndef HAIRPIN_LANG_EXPR_HPP
#define HAIRPIN_LANG_EXPR_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "hairpin/word.hpp"

namespace hairpin {

class LangExpr {
 public:
  enum class Kind { Atom, StarSet, AtLeast, Concat, Union };

  static LangExpr atom(Word w);
  /// Empty words are dropped; throws std::invalid_argument if nothing is
  /// left. Elements are kept in shortlex order.
  static LangExpr star_set(std::vector<Word> words);
  /// Throws std::invalid_argument for an empty word.
  static LangExpr at_least(Word w, std::size_t count);
  /// Nested concatenations are flattened.
  static LangExpr concat(std::vector<LangExpr> parts);
  /// Nested unions are kept as given; throws std::invalid_argument when empty.
  static LangExpr union_of(std::vector<LangExpr> alternatives);

  Kind kind() const noexcept;
  /// The atom word, or the repeated word of AtLeast.
  const Word& word() const;
  /// The generator set of StarSet.
  const std::vector<Word>& words() const;
  std::size_t count() const;
  const std::vector<LangExpr>& children() const;

  /// Report rendering: atoms quoted, {w1,w2}*, w^{>=c}, concatenation with
  /// a middle dot and union with " ∪ ".
  std::string render() const;

  /// Length of the shortest word denoted.
  std::size_t min_length() const;

  friend bool operator==(const LangExpr& a, const LangExpr& b);

 private:
  struct Node;
  explicit LangExpr(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// The expression denoting { complement(z) : z in L(e) }: concatenations are
/// reversed and every word is complemented.
LangExpr complement_image(const LangExpr& e, const Alphabet& alphabet);

/// { z in L(e) : |z| <= max_len } in shortlex order, built bottom-up by
/// bounded products.
WordSet enumerate_expr(const LangExpr& e, std::size_t max_len);

}  // namespace hairpin

#endif  // HAIRPIN_LANG_EXPR_HPP
