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

#ifndef HAIRPIN_AUTOMATON_HPP
#define HAIRPIN_AUTOMATON_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hairpin/lang_expr.hpp"
#include "hairpin/word.hpp"

namespace hairpin {

/// Finite automaton over the letters of an alphabet. Nondeterministic
/// automata may carry epsilon edges; a deterministic one has none and at
/// most one transition per (state, letter).
class Automaton {
 public:
  using State = std::size_t;
  struct Transition {
    char letter;
    State target;
    friend bool operator==(const Transition&, const Transition&) = default;
  };

  explicit Automaton(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

  State add_state(bool accepting = false);
  void add_transition(State from, char letter, State to);
  void add_epsilon(State from, State to);
  void set_start(State s) { start_ = s; }
  void set_accepting(State s, bool accepting = true);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t state_count() const noexcept { return transitions_.size(); }
  State start() const noexcept { return start_; }
  bool accepting(State s) const { return accepting_.at(s); }
  const std::vector<Transition>& transitions(State s) const {
    return transitions_.at(s);
  }
  const std::vector<State>& epsilons(State s) const { return epsilons_.at(s); }
  bool deterministic() const noexcept { return deterministic_; }

 private:
  friend Automaton determinize(const Automaton& nfa);

  Alphabet alphabet_;
  State start_ = 0;
  std::vector<std::vector<Transition>> transitions_;
  std::vector<std::vector<State>> epsilons_;
  std::vector<bool> accepting_;
  bool deterministic_ = false;
};

/// Thompson-style construction; atoms become letter chains, so compiling a
/// single atom w yields exactly |w| + 1 states. Throws AlphabetMismatch if
/// e mentions a letter outside the alphabet.
Automaton compile(const LangExpr& e, const Alphabet& alphabet);

/// Subset construction over the reachable subsets; no minimization.
Automaton determinize(const Automaton& nfa);

/// Standard run semantics. Throws AlphabetMismatch if z uses a letter
/// outside the automaton's alphabet.
bool accepts(const Automaton& a, std::string_view z);

/// Graphviz rendering. States are numbered breadth-first from the start
/// state (edges visited in letter order); unreachable states follow in
/// their original order.
std::string to_dot(const Automaton& a, std::string_view name = "automaton");

}  // namespace hairpin

#endif  // HAIRPIN_AUTOMATON_HPP
