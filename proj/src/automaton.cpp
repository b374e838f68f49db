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

#include "hairpin/automaton.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <sstream>

#include "hairpin/errors.hpp"

namespace hairpin {

Automaton::State Automaton::add_state(bool accepting) {
  transitions_.emplace_back();
  epsilons_.emplace_back();
  accepting_.push_back(accepting);
  return transitions_.size() - 1;
}

void Automaton::add_transition(State from, char letter, State to) {
  alphabet_.validate(std::string_view(&letter, 1));
  transitions_.at(from).push_back({letter, to});
}

void Automaton::add_epsilon(State from, State to) {
  epsilons_.at(from).push_back(to);
}

void Automaton::set_accepting(State s, bool accepting) {
  accepting_.at(s) = accepting;
}

namespace {

struct Fragment {
  Automaton::State start;
  Automaton::State accept;
};

// Letter chain for w starting at `from`; returns the last state. When
// `close_at` is given the final letter leads there instead of a new state.
Automaton::State chain(Automaton& a, Automaton::State from, const Word& w,
                       std::optional<Automaton::State> close_at = {}) {
  Automaton::State cur = from;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const bool last = i + 1 == w.size();
    Automaton::State next = last && close_at ? *close_at : a.add_state();
    a.add_transition(cur, w[i], next);
    cur = next;
  }
  return cur;
}

Fragment build(Automaton& a, const LangExpr& e) {
  switch (e.kind()) {
    case LangExpr::Kind::Atom: {
      Automaton::State s = a.add_state();
      return {s, chain(a, s, e.word())};
    }
    case LangExpr::Kind::StarSet: {
      Automaton::State s = a.add_state();
      for (const Word& w : e.words()) chain(a, s, w, s);
      return {s, s};
    }
    case LangExpr::Kind::AtLeast: {
      Automaton::State s = a.add_state();
      Automaton::State cur = s;
      for (std::size_t i = 0; i < e.count(); ++i) cur = chain(a, cur, e.word());
      chain(a, cur, e.word(), cur);
      return {s, cur};
    }
    case LangExpr::Kind::Concat: {
      if (e.children().empty()) {
        Automaton::State s = a.add_state();
        return {s, s};
      }
      Fragment whole = build(a, e.children().front());
      for (std::size_t i = 1; i < e.children().size(); ++i) {
        Fragment next = build(a, e.children()[i]);
        a.add_epsilon(whole.accept, next.start);
        whole.accept = next.accept;
      }
      return whole;
    }
    case LangExpr::Kind::Union: {
      Automaton::State s = a.add_state();
      Automaton::State f = a.add_state();
      for (const LangExpr& c : e.children()) {
        Fragment alt = build(a, c);
        a.add_epsilon(s, alt.start);
        a.add_epsilon(alt.accept, f);
      }
      return {s, f};
    }
  }
  throw InternalInvariantViolation("unknown expression kind");
}

using StateSet = std::vector<Automaton::State>;

StateSet closure(const Automaton& a, StateSet states) {
  std::vector<char> seen(a.state_count(), 0);
  for (auto s : states) seen[s] = 1;
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (auto t : a.epsilons(states[i])) {
      if (!seen[t]) {
        seen[t] = 1;
        states.push_back(t);
      }
    }
  }
  std::sort(states.begin(), states.end());
  return states;
}

StateSet move(const Automaton& a, const StateSet& states, char letter) {
  StateSet out;
  for (auto s : states) {
    for (const auto& t : a.transitions(s)) {
      if (t.letter == letter) out.push_back(t.target);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

Automaton compile(const LangExpr& e, const Alphabet& alphabet) {
  Automaton a(alphabet);
  Fragment f = build(a, e);
  a.set_start(f.start);
  a.set_accepting(f.accept);
  return a;
}

Automaton determinize(const Automaton& nfa) {
  Automaton dfa(nfa.alphabet());
  std::map<StateSet, Automaton::State> ids;
  std::deque<StateSet> queue;
  auto intern = [&](StateSet set) {
    auto [it, fresh] = ids.try_emplace(set, 0);
    if (fresh) {
      const bool acc = std::any_of(set.begin(), set.end(), [&](auto s) {
        return nfa.accepting(s);
      });
      it->second = dfa.add_state(acc);
      queue.push_back(std::move(set));
    }
    return it->second;
  };
  dfa.set_start(intern(closure(nfa, {nfa.start()})));
  while (!queue.empty()) {
    StateSet current = std::move(queue.front());
    queue.pop_front();
    const Automaton::State from = ids.at(current);
    for (char letter : nfa.alphabet().letters()) {
      StateSet target = move(nfa, current, letter);
      if (target.empty()) continue;
      dfa.add_transition(from, letter, intern(closure(nfa, std::move(target))));
    }
  }
  dfa.deterministic_ = true;
  return dfa;
}

bool accepts(const Automaton& a, std::string_view z) {
  a.alphabet().validate(z);
  StateSet current = closure(a, {a.start()});
  for (char letter : z) {
    current = closure(a, move(a, current, letter));
    if (current.empty()) return false;
  }
  return std::any_of(current.begin(), current.end(),
                     [&](auto s) { return a.accepting(s); });
}

std::string to_dot(const Automaton& a, std::string_view name) {
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> number(a.state_count(), kUnset);
  std::vector<Automaton::State> order;
  auto visit = [&](Automaton::State s) {
    if (number[s] == kUnset) {
      number[s] = order.size();
      order.push_back(s);
    }
  };
  auto sorted_edges = [&](Automaton::State s) {
    std::vector<Automaton::Transition> edges = a.transitions(s);
    std::stable_sort(edges.begin(), edges.end(),
                     [](const auto& x, const auto& y) {
                       return x.letter < y.letter;
                     });
    return edges;
  };
  if (a.state_count() > 0) visit(a.start());
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (auto t : a.epsilons(order[i])) visit(t);
    for (const auto& t : sorted_edges(order[i])) visit(t.target);
  }
  for (Automaton::State s = 0; s < a.state_count(); ++s) visit(s);

  std::ostringstream out;
  out << "digraph " << name << " {\n"
      << "  rankdir=LR;\n"
      << "  node [shape=circle];\n"
      << "  start [shape=point];\n";
  if (a.state_count() > 0) out << "  start -> 0;\n";
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (a.accepting(order[i])) out << "  " << i << " [shape=doublecircle];\n";
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (auto t : a.epsilons(order[i])) {
      out << "  " << i << " -> " << number[t] << " [label=\"ε\"];\n";
    }
    for (const auto& t : sorted_edges(order[i])) {
      out << "  " << i << " -> " << number[t.target] << " [label=\"";
      if (t.letter == '"' || t.letter == '\\') out << '\\';
      out << t.letter << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace hairpin
