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

#include "hairpin/lang_expr.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace hairpin {

struct LangExpr::Node {
  Kind kind;
  Word word;
  std::vector<Word> words;
  std::size_t count = 0;
  std::vector<LangExpr> children;
  std::size_t min_length = 0;
};

LangExpr LangExpr::atom(Word w) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Atom;
  node->min_length = w.size();
  node->word = std::move(w);
  return LangExpr(std::move(node));
}

LangExpr LangExpr::star_set(std::vector<Word> words) {
  std::erase_if(words, [](const Word& w) { return w.empty(); });
  if (words.empty()) {
    throw std::invalid_argument("star set needs a nonempty generator");
  }
  normalize(words);
  auto node = std::make_shared<Node>();
  node->kind = Kind::StarSet;
  node->words = std::move(words);
  return LangExpr(std::move(node));
}

LangExpr LangExpr::at_least(Word w, std::size_t count) {
  if (w.empty()) throw std::invalid_argument("repeated word must be nonempty");
  auto node = std::make_shared<Node>();
  node->kind = Kind::AtLeast;
  node->min_length = w.size() * count;
  node->word = std::move(w);
  node->count = count;
  return LangExpr(std::move(node));
}

LangExpr LangExpr::concat(std::vector<LangExpr> parts) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Concat;
  for (LangExpr& p : parts) {
    if (p.kind() == Kind::Concat) {
      for (const LangExpr& c : p.children()) node->children.push_back(c);
    } else {
      node->children.push_back(std::move(p));
    }
  }
  for (const LangExpr& c : node->children) node->min_length += c.min_length();
  return LangExpr(std::move(node));
}

LangExpr LangExpr::union_of(std::vector<LangExpr> alternatives) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Union;
  node->children = std::move(alternatives);
  if (node->children.empty()) {
    throw std::invalid_argument("union needs at least one alternative");
  }
  node->min_length = node->children.front().min_length();
  for (const LangExpr& c : node->children) {
    node->min_length = std::min(node->min_length, c.min_length());
  }
  return LangExpr(std::move(node));
}

LangExpr::Kind LangExpr::kind() const noexcept { return node_->kind; }
const Word& LangExpr::word() const { return node_->word; }
const std::vector<Word>& LangExpr::words() const { return node_->words; }
std::size_t LangExpr::count() const { return node_->count; }
const std::vector<LangExpr>& LangExpr::children() const {
  return node_->children;
}
std::size_t LangExpr::min_length() const { return node_->min_length; }

bool operator==(const LangExpr& a, const LangExpr& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.kind == y.kind && x.word == y.word && x.words == y.words &&
         x.count == y.count && x.children == y.children;
}

std::string LangExpr::render() const {
  switch (kind()) {
    case Kind::Atom:
      return word().empty() ? "ε" : "\"" + word() + "\"";
    case Kind::StarSet: {
      std::string out = "{";
      for (std::size_t i = 0; i < words().size(); ++i) {
        if (i) out += ',';
        out += words()[i];
      }
      return out + "}*";
    }
    case Kind::AtLeast:
      return word() + "^{>=" + std::to_string(count()) + "}";
    case Kind::Concat: {
      std::string out;
      for (std::size_t i = 0; i < children().size(); ++i) {
        if (i) out += "·";
        const LangExpr& c = children()[i];
        out += c.kind() == Kind::Union ? "(" + c.render() + ")" : c.render();
      }
      return out.empty() ? "ε" : out;
    }
    case Kind::Union: {
      std::string out;
      for (std::size_t i = 0; i < children().size(); ++i) {
        if (i) out += " ∪ ";
        const LangExpr& c = children()[i];
        out += c.kind() == Kind::Union ? "(" + c.render() + ")" : c.render();
      }
      return out;
    }
  }
  return {};
}

LangExpr complement_image(const LangExpr& e, const Alphabet& alphabet) {
  switch (e.kind()) {
    case LangExpr::Kind::Atom:
      return LangExpr::atom(complement(alphabet, e.word()));
    case LangExpr::Kind::StarSet: {
      std::vector<Word> words;
      for (const Word& w : e.words()) words.push_back(complement(alphabet, w));
      return LangExpr::star_set(std::move(words));
    }
    case LangExpr::Kind::AtLeast:
      return LangExpr::at_least(complement(alphabet, e.word()), e.count());
    case LangExpr::Kind::Concat: {
      std::vector<LangExpr> parts;
      for (auto it = e.children().rbegin(); it != e.children().rend(); ++it) {
        parts.push_back(complement_image(*it, alphabet));
      }
      return LangExpr::concat(std::move(parts));
    }
    case LangExpr::Kind::Union: {
      std::vector<LangExpr> parts;
      for (const LangExpr& c : e.children()) {
        parts.push_back(complement_image(c, alphabet));
      }
      return LangExpr::union_of(std::move(parts));
    }
  }
  return e;
}

namespace {

using Bag = std::unordered_set<Word>;

Bag star_closure(const std::vector<Word>& tokens, std::size_t bound) {
  Bag out{Word()};
  std::vector<Word> frontier{Word()};
  while (!frontier.empty()) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      for (const Word& t : tokens) {
        if (w.size() + t.size() > bound) continue;
        Word grown = w + t;
        if (out.insert(grown).second) next.push_back(std::move(grown));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

Bag expand(const LangExpr& e, std::size_t bound) {
  Bag out;
  if (e.min_length() > bound) return out;
  switch (e.kind()) {
    case LangExpr::Kind::Atom:
      out.insert(e.word());
      break;
    case LangExpr::Kind::StarSet:
      out = star_closure(e.words(), bound);
      break;
    case LangExpr::Kind::AtLeast: {
      Word w;
      for (std::size_t i = 0; i < e.count(); ++i) w += e.word();
      for (; w.size() <= bound; w += e.word()) out.insert(w);
      break;
    }
    case LangExpr::Kind::Concat: {
      const auto& parts = e.children();
      std::size_t rest = e.min_length();
      out.insert(Word());
      for (const LangExpr& part : parts) {
        rest -= part.min_length();
        Bag piece = expand(part, bound - rest);
        Bag next;
        for (const Word& a : out) {
          for (const Word& b : piece) {
            if (a.size() + b.size() + rest <= bound) next.insert(a + b);
          }
        }
        out = std::move(next);
        if (out.empty()) break;
      }
      break;
    }
    case LangExpr::Kind::Union:
      for (const LangExpr& c : e.children()) out.merge(expand(c, bound));
      break;
  }
  return out;
}

}  // namespace

WordSet enumerate_expr(const LangExpr& e, std::size_t max_len) {
  Bag bag = expand(e, max_len);
  WordSet out(bag.begin(), bag.end());
  normalize(out);
  return out;
}

}  // namespace hairpin
