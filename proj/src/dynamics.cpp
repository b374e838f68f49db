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

#include "hairpin/dynamics.hpp"

#include <deque>
#include <unordered_set>

#include "hairpin/errors.hpp"

namespace hairpin {

std::vector<DerivationStep> completion_steps(std::string_view w,
                                             const Primer& primer,
                                             Side side) {
  std::vector<DerivationStep> steps;
  const std::size_t k = primer.size();
  if (side != Side::Left && w.ends_with(primer.complement())) {
    for (Word& u : alpha_prefixes(w, primer)) {
      if (u.size() + 2 * k > w.size()) break;
      Word after = Word(w) + complement(primer.alphabet(), u);
      steps.push_back({Side::Right, std::move(u), Word(w), std::move(after)});
    }
  }
  if (side != Side::Right && w.starts_with(primer.word())) {
    for (Word& v : alpha_suffix_complements(w, primer)) {
      if (v.size() + 2 * k > w.size()) break;
      Word after = v + Word(w);
      steps.push_back({Side::Left, std::move(v), Word(w), std::move(after)});
    }
  }
  return steps;
}

namespace {

WordSet results(std::string_view w, const Primer& primer, Side side) {
  WordSet out;
  for (DerivationStep& s : completion_steps(w, primer, side)) {
    out.push_back(std::move(s.after));
  }
  normalize(out);
  return out;
}

}  // namespace

WordSet right_completions(std::string_view w, const Primer& primer) {
  return results(w, primer, Side::Right);
}

WordSet left_completions(std::string_view w, const Primer& primer) {
  return results(w, primer, Side::Left);
}

WordSet one_step(std::string_view w, const Primer& primer) {
  return results(w, primer, Side::Both);
}

WordSet enumerate_bounded(std::string_view w, const Primer& primer,
                          std::size_t max_len) {
  if (max_len < w.size()) {
    throw PreconditionError("enumeration bound is shorter than the word");
  }
  std::unordered_set<Word> seen{Word(w)};
  std::deque<Word> queue{Word(w)};
  while (!queue.empty()) {
    const Word current = std::move(queue.front());
    queue.pop_front();
    for (DerivationStep& s : completion_steps(current, primer)) {
      if (s.after.size() > max_len) continue;
      if (seen.insert(s.after).second) queue.push_back(std::move(s.after));
    }
  }
  WordSet out(seen.begin(), seen.end());
  normalize(out);
  return out;
}

bool member(std::string_view z, const HairpinAnalysis& analysis) {
  const Primer& primer = analysis.primer();
  const Alphabet& alphabet = primer.alphabet();
  alphabet.validate(z);
  const Word& w = analysis.word();
  const auto found = occurrences(w, z);
  if (found.size() != 1) return false;

  const std::size_t k = primer.size();
  const std::size_t left_total = found.front();
  const std::size_t right_total = z.size() - left_total - w.size();
  std::vector<char> primer_at(z.size(), 0);
  std::vector<char> complement_at(z.size(), 0);
  for (std::size_t p : occurrences(primer.word(), z)) primer_at[p] = 1;
  for (std::size_t p : occurrences(primer.complement(), z)) {
    complement_at[p] = 1;
  }
  // z[from, from + len) complemented equals z[to, to + len).
  auto mirrored = [&](std::size_t from, std::size_t to, std::size_t len) {
    for (std::size_t t = 0; t < len; ++t) {
      if (alphabet.complement(z[from + len - 1 - t]) != z[to + t]) {
        return false;
      }
    }
    return true;
  };

  // State (i, j): the current word is z[left_total - i, left_total + |w| + j).
  const std::size_t cols = right_total + 1;
  std::vector<char> visited((left_total + 1) * cols, 0);
  std::vector<std::pair<std::size_t, std::size_t>> stack{{0, 0}};
  visited[0] = 1;
  auto push = [&](std::size_t i, std::size_t j) {
    char& mark = visited[i * cols + j];
    if (!mark) {
      mark = 1;
      stack.emplace_back(i, j);
    }
  };
  while (!stack.empty()) {
    const auto [i, j] = stack.back();
    stack.pop_back();
    if (i == left_total && j == right_total) return true;
    const std::size_t begin = left_total - i;
    const std::size_t end = left_total + w.size() + j;
    const std::size_t len = end - begin;
    if (j < right_total && complement_at[end - k]) {
      // Right step: append complement(u) for an alpha-prefix u of the word.
      for (std::size_t p = 1; p + 2 * k <= len && j + p <= right_total; ++p) {
        if (primer_at[begin + p] && mirrored(begin, end, p)) push(i, j + p);
      }
    }
    if (i < left_total && primer_at[begin]) {
      // Left step: prepend v where complement(primer).complement(v) ends
      // the word.
      for (std::size_t vlen = 1; vlen + 2 * k <= len && i + vlen <= left_total;
           ++vlen) {
        if (complement_at[end - vlen - k] &&
            mirrored(end - vlen, begin - vlen, vlen)) {
          push(i + vlen, j);
        }
      }
    }
  }
  return false;
}

bool member(std::string_view z, std::string_view w, const Primer& primer) {
  return member(z, analyze(w, primer));
}

WordSet hk_one_step(std::string_view w, std::size_t k,
                    const Alphabet& alphabet) {
  if (k == 0) throw PreconditionError("primer length must be positive");
  const std::string& letters = alphabet.letters();
  WordSet out;
  std::vector<std::size_t> digits(k, 0);
  while (true) {
    Word alpha(k, '\0');
    for (std::size_t i = 0; i < k; ++i) alpha[i] = letters[digits[i]];
    WordSet step = one_step(w, Primer(alphabet, alpha));
    out.insert(out.end(), step.begin(), step.end());
    std::size_t pos = k;
    while (pos > 0 && ++digits[pos - 1] == letters.size()) {
      digits[--pos] = 0;
    }
    if (pos == 0) break;
  }
  normalize(out);
  return out;
}

}  // namespace hairpin
