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

// Hairpin completion steps, bounded iteration and membership in the
// iterated completion of a non-crossing word.

#ifndef HAIRPIN_DYNAMICS_HPP
#define HAIRPIN_DYNAMICS_HPP

#include <cstddef>
#include <string_view>
#include <vector>

#include "hairpin/analysis.hpp"
#include "hairpin/word.hpp"

namespace hairpin {

enum class Side { Left, Right, Both };

/// One completion step. For Right, before = stem.primer.beta.complement(primer)
/// and after = before.complement(stem); for Left, before =
/// primer.beta.complement(primer).complement(stem) and after = stem.before.
struct DerivationStep {
  Side side;
  Word stem;
  Word before;
  Word after;

  friend bool operator==(const DerivationStep&, const DerivationStep&) = default;
};

/// Every single completion step available on w. The two primer occurrences
/// must not overlap: |stem| + 2k <= |w|. The identity step (empty stem) is
/// included whenever a factorization exists.
std::vector<DerivationStep> completion_steps(std::string_view w,
                                             const Primer& primer,
                                             Side side = Side::Both);

WordSet right_completions(std::string_view w, const Primer& primer);
WordSet left_completions(std::string_view w, const Primer& primer);
/// Right and left completions together.
WordSet one_step(std::string_view w, const Primer& primer);

/// All words of the iterated completion of w with length at most max_len,
/// by breadth-first closure of one_step. Requires max_len >= |w|
/// (PreconditionError otherwise).
WordSet enumerate_bounded(std::string_view w, const Primer& primer,
                          std::size_t max_len);

/// Whether z is in the iterated completion of the analyzed word. Runs a
/// reachability search over the extents (prepended, appended) around the
/// unique occurrence of the word in z; polynomial in |z|.
bool member(std::string_view z, const HairpinAnalysis& analysis);

/// Same, analyzing w first (analysis errors propagate).
bool member(std::string_view z, std::string_view w, const Primer& primer);

/// Union of one_step over every primer of length k over the alphabet.
WordSet hk_one_step(std::string_view w, std::size_t k,
                    const Alphabet& alphabet);

}  // namespace hairpin

#endif  // HAIRPIN_DYNAMICS_HPP
