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

// JSON and plain-text reports shared by the command-line tool and the
// Python bindings.

#ifndef HAIRPIN_REPORT_HPP
#define HAIRPIN_REPORT_HPP

#include <string>

#include <json.hpp>

#include "hairpin/analysis.hpp"
#include "hairpin/decision.hpp"

namespace hairpin {

inline constexpr const char* kToolVersion = "0.1.0";

using Json = nlohmann::ordered_json;

Json witness_json(const Witness& witness);
Json verdict_json(const Verdict& verdict);

/// The full analysis report. Keys appear in a fixed order; absent parts of
/// the verdict are null.
Json analysis_report(const HairpinAnalysis& analysis, const Verdict& verdict);

/// Canonical serialization (two-space indent, UTF-8 kept verbatim).
std::string dump(const Json& report);

/// Human-readable rendering of an analysis report.
std::string render_text(const Json& report);

}  // namespace hairpin

#endif  // HAIRPIN_REPORT_HPP
