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

// hairpin: command-line front end.
//
// Exit codes: 0 success / Regular / member, 3 NonRegular / not a member,
// 2 input or domain error, 64 usage error, 70 internal invariant violation.

#include <unistd.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hairpin/analysis.hpp"
#include "hairpin/automaton.hpp"
#include "hairpin/decision.hpp"
#include "hairpin/dynamics.hpp"
#include "hairpin/errors.hpp"
#include "hairpin/report.hpp"

namespace {

constexpr int kExitNegative = 3;
constexpr int kExitInput = 2;
constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;

struct Common {
  std::string alphabet = "dna";
  std::string primer;
  std::string word;
  bool json = false;
  bool text = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--alphabet", alphabet,
                    "\"dna\" or complement pairs such as A:T,C:G")
        ->capture_default_str();
    cmd->add_option("--primer", primer, "primer word")->required();
    cmd->add_option("--word", word, "input word")->required();
    auto* j = cmd->add_flag("--json", json, "force JSON output");
    cmd->add_flag("--text", text, "force human-readable output")->excludes(j);
  }

  hairpin::Primer make_primer() const {
    return hairpin::Primer(hairpin::Alphabet::parse(alphabet), primer);
  }

  // JSON unless stdout is a terminal, overridable either way.
  bool want_json() const {
    if (json) return true;
    if (text) return false;
    return isatty(STDOUT_FILENO) == 0;
  }
};

void print_words(const hairpin::WordSet& words, bool json) {
  if (json) {
    std::cout << hairpin::dump(hairpin::Json(words));
    return;
  }
  for (const auto& w : words) std::cout << w << "\n";
}

int run_analyze(const Common& c) {
  const auto primer = c.make_primer();
  const auto analysis = hairpin::analyze(c.word, primer);
  const auto verdict = hairpin::decide(analysis);
  const auto report = hairpin::analysis_report(analysis, verdict);
  std::cout << (c.want_json() ? hairpin::dump(report)
                              : hairpin::render_text(report));
  return verdict.regular() ? 0 : kExitNegative;
}

int run_complete(const Common& c, const std::string& side) {
  const auto primer = c.make_primer();
  primer.alphabet().validate(c.word);
  hairpin::WordSet out;
  if (side == "left") {
    out = hairpin::left_completions(c.word, primer);
  } else if (side == "right") {
    out = hairpin::right_completions(c.word, primer);
  } else {
    out = hairpin::one_step(c.word, primer);
  }
  print_words(out, c.want_json());
  return 0;
}

int run_enumerate(const Common& c, std::size_t max_len) {
  const auto primer = c.make_primer();
  primer.alphabet().validate(c.word);
  print_words(hairpin::enumerate_bounded(c.word, primer, max_len), c.want_json());
  return 0;
}

int run_member(const Common& c, const std::string& target) {
  const auto primer = c.make_primer();
  const bool yes = hairpin::member(target, c.word, primer);
  std::cout << (yes ? "true" : "false") << "\n";
  return yes ? 0 : kExitNegative;
}

int run_witness(const Common& c) {
  const auto primer = c.make_primer();
  const auto verdict = hairpin::decide(c.word, primer);
  if (verdict.regular()) {
    std::cerr << "hairpin: the completion closure of " << c.word
              << " is regular; there is no non-regularity witness\n";
    return kExitInput;
  }
  const auto report = hairpin::witness_json(*verdict.witness);
  if (c.want_json()) {
    std::cout << hairpin::dump(report);
  } else {
    for (const auto& [key, value] : report.items()) {
      std::cout << key << ": "
                << (value.is_string() ? value.get<std::string>() : value.dump())
                << "\n";
    }
  }
  return 0;
}

int run_render(const Common& c, const std::string& dot_path, bool nfa) {
  const auto primer = c.make_primer();
  const auto verdict = hairpin::decide(c.word, primer);
  std::optional<hairpin::LangExpr> expr = verdict.construction;
  if (!verdict.regular()) expr = verdict.witness->nonreg_expr;
  if (!expr) {
    std::cerr << "hairpin: (m, n) = (" << verdict.m << ", " << verdict.n
              << "): the regular construction is external and not rendered\n";
    return kExitInput;
  }
  auto automaton = hairpin::compile(*expr, primer.alphabet());
  if (!nfa) automaton = hairpin::determinize(automaton);
  const std::string dot = hairpin::to_dot(automaton);
  if (dot_path == "-") {
    std::cout << dot;
  } else {
    std::ofstream file(dot_path);
    if (!(file << dot)) {
      std::cerr << "hairpin: cannot write " << dot_path << "\n";
      return kExitInput;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regularity of iterated hairpin completions of non-crossing "
               "words"};
  app.set_version_flag("--version", hairpin::kToolVersion);
  app.require_subcommand(1);

  Common analyze_opts;
  auto* analyze = app.add_subcommand("analyze", "analyze a word and decide regularity");
  analyze_opts.attach(analyze);

  Common complete_opts;
  std::string side = "both";
  auto* complete = app.add_subcommand("complete", "one hairpin completion step");
  complete_opts.attach(complete);
  complete->add_option("--side", side, "left, right or both")
      ->check(CLI::IsMember({"left", "right", "both"}))
      ->capture_default_str();

  Common enumerate_opts;
  std::size_t max_len = 0;
  auto* enumerate = app.add_subcommand("enumerate", "iterated completions up to a length");
  enumerate_opts.attach(enumerate);
  enumerate->add_option("--max-len", max_len, "length bound")->required();

  Common member_opts;
  std::string target;
  auto* member = app.add_subcommand("member", "membership in the iterated completion");
  member_opts.attach(member);
  member->add_option("--target", target, "candidate word")->required();

  Common witness_opts;
  auto* witness = app.add_subcommand("witness", "non-regularity witness");
  witness_opts.attach(witness);

  Common render_opts;
  std::string dot_path = "-";
  bool nfa = false;
  auto* render = app.add_subcommand("render", "DOT automaton of the construction or witness set");
  render_opts.attach(render);
  render->add_option("--dot", dot_path, "output path, - for stdout")
      ->capture_default_str();
  render->add_flag("--nfa", nfa, "emit the automaton before determinization");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*analyze) return run_analyze(analyze_opts);
    if (*complete) return run_complete(complete_opts, side);
    if (*enumerate) return run_enumerate(enumerate_opts, max_len);
    if (*member) return run_member(member_opts, target);
    if (*witness) return run_witness(witness_opts);
    if (*render) return run_render(render_opts, dot_path, nfa);
  } catch (const hairpin::InternalInvariantViolation& e) {
    std::cerr << "hairpin: " << e.kind() << ": " << e.what() << "\n";
    return kExitInternal;
  } catch (const hairpin::Error& e) {
    std::cerr << "hairpin: " << e.kind() << ": " << e.what() << "\n";
    return kExitInput;
  }
  return kExitUsage;
}
