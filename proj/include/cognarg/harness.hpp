/* Copyright 2026 The cognarg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

// The suppression task: three groups of premises, four kinds of given fact,
// and the grid of expected conclusions per reasoning profile.
//
// Atoms: e  she has an essay to finish
//        l  she will study late in the library
//        t  she has a textbook to read
//        o  the library stays open

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cognarg/compiler.hpp"
#include "cognarg/core.hpp"
#include "cognarg/engine.hpp"

namespace cognarg::harness {

enum class Group { I, II, III };

std::string_view to_string(Group g);

struct GroupSetup {
  std::vector<Conditional> kb;
  std::set<Atom> awareness;
};

// e => l is recorded as sufficient and necessary; the profile may override
// it through the conditional id "c_e".
GroupSetup build_group(Group g);

inline constexpr std::string_view kEssayRule = "c_e";

ReasonerProfile column_profile(Mode mode, Interpretation essay, bool allow_exogenous);

struct CaseSpec {
  Group group;
  Literal given;
  Literal question;
  ReasonerProfile profile;
};

struct RunOptions {
  StrengthRules rules{};
  bool use_oracle = false;
  bool parallel = true;
};

// Throws IncompatibleProfile for explanatory mode on e or not e.
QueryVerdict run_case(const CaseSpec& c, const RunOptions& opts = {});

// Question asked for a given fact: l for e cases, e for l cases.
Literal question_for(const Literal& given);

struct BatteryCell {
  Literal given;
  Group group;
  Mode mode;
  Interpretation essay;
  bool allow_exogenous;
  Literal question;
  Classification got;
  std::optional<Classification> expected;  // nullopt: not asserted
  int byrne;                               // reported percentage, for display
  int dieussaert;

  bool checked() const { return expected.has_value(); }
  bool pass() const { return !expected || *expected == got; }
};

struct BatteryReport {
  std::vector<BatteryCell> cells;
  std::size_t checked = 0;
  std::size_t mismatches = 0;
  double seconds = 0;
};

BatteryReport run_battery(const RunOptions& opts = {});

// "table", "csv" or "json".
std::string format_battery(const BatteryReport& r, std::string_view format);

struct CohortPriors {
  double p_necessary_interpretation = 0.5;
  double p_explanatory_mode_given_consequent_fact = 0.5;
  double p_allow_exogenous = 0.5;
  std::size_t sample_count = 1000;
};

void validate(const CohortPriors& p);
CohortPriors priors_from_json_text(std::string_view text);

struct CohortCase {
  Group group;
  Literal given;
  Literal question;
};

// Answer frequencies. yes: the question literal holds; no: its complement.
struct Distribution {
  double yes = 0;
  double no = 0;
  double maybe = 0;
  std::size_t samples = 0;
};

enum class Answer { Yes, No, Maybe };
Answer answer_of(Classification c);

// Samples one profile per participant; sample i draws from its own stream
// derived from (seed, i), so results do not depend on the thread count and
// the same seed gives the same participants in every case.
Distribution simulate_cohort(const CohortPriors& p, const CohortCase& c, std::uint64_t seed,
                             bool parallel = true);

// The limit of simulate_cohort as sample_count grows.
Distribution expected_distribution(const CohortPriors& p, const CohortCase& c);

// The twelve (group, given) cases with their default questions.
std::vector<CohortCase> standard_cases();

}  // namespace cognarg::harness
