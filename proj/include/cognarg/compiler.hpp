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

#include <map>
#include <string>
#include <vector>

#include "cognarg/core.hpp"

namespace cognarg {

enum class Mode { Predictive, Explanatory };

std::string_view to_string(Mode m);
Mode parse_mode(std::string_view text);

struct ReasonerProfile {
  Mode mode = Mode::Predictive;
  std::map<std::string, Interpretation> interpretation_overrides;
  bool allow_exogenous = false;  // explanatory mode only
  bool auto_demote_necessity = true;

  friend bool operator==(const ReasonerProfile&, const ReasonerProfile&) = default;
};

// Switches for the three strength rules. Everything on is the normal setting;
// the others exist for mutation testing.
struct StrengthRules {
  bool facts_dominate = true;
  bool hypotheses_yield = true;
  bool necessity_over_sufficiency = true;
};

// A SufficientAndNecessary conditional loses necessity once another sufficient
// conditional with a different condition shares its consequent.
std::vector<Conditional> demote_necessity(std::vector<Conditional> kb);

Framework compile_schemes(const std::vector<Conditional>& kb, const CognitiveState& state,
                          const ReasonerProfile& profile, const StrengthRules& rules = {});

bool stronger_than(const Framework& f, std::string_view a, std::string_view b);

// The persisted unit: vocabulary, conditionals, state and profile.
struct KnowledgeBase {
  std::vector<Atom> atoms;  // sorted vocabulary; see vocabulary()
  std::vector<Conditional> conditionals;
  CognitiveState state;
  ReasonerProfile profile;

  friend bool operator==(const KnowledgeBase&, const KnowledgeBase&) = default;
};

// Sorted atoms of the conditionals and the awareness set.
std::vector<Atom> vocabulary(const std::vector<Conditional>& kb, const CognitiveState& state);

inline Framework compile(const KnowledgeBase& kb, const StrengthRules& rules = {}) {
  return compile_schemes(kb.conditionals, kb.state, kb.profile, rules);
}

}  // namespace cognarg
