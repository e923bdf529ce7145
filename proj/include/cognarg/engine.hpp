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

#include <optional>
#include <string_view>
#include <vector>

#include "cognarg/core.hpp"

namespace cognarg {

enum class Classification { SkepticalYes, SkepticalNo, CredulousBoth, NoSupport };
enum class TreeStatus { Acceptable, Defeated, Exhausted };

std::string_view to_string(Classification c);
std::string_view to_string(TreeStatus s);
Classification classify(bool credulous_pos, bool credulous_neg);

// One counterargument met during the dialectic. Defenses are merged into the
// running root as soon as they are found, so every counterargument, including
// those raised against an earlier defense, hangs directly off the root.
struct DialecticNode {
  Argument attacker;
  std::optional<Argument> defense;
  bool strong = false;        // the attacker cannot defend back against the defense
  bool self_defense = false;  // the running root already defended itself
  TreeStatus status = TreeStatus::Acceptable;  // of the attacker

  friend bool operator==(const DialecticNode&, const DialecticNode&) = default;
};

struct DialecticTree {
  Literal claim;
  Argument support;  // the minimal support the search started from
  Argument root;     // support plus every merged defense
  std::vector<DialecticNode> children;
  TreeStatus status = TreeStatus::Exhausted;

  friend bool operator==(const DialecticTree&, const DialecticTree&) = default;
};

struct QueryVerdict {
  Literal literal;
  bool credulous_pos = false;
  bool credulous_neg = false;
  Classification classification = Classification::NoSupport;
  std::optional<DialecticTree> pos_witness{};
  std::optional<DialecticTree> neg_witness{};
};

struct EngineOptions {
  // Literal reading of the procedure: only attackers strictly stronger than
  // the running root are answered. Can accept arguments that are not
  // admissible; off by default.
  bool strictly_stronger_only = false;
};

// Query context over one immutable framework and state. Construction
// precomputes the minimal supports of every literal; all members are const
// and safe to call concurrently.
class Reasoner {
 public:
  Reasoner(const Framework& f, const CognitiveState& s, EngineOptions opts = {});

  const Framework& framework() const noexcept { return f_; }
  const CognitiveState& state() const noexcept { return s_; }

  bool supports(const Argument& a, const Literal& l) const;
  bool conflict_free(const Argument& a) const;
  std::vector<Argument> minimal_supports(const Literal& l) const;
  bool attacks(const Argument& a, const Argument& b) const;
  bool defends(const Argument& a, const Argument& b) const;
  std::vector<Argument> minimal_attackers(const Argument& a) const;
  bool is_admissible(const Argument& a) const;
  DialecticTree prove(const Literal& l) const;
  QueryVerdict query(const Literal& l) const;

  // Internal helpers shared with the proof search.
  std::vector<char> derived(const Argument& a) const;
  std::vector<char> applicable(const Argument& a, const std::vector<char>& derived) const;
  // Minimal supports of every literal using only schemes in pool.
  std::vector<std::vector<Argument>> support_table(const std::vector<SchemeIndex>& pool) const;
  // Minimal conflict-free sets containing x in which x is applicable.
  std::vector<Argument> applicable_supports(SchemeIndex x) const;
  // Preference order used for roots and attackers; true if a comes first.
  bool preferred(const Argument& a, const Argument& b) const;

 private:
  const Framework& f_;
  const CognitiveState& s_;
  EngineOptions opts_;
  std::vector<char> base_ok_;
  std::vector<std::vector<Argument>> table_;
};

bool supports(const Argument& a, const Literal& l, const Framework& f, const CognitiveState& s);
std::vector<Argument> minimal_supports(const Literal& l, const Framework& f, const CognitiveState& s);
bool attacks(const Argument& a, const Argument& b, const Framework& f, const CognitiveState& s);
bool defends(const Argument& a, const Argument& b, const Framework& f, const CognitiveState& s);
std::vector<Argument> minimal_attackers(const Argument& a, const Framework& f, const CognitiveState& s);
bool is_admissible(const Argument& a, const Framework& f, const CognitiveState& s);
DialecticTree prove(const Literal& l, const Framework& f, const CognitiveState& s,
                    EngineOptions opts = {});
QueryVerdict query(const Literal& l, const Framework& f, const CognitiveState& s,
                   EngineOptions opts = {});

}  // namespace cognarg
