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

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cognarg {

enum class ErrorCode {
  InconsistentFacts,
  ExoFact,
  NestedExo,
  InvalidAtom,
  InvalidConditional,
  UnknownAtom,
  UnknownScheme,
  InvalidFramework,
  FrameworkTooLarge,
  IncompatibleProfile,
  Format,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline constexpr std::string_view kExoPrefix = "exo::";

// A propositional variable. The name is trimmed, lowercased and has runs of
// whitespace collapsed to one space.
class Atom {
 public:
  explicit Atom(std::string_view name);

  const std::string& name() const noexcept { return name_; }
  bool is_exo() const noexcept { return name_.starts_with(kExoPrefix); }

  friend auto operator<=>(const Atom&, const Atom&) = default;

 private:
  std::string name_;
};

enum class Sign : std::uint8_t { Positive, Negative };

struct Literal {
  Atom atom;
  Sign sign = Sign::Positive;

  static Literal pos(std::string_view name) { return {Atom(name), Sign::Positive}; }
  static Literal neg(std::string_view name) { return {Atom(name), Sign::Negative}; }

  bool positive() const noexcept { return sign == Sign::Positive; }
  // "name+" or "name-"; unique per (atom, sign).
  std::string key() const;
  // Canonical text form: "name" or "not name".
  std::string text() const;

  friend auto operator<=>(const Literal&, const Literal&) = default;
};

Literal complement(const Literal& l);

// Accepts the canonical text form ("x" / "not x").
Literal parse_literal(std::string_view text);

enum class Interpretation { SufficientOnly, NecessaryOnly, SufficientAndNecessary };

inline bool is_sufficient(Interpretation i) { return i != Interpretation::NecessaryOnly; }
inline bool is_necessary(Interpretation i) { return i != Interpretation::SufficientOnly; }

std::string_view to_string(Interpretation i);
Interpretation parse_interpretation(std::string_view text);

struct Conditional {
  std::string id;
  std::vector<Literal> condition;  // ordered, duplicate free
  Literal consequent;
  Interpretation interpretation;

  friend bool operator==(const Conditional&, const Conditional&) = default;
};

// Throws InvalidConditional on an empty condition, duplicate condition literals
// or a consequent whose atom also occurs in the condition.
void validate(const Conditional& c);

class CognitiveState {
 public:
  CognitiveState() = default;

  const std::set<Literal>& facts() const noexcept { return facts_; }
  const std::set<Atom>& awareness() const noexcept { return awareness_; }
  bool has_fact(const Literal& l) const { return facts_.contains(l); }
  bool is_aware(const Atom& a) const { return awareness_.contains(a); }

  friend bool operator==(const CognitiveState&, const CognitiveState&) = default;

 private:
  friend CognitiveState make_state(std::set<Literal>, std::set<Atom>);
  std::set<Literal> facts_;
  std::set<Atom> awareness_;
};

// Awareness is closed over the atoms of the facts.
CognitiveState make_state(std::set<Literal> facts, std::set<Atom> awareness);

// pos(exo::<key(l)>). Deterministic; refuses exogenous input.
Literal mint_exo_literal(const Literal& l);

enum class SchemeKind : std::uint8_t {
  Fact,
  Hyp,
  SuffP,
  NeccP,
  SuffE,
  NeccE,
  SecSuffP,
  SecNeccP,
  SecSuffE,
  ExoE,
};

std::string_view to_string(SchemeKind k);
SchemeKind parse_scheme_kind(std::string_view text);
bool is_explanatory(SchemeKind k);
// Lower is preferred when the proof procedure picks roots and defenses.
int kind_priority(SchemeKind k);

struct Scheme {
  std::string id;
  SchemeKind kind;
  std::vector<Literal> premises;  // sorted
  Literal position;
  std::string source;

  bool is_base() const { return kind == SchemeKind::Fact || kind == SchemeKind::Hyp; }

  friend bool operator==(const Scheme&, const Scheme&) = default;
};

// Fact and hyp schemes are only usable when the state backs them.
bool grounded(const Scheme& s, const CognitiveState& state);

using SchemeIndex = std::uint32_t;
using LiteralId = std::uint32_t;
using SchemePair = std::pair<std::string, std::string>;

// Schemes are kept sorted by id; indices are positions in that order.
class Framework {
 public:
  Framework() = default;
  Framework(std::vector<Scheme> schemes, std::vector<SchemePair> scheme_conflicts,
            std::vector<SchemePair> stronger);

  std::size_t size() const noexcept { return schemes_.size(); }
  const std::vector<Scheme>& schemes() const noexcept { return schemes_; }
  const Scheme& scheme(SchemeIndex i) const { return schemes_.at(i); }
  std::optional<SchemeIndex> find(std::string_view id) const;
  SchemeIndex index_of(std::string_view id) const;

  bool explicit_conflict(SchemeIndex a, SchemeIndex b) const;
  // Opposing positions or an explicit scheme conflict.
  bool in_conflict(SchemeIndex a, SchemeIndex b) const;
  bool stronger(SchemeIndex a, SchemeIndex b) const;
  bool has_stronger_edges() const noexcept { return !stronger_pairs_.empty(); }

  // Normalized (first < second), sorted.
  const std::vector<std::pair<SchemeIndex, SchemeIndex>>& conflict_pairs() const noexcept {
    return conflict_pairs_;
  }
  const std::vector<std::pair<SchemeIndex, SchemeIndex>>& stronger_pairs() const noexcept {
    return stronger_pairs_;
  }
  const std::vector<SchemeIndex>& conflicting(SchemeIndex i) const { return explicit_adj_.at(i); }

  // Literal table: every premise and position plus their complements.
  std::size_t literal_count() const noexcept { return literals_.size(); }
  const Literal& literal(LiteralId id) const { return literals_.at(id); }
  std::optional<LiteralId> literal_id(const Literal& l) const;
  LiteralId complement_id(LiteralId id) const { return complement_.at(id); }
  const std::vector<LiteralId>& premise_ids(SchemeIndex i) const { return premise_ids_.at(i); }
  LiteralId position_id(SchemeIndex i) const { return position_id_.at(i); }
  const std::vector<SchemeIndex>& producers(LiteralId id) const { return producers_.at(id); }

  std::vector<SchemePair> scheme_conflict_ids() const;
  std::vector<SchemePair> stronger_ids() const;

  friend bool operator==(const Framework& a, const Framework& b) {
    return a.schemes_ == b.schemes_ && a.conflict_pairs_ == b.conflict_pairs_ &&
           a.stronger_pairs_ == b.stronger_pairs_;
  }

 private:
  std::vector<Scheme> schemes_;
  std::vector<std::pair<SchemeIndex, SchemeIndex>> conflict_pairs_;
  std::vector<std::pair<SchemeIndex, SchemeIndex>> stronger_pairs_;
  std::vector<std::vector<SchemeIndex>> explicit_adj_;
  std::vector<std::vector<char>> stronger_matrix_;
  std::vector<Literal> literals_;
  std::vector<LiteralId> complement_;
  std::vector<std::vector<LiteralId>> premise_ids_;
  std::vector<LiteralId> position_id_;
  std::vector<std::vector<SchemeIndex>> producers_;
};

// A set of scheme instances, stored as sorted unique indices into a Framework.
class Argument {
 public:
  Argument() = default;
  explicit Argument(std::vector<SchemeIndex> members);

  const std::vector<SchemeIndex>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(SchemeIndex i) const;
  bool subset_of(const Argument& other) const;
  Argument merged(const Argument& other) const;

  friend auto operator<=>(const Argument&, const Argument&) = default;

 private:
  std::vector<SchemeIndex> members_;
};

Argument argument_from_ids(const Framework& f, const std::vector<std::string>& ids);
std::vector<std::string> argument_ids(const Framework& f, const Argument& a);
// "{fact(e), suff_p(e=>l)}"
std::string describe(const Framework& f, const Argument& a);

}  // namespace cognarg
