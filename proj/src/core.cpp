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

#include "cognarg/core.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>

namespace cognarg {

namespace {

std::string normalize_name(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  bool pending_space = false;
  for (char ch : raw) {
    auto c = static_cast<unsigned char>(ch);
    if (std::isspace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(static_cast<char>(std::tolower(c)));
  }
  return out;
}

constexpr std::array<std::string_view, 10> kKindNames = {
    "fact", "hyp", "suff_p", "necc_p", "suff_e", "necc_e",
    "sec_suff_p", "sec_necc_p", "sec_suff_e", "exo_e"};

}  // namespace

Atom::Atom(std::string_view name) : name_(normalize_name(name)) {
  if (name_.empty()) throw Error(ErrorCode::InvalidAtom, "empty atom name");
}

std::string Literal::key() const { return atom.name() + (positive() ? "+" : "-"); }

std::string Literal::text() const { return positive() ? atom.name() : "not " + atom.name(); }

Literal complement(const Literal& l) {
  return {l.atom, l.positive() ? Sign::Negative : Sign::Positive};
}

Literal parse_literal(std::string_view text) {
  std::string norm = normalize_name(text);
  if (norm.starts_with("not ")) return Literal::neg(std::string_view(norm).substr(4));
  return Literal::pos(norm);
}

std::string_view to_string(Interpretation i) {
  switch (i) {
    case Interpretation::SufficientOnly: return "sufficient";
    case Interpretation::NecessaryOnly: return "necessary";
    case Interpretation::SufficientAndNecessary: return "sufficient_and_necessary";
  }
  return "?";
}

Interpretation parse_interpretation(std::string_view text) {
  if (text == "sufficient") return Interpretation::SufficientOnly;
  if (text == "necessary") return Interpretation::NecessaryOnly;
  if (text == "sufficient_and_necessary") return Interpretation::SufficientAndNecessary;
  throw Error(ErrorCode::Format, "unknown interpretation '" + std::string(text) + "'");
}

void validate(const Conditional& c) {
  if (c.id.empty()) throw Error(ErrorCode::InvalidConditional, "conditional without id");
  if (c.condition.empty())
    throw Error(ErrorCode::InvalidConditional, "conditional '" + c.id + "' has an empty condition");
  std::set<Literal> seen;
  for (const auto& k : c.condition) {
    if (!seen.insert(k).second)
      throw Error(ErrorCode::InvalidConditional,
                  "conditional '" + c.id + "' repeats '" + k.text() + "'");
    if (k.atom == c.consequent.atom)
      throw Error(ErrorCode::InvalidConditional,
                  "conditional '" + c.id + "' mentions its consequent atom in the condition");
  }
}

CognitiveState make_state(std::set<Literal> facts, std::set<Atom> awareness) {
  for (const auto& f : facts) {
    if (f.atom.is_exo())
      throw Error(ErrorCode::ExoFact, "exogenous atoms cannot be observed: " + f.text());
    if (facts.contains(complement(f)))
      throw Error(ErrorCode::InconsistentFacts, "facts contain both " + f.atom.name() + " and its negation");
    awareness.insert(f.atom);
  }
  CognitiveState s;
  s.facts_ = std::move(facts);
  s.awareness_ = std::move(awareness);
  return s;
}

Literal mint_exo_literal(const Literal& l) {
  if (l.atom.is_exo())
    throw Error(ErrorCode::NestedExo, "cannot mint an exogenous literal for " + l.text());
  return Literal::pos(std::string(kExoPrefix) + l.key());
}

std::string_view to_string(SchemeKind k) { return kKindNames.at(static_cast<std::size_t>(k)); }

SchemeKind parse_scheme_kind(std::string_view text) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i)
    if (kKindNames[i] == text) return static_cast<SchemeKind>(i);
  throw Error(ErrorCode::Format, "unknown scheme kind '" + std::string(text) + "'");
}

bool is_explanatory(SchemeKind k) {
  return k == SchemeKind::SuffE || k == SchemeKind::NeccE || k == SchemeKind::SecSuffE ||
         k == SchemeKind::ExoE;
}

int kind_priority(SchemeKind k) {
  switch (k) {
    case SchemeKind::Fact: return 0;
    case SchemeKind::NeccP: return 1;
    case SchemeKind::SuffP: return 2;
    case SchemeKind::SecNeccP: return 3;
    case SchemeKind::SecSuffP: return 4;
    case SchemeKind::NeccE: return 5;
    case SchemeKind::SuffE: return 6;
    case SchemeKind::SecSuffE: return 7;
    case SchemeKind::ExoE: return 8;
    case SchemeKind::Hyp: return 9;
  }
  return 10;
}

bool grounded(const Scheme& s, const CognitiveState& state) {
  switch (s.kind) {
    case SchemeKind::Fact: return state.has_fact(s.position);
    case SchemeKind::Hyp: return state.is_aware(s.position.atom);
    default: return true;
  }
}

Framework::Framework(std::vector<Scheme> schemes, std::vector<SchemePair> scheme_conflicts,
                     std::vector<SchemePair> stronger)
    : schemes_(std::move(schemes)) {
  for (auto& s : schemes_) std::sort(s.premises.begin(), s.premises.end());
  std::sort(schemes_.begin(), schemes_.end(),
            [](const Scheme& a, const Scheme& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < schemes_.size(); ++i)
    if (schemes_[i].id == schemes_[i - 1].id)
      throw Error(ErrorCode::InvalidFramework, "duplicate scheme id '" + schemes_[i].id + "'");
  for (const auto& s : schemes_) {
    if (s.is_base() && !s.premises.empty())
      throw Error(ErrorCode::InvalidFramework, "base scheme '" + s.id + "' has premises");
  }

  std::map<Literal, LiteralId> table;
  auto intern = [&](const Literal& l) {
    for (const Literal& x : {l, complement(l)}) {
      if (!table.contains(x)) {
        table.emplace(x, static_cast<LiteralId>(literals_.size()));
        literals_.push_back(x);
      }
    }
    return table.at(l);
  };
  premise_ids_.resize(schemes_.size());
  position_id_.resize(schemes_.size());
  for (std::size_t i = 0; i < schemes_.size(); ++i) {
    for (const auto& p : schemes_[i].premises) premise_ids_[i].push_back(intern(p));
    position_id_[i] = intern(schemes_[i].position);
  }
  complement_.resize(literals_.size());
  for (LiteralId id = 0; id < literals_.size(); ++id)
    complement_[id] = table.at(complement(literals_[id]));
  producers_.resize(literals_.size());
  for (SchemeIndex i = 0; i < schemes_.size(); ++i) producers_[position_id_[i]].push_back(i);

  explicit_adj_.resize(schemes_.size());
  for (const auto& [a, b] : scheme_conflicts) {
    SchemeIndex x = index_of(a), y = index_of(b);
    if (x == y) throw Error(ErrorCode::InvalidFramework, "scheme '" + a + "' conflicts with itself");
    conflict_pairs_.emplace_back(std::min(x, y), std::max(x, y));
  }
  std::sort(conflict_pairs_.begin(), conflict_pairs_.end());
  conflict_pairs_.erase(std::unique(conflict_pairs_.begin(), conflict_pairs_.end()),
                        conflict_pairs_.end());
  for (const auto& [x, y] : conflict_pairs_) {
    explicit_adj_[x].push_back(y);
    explicit_adj_[y].push_back(x);
  }
  for (auto& adj : explicit_adj_) std::sort(adj.begin(), adj.end());

  stronger_matrix_.assign(schemes_.size(), std::vector<char>(schemes_.size(), 0));
  for (const auto& [a, b] : stronger) {
    SchemeIndex x = index_of(a), y = index_of(b);
    if (x == y) throw Error(ErrorCode::InvalidFramework, "strength must be irreflexive: " + a);
    if (!in_conflict(x, y))
      throw Error(ErrorCode::InvalidFramework,
                  "strength relates non-conflicting schemes " + a + " and " + b);
    stronger_pairs_.emplace_back(x, y);
    stronger_matrix_[x][y] = 1;
  }
  std::sort(stronger_pairs_.begin(), stronger_pairs_.end());
  stronger_pairs_.erase(std::unique(stronger_pairs_.begin(), stronger_pairs_.end()),
                        stronger_pairs_.end());
  for (const auto& [x, y] : stronger_pairs_)
    if (stronger_matrix_[y][x])
      throw Error(ErrorCode::InvalidFramework, "strength must be asymmetric: " + schemes_[x].id +
                                                   " and " + schemes_[y].id);
}

std::optional<SchemeIndex> Framework::find(std::string_view id) const {
  auto it = std::lower_bound(schemes_.begin(), schemes_.end(), id,
                             [](const Scheme& s, std::string_view v) { return s.id < v; });
  if (it == schemes_.end() || it->id != id) return std::nullopt;
  return static_cast<SchemeIndex>(it - schemes_.begin());
}

SchemeIndex Framework::index_of(std::string_view id) const {
  if (auto i = find(id)) return *i;
  throw Error(ErrorCode::UnknownScheme, "unknown scheme '" + std::string(id) + "'");
}

bool Framework::explicit_conflict(SchemeIndex a, SchemeIndex b) const {
  const auto& adj = explicit_adj_.at(a);
  return std::binary_search(adj.begin(), adj.end(), b);
}

bool Framework::in_conflict(SchemeIndex a, SchemeIndex b) const {
  return position_id_.at(a) == complement_.at(position_id_.at(b)) || explicit_conflict(a, b);
}

bool Framework::stronger(SchemeIndex a, SchemeIndex b) const { return stronger_matrix_.at(a).at(b) != 0; }

std::optional<LiteralId> Framework::literal_id(const Literal& l) const {
  for (LiteralId id = 0; id < literals_.size(); ++id)
    if (literals_[id] == l) return id;
  return std::nullopt;
}

std::vector<SchemePair> Framework::scheme_conflict_ids() const {
  std::vector<SchemePair> out;
  for (const auto& [a, b] : conflict_pairs_) out.emplace_back(schemes_[a].id, schemes_[b].id);
  return out;
}

std::vector<SchemePair> Framework::stronger_ids() const {
  std::vector<SchemePair> out;
  for (const auto& [a, b] : stronger_pairs_) out.emplace_back(schemes_[a].id, schemes_[b].id);
  return out;
}

Argument::Argument(std::vector<SchemeIndex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool Argument::contains(SchemeIndex i) const {
  return std::binary_search(members_.begin(), members_.end(), i);
}

bool Argument::subset_of(const Argument& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

Argument Argument::merged(const Argument& other) const {
  Argument out;
  std::set_union(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                 std::back_inserter(out.members_));
  return out;
}

Argument argument_from_ids(const Framework& f, const std::vector<std::string>& ids) {
  std::vector<SchemeIndex> members;
  for (const auto& id : ids) members.push_back(f.index_of(id));
  return Argument(std::move(members));
}

std::vector<std::string> argument_ids(const Framework& f, const Argument& a) {
  std::vector<std::string> out;
  for (SchemeIndex i : a.members()) out.push_back(f.scheme(i).id);
  return out;
}

std::string describe(const Framework& f, const Argument& a) {
  std::string out = "{";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ", ";
    out += f.scheme(a.members()[i]).id;
  }
  return out + "}";
}

}  // namespace cognarg
