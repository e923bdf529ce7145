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

#include "cognarg/compiler.hpp"

#include <algorithm>
#include <set>

namespace cognarg {

std::string_view to_string(Mode m) { return m == Mode::Predictive ? "predictive" : "explanatory"; }

Mode parse_mode(std::string_view text) {
  if (text == "predictive") return Mode::Predictive;
  if (text == "explanatory") return Mode::Explanatory;
  throw Error(ErrorCode::Format, "unknown mode '" + std::string(text) + "'");
}

std::vector<Conditional> demote_necessity(std::vector<Conditional> kb) {
  auto same_condition = [](const Conditional& a, const Conditional& b) {
    return std::set<Literal>(a.condition.begin(), a.condition.end()) ==
           std::set<Literal>(b.condition.begin(), b.condition.end());
  };
  std::vector<bool> demote(kb.size(), false);
  for (std::size_t i = 0; i < kb.size(); ++i) {
    if (kb[i].interpretation != Interpretation::SufficientAndNecessary) continue;
    for (std::size_t j = 0; j < kb.size(); ++j) {
      if (i == j || !is_sufficient(kb[j].interpretation)) continue;
      if (kb[j].consequent == kb[i].consequent && !same_condition(kb[i], kb[j])) demote[i] = true;
    }
  }
  for (std::size_t i = 0; i < kb.size(); ++i)
    if (demote[i]) kb[i].interpretation = Interpretation::SufficientOnly;
  return kb;
}

namespace {

class SchemeSet {
 public:
  void add(SchemeKind kind, std::vector<Literal> premises, Literal position, std::string source) {
    std::sort(premises.begin(), premises.end());
    std::string id(to_string(kind));
    id += '(';
    if (kind == SchemeKind::Fact || kind == SchemeKind::Hyp) {
      id += position.text();
    } else if (kind == SchemeKind::ExoE) {
      id += premises.front().text();
    } else {
      for (std::size_t i = 0; i < premises.size(); ++i) {
        if (i) id += '&';
        id += premises[i].text();
      }
      id += "=>" + position.text();
    }
    id += ')';
    if (!ids_.insert(id).second) return;  // same kind, premises and position
    schemes_.push_back({id, kind, std::move(premises), std::move(position), std::move(source)});
  }

  std::vector<Scheme>& schemes() { return schemes_; }

 private:
  std::set<std::string> ids_;
  std::vector<Scheme> schemes_;
};

void check_atoms(const Conditional& c, const CognitiveState& state) {
  auto check = [&](const Literal& l) {
    if (!state.is_aware(l.atom))
      throw Error(ErrorCode::UnknownAtom,
                  "conditional '" + c.id + "' uses '" + l.atom.name() + "' outside the awareness set");
  };
  for (const auto& k : c.condition) check(k);
  check(c.consequent);
}

// Explanatory schemes sharing an observation (their single premise) compete
// as explanations of it.
bool explanations_conflict(const Scheme& a, const Scheme& b) {
  auto is = [](const Scheme& s, SchemeKind k) { return s.kind == k; };
  if (is(a, SchemeKind::ExoE) || is(b, SchemeKind::ExoE)) return true;
  if (is(a, SchemeKind::SuffE) && is(b, SchemeKind::SuffE)) return a.source != b.source;
  if (is(a, SchemeKind::NeccE) && is(b, SchemeKind::NeccE)) return true;
  // A necessary and a secondary explanation naming the same cause are one
  // explanation reached twice, not rivals.
  if ((is(a, SchemeKind::NeccE) && is(b, SchemeKind::SecSuffE)) ||
      (is(a, SchemeKind::SecSuffE) && is(b, SchemeKind::NeccE)))
    return a.position != b.position;
  return false;
}

}  // namespace

Framework compile_schemes(const std::vector<Conditional>& kb, const CognitiveState& state,
                          const ReasonerProfile& profile, const StrengthRules& rules) {
  std::vector<Conditional> effective = kb;
  for (auto& c : effective) {
    validate(c);
    check_atoms(c, state);
    if (auto it = profile.interpretation_overrides.find(c.id);
        it != profile.interpretation_overrides.end())
      c.interpretation = it->second;
  }
  if (profile.auto_demote_necessity) effective = demote_necessity(std::move(effective));

  SchemeSet set;
  for (const auto& f : state.facts()) set.add(SchemeKind::Fact, {}, f, "state");
  for (const auto& a : state.awareness()) {
    if (a.is_exo()) continue;
    set.add(SchemeKind::Hyp, {}, {a, Sign::Positive}, "state");
    set.add(SchemeKind::Hyp, {}, {a, Sign::Negative}, "state");
  }

  const bool predictive = profile.mode == Mode::Predictive;
  for (const auto& c : effective) {
    const Literal& q = c.consequent;
    const Literal nq = complement(q);
    const bool suff = is_sufficient(c.interpretation);
    const bool necc = is_necessary(c.interpretation);
    if (predictive && suff) set.add(SchemeKind::SuffP, c.condition, q, c.id);
    for (const auto& k : c.condition) {
      const Literal nk = complement(k);
      if (predictive) {
        if (necc) set.add(SchemeKind::NeccP, {nk}, nq, c.id);
        if (suff) set.add(SchemeKind::SecSuffP, {nq}, nk, c.id);
        if (necc) set.add(SchemeKind::SecNeccP, {q}, k, c.id);
      } else {
        if (suff) set.add(SchemeKind::SuffE, {q}, k, c.id);
        if (necc) set.add(SchemeKind::NeccE, {nq}, nk, c.id);
        if (suff) set.add(SchemeKind::SecSuffE, {nq}, nk, c.id);
      }
    }
  }
  if (!predictive && profile.allow_exogenous) {
    std::set<Atom> consequents;
    for (const auto& c : effective) consequents.insert(c.consequent.atom);
    for (const auto& a : consequents) {
      for (Sign sg : {Sign::Positive, Sign::Negative}) {
        Literal obs{a, sg};
        set.add(SchemeKind::ExoE, {obs}, mint_exo_literal(obs), "exo");
      }
    }
  }

  std::vector<Scheme>& schemes = set.schemes();
  std::vector<SchemePair> conflicts;
  for (std::size_t i = 0; i < schemes.size(); ++i) {
    if (!is_explanatory(schemes[i].kind)) continue;
    for (std::size_t j = i + 1; j < schemes.size(); ++j) {
      if (!is_explanatory(schemes[j].kind)) continue;
      if (schemes[i].premises != schemes[j].premises) continue;
      if (explanations_conflict(schemes[i], schemes[j]))
        conflicts.emplace_back(schemes[i].id, schemes[j].id);
    }
  }

  std::set<std::pair<std::string, std::string>> conflict_lookup;
  for (const auto& [a, b] : conflicts) {
    conflict_lookup.emplace(a, b);
    conflict_lookup.emplace(b, a);
  }
  auto conflicting = [&](const Scheme& a, const Scheme& b) {
    return a.position == complement(b.position) || conflict_lookup.contains({a.id, b.id});
  };

  std::vector<SchemePair> stronger;
  for (const auto& a : schemes) {
    for (const auto& b : schemes) {
      if (&a == &b || !conflicting(a, b)) continue;
      bool wins = false;
      if (rules.facts_dominate && a.kind == SchemeKind::Fact && b.kind != SchemeKind::Fact) wins = true;
      if (rules.hypotheses_yield && b.kind == SchemeKind::Hyp && a.kind != SchemeKind::Hyp) wins = true;
      if (rules.necessity_over_sufficiency && a.kind == SchemeKind::NeccP &&
          b.kind == SchemeKind::SuffP && a.position == complement(b.position))
        wins = true;
      if (wins) stronger.emplace_back(a.id, b.id);
    }
  }
  return Framework(std::move(schemes), std::move(conflicts), std::move(stronger));
}

std::vector<Atom> vocabulary(const std::vector<Conditional>& kb, const CognitiveState& state) {
  std::set<Atom> atoms(state.awareness().begin(), state.awareness().end());
  for (const auto& c : kb) {
    for (const auto& k : c.condition) atoms.insert(k.atom);
    atoms.insert(c.consequent.atom);
  }
  return {atoms.begin(), atoms.end()};
}

bool stronger_than(const Framework& f, std::string_view a, std::string_view b) {
  return f.stronger(f.index_of(a), f.index_of(b));
}

}  // namespace cognarg
