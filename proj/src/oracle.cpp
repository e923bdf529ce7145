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

#include "cognarg/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace cognarg::oracle {

Oracle::Oracle(const Framework& f, const CognitiveState& s, std::size_t cap) : f_(f), n_(f.size()) {
  if (n_ > std::min(cap, kHardCap))
    throw Error(ErrorCode::FrameworkTooLarge,
                std::to_string(n_) + " schemes exceed the oracle cap of " + std::to_string(std::min(cap, kHardCap)));
  if (f.literal_count() > 64)
    throw Error(ErrorCode::FrameworkTooLarge, "more than 64 literals");

  comp_.resize(f.literal_count());
  for (LiteralId l = 0; l < f.literal_count(); ++l) comp_[l] = f.complement_id(l);

  std::vector<Bits> prem(n_, 0), pos(n_, 0);
  std::vector<char> usable(n_, 1);
  conf_.assign(n_, 0);
  for (SchemeIndex i = 0; i < n_; ++i) {
    for (LiteralId p : f.premise_ids(i)) prem[i] |= Bits{1} << p;
    pos[i] = Bits{1} << f.position_id(i);
    const Scheme& sc = f.scheme(i);
    if (sc.kind == SchemeKind::Fact) usable[i] = s.has_fact(sc.position);
    if (sc.kind == SchemeKind::Hyp) usable[i] = s.is_aware(sc.position.atom);
  }
  for (const auto& [a, b] : f.conflict_pairs()) {
    conf_[a] |= Mask{1} << b;
    conf_[b] |= Mask{1} << a;
  }

  const std::size_t total = std::size_t{1} << n_;
  supp_.assign(total, 0);
  app_.assign(total, 0);
  for (std::size_t m = 1; m < total; ++m) {
    Bits d = 0;
    Mask fired = 0;
    bool changed = true;
    while (changed) {
      changed = false;
      for (SchemeIndex i = 0; i < n_; ++i) {
        Mask bit = Mask{1} << i;
        if (!(m & bit) || (fired & bit) || !usable[i]) continue;
        if ((prem[i] & ~d) != 0) continue;
        d |= pos[i];
        fired |= bit;
        changed = true;
      }
    }
    supp_[m] = d;
    app_[m] = fired;  // members whose premises hold are exactly the fired ones
  }

  comp_supp_.assign(total, 0);
  conf_app_.assign(total, 0);
  cf_.assign(total, 0);
  for (std::size_t m = 1; m < total; ++m) {
    comp_supp_[m] = complement_bits(supp_[m]);
    Mask inner = 0;
    for (SchemeIndex i = 0; i < n_; ++i) {
      if (m & (Mask{1} << i)) inner |= conf_[i];
      if (app_[m] & (Mask{1} << i)) conf_app_[m] |= conf_[i];
    }
    cf_[m] = (supp_[m] & comp_supp_[m]) == 0 && (inner & m) == 0;
    if (cf_[m]) cf_masks_.push_back(static_cast<Mask>(m));
  }

  // Minimal supports by literal: supported by m but by no maximal proper subset.
  std::vector<std::vector<Mask>> minimal(f.literal_count());
  for (std::size_t m = 1; m < total; ++m) {
    Bits lost = 0;
    for (SchemeIndex i = 0; i < n_; ++i)
      if (m & (Mask{1} << i)) lost |= supp_[m ^ (Mask{1} << i)];
    Bits ms = supp_[m] & ~lost;
    for (LiteralId l = 0; ms; ++l, ms >>= 1)
      if (ms & 1) minimal[l].push_back(static_cast<Mask>(m));
  }

  auto strength_ok = [&](Mask dm, Mask bm) {
    bool attacker_wins = false, counter = false;
    for (const auto& [x, y] : f.stronger_pairs()) {
      Mask bx = Mask{1} << x, by = Mask{1} << y;
      if ((bm & bx) && (dm & by)) attacker_wins = true;
      if ((dm & bx) && (bm & by)) counter = true;
    }
    return !attacker_wins || counter;
  };
  for (LiteralId l = 0; l < f.literal_count(); ++l)
    for (Mask dm : minimal[l])
      for (Mask bm : minimal[comp_[l]])
        if (strength_ok(dm, bm)) defense_pairs_.emplace_back(dm, bm);
  for (const auto& [a, b] : f.conflict_pairs()) {
    for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
      for (Mask dm : minimal[f.position_id(x)]) {
        if (!(dm & (Mask{1} << x))) continue;
        for (Mask bm : minimal[f.position_id(y)])
          if ((bm & (Mask{1} << y)) && strength_ok(dm, bm)) defense_pairs_.emplace_back(dm, bm);
      }
    }
  }
  std::sort(defense_pairs_.begin(), defense_pairs_.end());
  defense_pairs_.erase(std::unique(defense_pairs_.begin(), defense_pairs_.end()), defense_pairs_.end());
}

Oracle::Bits Oracle::complement_bits(Bits b) const {
  Bits out = 0;
  for (LiteralId l = 0; b; ++l, b >>= 1)
    if (b & 1) out |= Bits{1} << comp_[l];
  return out;
}

bool Oracle::attacks_mask(Mask b, Mask d) const {
  return (supp_[b] & comp_supp_[d]) != 0 || (conf_app_[d] & app_[b]) != 0;
}

bool Oracle::defends_mask(Mask d, Mask b) const {
  for (const auto& [dm, bm] : defense_pairs_)
    if ((dm & ~d) == 0 && (bm & ~b) == 0) return true;
  return false;
}

bool Oracle::admissible_mask(Mask d) const {
  if (d != 0 && !cf_[d]) return false;
  std::vector<Mask> answers;
  for (const auto& [dm, bm] : defense_pairs_)
    if ((dm & ~d) == 0) answers.push_back(bm);
  for (Mask b : cf_masks_) {
    if (!attacks_mask(b, d)) continue;
    bool answered = std::any_of(answers.begin(), answers.end(), [b](Mask bm) { return (bm & ~b) == 0; });
    if (!answered) return false;
  }
  return true;
}

Oracle::Mask Oracle::mask_of(const Argument& a) const {
  Mask m = 0;
  for (SchemeIndex i : a.members()) {
    if (i >= n_) throw Error(ErrorCode::UnknownScheme, "scheme index out of range");
    m |= Mask{1} << i;
  }
  return m;
}

Argument Oracle::argument_of(Mask m) const {
  std::vector<SchemeIndex> members;
  for (SchemeIndex i = 0; i < n_; ++i)
    if (m & (Mask{1} << i)) members.push_back(i);
  return Argument(std::move(members));
}

std::vector<Argument> Oracle::all_arguments() const {
  std::vector<Argument> out;
  for (Mask m : cf_masks_) out.push_back(argument_of(m));
  return out;
}

bool Oracle::admissible(const Argument& a) const { return admissible_mask(mask_of(a)); }

bool Oracle::attacks(const Argument& a, const Argument& b) const {
  return attacks_mask(mask_of(a), mask_of(b));
}

bool Oracle::defends(const Argument& a, const Argument& b) const {
  return defends_mask(mask_of(a), mask_of(b));
}

std::vector<Oracle::Mask> Oracle::supporters(const Literal& l) const {
  std::vector<Mask> out;
  auto id = f_.literal_id(l);
  if (!id) return out;
  for (Mask m : cf_masks_)
    if (supp_[m] & (Bits{1} << *id)) out.push_back(m);
  std::stable_sort(out.begin(), out.end(),
                   [](Mask a, Mask b) { return std::popcount(a) < std::popcount(b); });
  return out;
}

DialecticTree Oracle::witness(const Literal& l, Mask m) const {
  Argument a = argument_of(m);
  return DialecticTree{l, a, a, {}, TreeStatus::Acceptable};
}

QueryVerdict Oracle::query(const Literal& l) const {
  QueryVerdict v{l};
  const Literal sides[2] = {l, complement(l)};
  for (int side = 0; side < 2; ++side) {
    auto cand = supporters(sides[side]);
    std::vector<char> ok(cand.size(), 0);
    const long count = static_cast<long>(cand.size());
#pragma omp parallel for schedule(dynamic, 4)
    for (long k = 0; k < count; ++k) ok[k] = admissible_mask(cand[k]) ? 1 : 0;
    auto it = std::find(ok.begin(), ok.end(), 1);
    if (it == ok.end()) continue;
    auto tree = witness(sides[side], cand[it - ok.begin()]);
    if (side == 0) {
      v.credulous_pos = true;
      v.pos_witness = std::move(tree);
    } else {
      v.credulous_neg = true;
      v.neg_witness = std::move(tree);
    }
  }
  v.classification = classify(v.credulous_pos, v.credulous_neg);
  return v;
}

QueryVerdict Oracle::query_serial(const Literal& l) const {
  QueryVerdict v{l};
  for (Mask m : supporters(l))
    if (admissible_mask(m)) {
      v.credulous_pos = true;
      v.pos_witness = witness(l, m);
      break;
    }
  const Literal nl = complement(l);
  for (Mask m : supporters(nl))
    if (admissible_mask(m)) {
      v.credulous_neg = true;
      v.neg_witness = witness(nl, m);
      break;
    }
  v.classification = classify(v.credulous_pos, v.credulous_neg);
  return v;
}

std::vector<Argument> all_arguments(const Framework& f, const CognitiveState& s, std::size_t cap) {
  return Oracle(f, s, cap).all_arguments();
}

bool oracle_admissible(const Argument& a, const Framework& f, const CognitiveState& s, std::size_t cap) {
  return Oracle(f, s, cap).admissible(a);
}

QueryVerdict oracle_query(const Literal& l, const Framework& f, const CognitiveState& s, std::size_t cap) {
  return Oracle(f, s, cap).query(l);
}

QueryVerdict oracle_query_serial(const Literal& l, const Framework& f, const CognitiveState& s,
                                 std::size_t cap) {
  return Oracle(f, s, cap).query_serial(l);
}

}  // namespace cognarg::oracle
