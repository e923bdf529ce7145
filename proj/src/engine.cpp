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

#include "cognarg/engine.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cognarg {

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::SkepticalYes: return "skeptical_yes";
    case Classification::SkepticalNo: return "skeptical_no";
    case Classification::CredulousBoth: return "credulous_both";
    case Classification::NoSupport: return "no_support";
  }
  return "?";
}

std::string_view to_string(TreeStatus s) {
  switch (s) {
    case TreeStatus::Acceptable: return "acceptable";
    case TreeStatus::Defeated: return "defeated";
    case TreeStatus::Exhausted: return "exhausted";
  }
  return "?";
}

Classification classify(bool pos, bool neg) {
  if (pos && neg) return Classification::CredulousBoth;
  if (pos) return Classification::SkepticalYes;
  if (neg) return Classification::SkepticalNo;
  return Classification::NoSupport;
}

namespace {

using Table = std::vector<std::vector<Argument>>;

// Keeps list an antichain under inclusion.
bool insert_minimal(std::vector<Argument>& list, const Argument& cand) {
  for (const auto& e : list)
    if (e.subset_of(cand)) return false;
  std::erase_if(list, [&](const Argument& e) { return cand.subset_of(e); });
  list.push_back(cand);
  return true;
}

// Calls fn with the union of one element from each list.
template <typename Fn>
void for_each_union(const std::vector<const std::vector<Argument>*>& lists, Fn&& fn) {
  for (const auto* l : lists)
    if (l->empty()) return;
  std::vector<std::size_t> idx(lists.size(), 0);
  while (true) {
    Argument u;
    for (std::size_t k = 0; k < lists.size(); ++k) u = u.merged((*lists[k])[idx[k]]);
    fn(u);
    std::size_t k = 0;
    while (k < lists.size() && ++idx[k] == lists[k]->size()) idx[k++] = 0;
    if (k == lists.size()) return;
  }
}

bool strength_ok(const Framework& f, const Argument& am, const Argument& bm) {
  if (!f.has_stronger_edges()) return true;
  bool attacker_wins = false;
  for (SchemeIndex b : bm.members())
    for (SchemeIndex a : am.members())
      if (f.stronger(b, a)) attacker_wins = true;
  if (!attacker_wins) return true;
  for (SchemeIndex a : am.members())
    for (SchemeIndex b : bm.members())
      if (f.stronger(a, b)) return true;
  return false;
}

// Weakest-link defense check over precomputed minimal-support tables of
// a and b restricted to their own members.
bool defends_with(const Framework& f, const Argument& a, const Table& ta, const Argument& b,
                  const Table& tb) {
  for (LiteralId l = 0; l < f.literal_count(); ++l) {
    const auto& mine = ta[l];
    const auto& theirs = tb[f.complement_id(l)];
    for (const auto& am : mine)
      for (const auto& bm : theirs)
        if (strength_ok(f, am, bm)) return true;
  }
  for (SchemeIndex x : a.members()) {
    for (SchemeIndex y : f.conflicting(x)) {
      if (!b.contains(y)) continue;
      for (const auto& am : ta[f.position_id(x)]) {
        if (!am.contains(x)) continue;
        for (const auto& bm : tb[f.position_id(y)])
          if (bm.contains(y) && strength_ok(f, am, bm)) return true;
      }
    }
  }
  return false;
}

std::vector<int> priority_key(const Framework& f, const Argument& a) {
  std::vector<int> key;
  for (SchemeIndex i : a.members()) key.push_back(kind_priority(f.scheme(i).kind));
  std::sort(key.begin(), key.end());
  return key;
}

}  // namespace

Reasoner::Reasoner(const Framework& f, const CognitiveState& s, EngineOptions opts)
    : f_(f), s_(s), opts_(opts), base_ok_(f.size(), 1) {
  for (SchemeIndex i = 0; i < f.size(); ++i)
    if (f.scheme(i).is_base()) base_ok_[i] = grounded(f.scheme(i), s) ? 1 : 0;
  std::vector<SchemeIndex> all(f.size());
  for (SchemeIndex i = 0; i < f.size(); ++i) all[i] = i;
  table_ = support_table(all);
}

std::vector<char> Reasoner::derived(const Argument& a) const {
  std::vector<char> d(f_.literal_count(), 0);
  std::vector<char> fired(a.size(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (fired[k]) continue;
      SchemeIndex i = a.members()[k];
      if (!base_ok_[i]) continue;
      bool ready = true;
      for (LiteralId p : f_.premise_ids(i)) ready = ready && d[p];
      if (!ready) continue;
      fired[k] = 1;
      d[f_.position_id(i)] = 1;
      changed = true;
    }
  }
  return d;
}

std::vector<char> Reasoner::applicable(const Argument& a, const std::vector<char>& d) const {
  std::vector<char> out(f_.size(), 0);
  for (SchemeIndex i : a.members()) {
    if (!base_ok_[i]) continue;
    bool ready = true;
    for (LiteralId p : f_.premise_ids(i)) ready = ready && d[p];
    out[i] = ready ? 1 : 0;
  }
  return out;
}

bool Reasoner::supports(const Argument& a, const Literal& l) const {
  auto id = f_.literal_id(l);
  return id && derived(a)[*id];
}

bool Reasoner::conflict_free(const Argument& a) const {
  auto d = derived(a);
  for (LiteralId l = 0; l < f_.literal_count(); ++l)
    if (d[l] && d[f_.complement_id(l)]) return false;
  for (SchemeIndex i : a.members())
    for (SchemeIndex j : f_.conflicting(i))
      if (a.contains(j)) return false;
  return true;
}

Table Reasoner::support_table(const std::vector<SchemeIndex>& pool) const {
  Table t(f_.literal_count());
  std::vector<SchemeIndex> rules;
  for (SchemeIndex i : pool) {
    if (!base_ok_[i]) continue;
    if (f_.premise_ids(i).empty()) {
      Argument single({i});
      if (conflict_free(single)) insert_minimal(t[f_.position_id(i)], single);
    } else {
      rules.push_back(i);
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (SchemeIndex i : rules) {
      std::vector<const std::vector<Argument>*> lists;
      for (LiteralId p : f_.premise_ids(i)) lists.push_back(&t[p]);
      std::vector<Argument> found;
      for_each_union(lists, [&](const Argument& u) {
        Argument cand = u.merged(Argument({i}));
        if (conflict_free(cand)) found.push_back(std::move(cand));
      });
      for (const auto& cand : found)
        if (insert_minimal(t[f_.position_id(i)], cand)) changed = true;
    }
  }
  for (auto& list : t)
    std::sort(list.begin(), list.end(),
              [this](const Argument& a, const Argument& b) { return preferred(a, b); });
  return t;
}

std::vector<Argument> Reasoner::applicable_supports(SchemeIndex x) const {
  std::vector<Argument> out;
  if (!base_ok_[x]) return out;
  std::vector<const std::vector<Argument>*> lists;
  for (LiteralId p : f_.premise_ids(x)) lists.push_back(&table_[p]);
  auto add = [&](const Argument& u) {
    Argument cand = u.merged(Argument({x}));
    if (conflict_free(cand)) insert_minimal(out, cand);
  };
  if (lists.empty())
    add(Argument());
  else
    for_each_union(lists, add);
  std::sort(out.begin(), out.end(), [this](const Argument& a, const Argument& b) { return preferred(a, b); });
  return out;
}

bool Reasoner::preferred(const Argument& a, const Argument& b) const {
  auto ka = priority_key(f_, a), kb = priority_key(f_, b);
  if (ka != kb) return ka < kb;
  auto ia = argument_ids(f_, a), ib = argument_ids(f_, b);
  if (ia != ib) return ia < ib;
  return a < b;
}

std::vector<Argument> Reasoner::minimal_supports(const Literal& l) const {
  auto id = f_.literal_id(l);
  if (!id) return {};
  return table_[*id];
}

bool Reasoner::attacks(const Argument& a, const Argument& b) const {
  auto da = derived(a), db = derived(b);
  for (LiteralId l = 0; l < f_.literal_count(); ++l)
    if (da[l] && db[f_.complement_id(l)]) return true;
  auto pa = applicable(a, da), pb = applicable(b, db);
  for (SchemeIndex i : a.members()) {
    if (!pa[i]) continue;
    for (SchemeIndex j : f_.conflicting(i))
      if (b.contains(j) && pb[j]) return true;
  }
  return false;
}

bool Reasoner::defends(const Argument& a, const Argument& b) const {
  return defends_with(f_, a, support_table(a.members()), b, support_table(b.members()));
}

std::vector<Argument> Reasoner::minimal_attackers(const Argument& a) const {
  std::set<Argument> found;
  auto d = derived(a);
  for (LiteralId l = 0; l < f_.literal_count(); ++l)
    if (d[l])
      for (const auto& b : table_[f_.complement_id(l)]) found.insert(b);
  auto ap = applicable(a, d);
  for (SchemeIndex i : a.members()) {
    if (!ap[i]) continue;
    for (SchemeIndex j : f_.conflicting(i))
      for (const auto& b : applicable_supports(j)) found.insert(b);
  }
  std::vector<Argument> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [this](const Argument& x, const Argument& y) { return preferred(x, y); });
  return out;
}

bool Reasoner::is_admissible(const Argument& a) const {
  if (!conflict_free(a)) return false;
  for (const auto& b : minimal_attackers(a))
    if (!defends(a, b)) return false;
  return true;
}

namespace {

// Depth-first search over root extensions. A root that fails is remembered:
// the search below it is complete, so no admissible superset of it exists.
class ProofSearch {
 public:
  ProofSearch(const Reasoner& r, EngineOptions opts) : r_(r), f_(r.framework()), opts_(opts) {}

  bool run(const Argument& root, Argument& final_root) {
    if (failed_.contains(root)) return false;
    const std::size_t mark = trace_.size();
    for (const auto& b : r_.minimal_attackers(root)) {
      if (on_trace(b)) continue;
      if (defends(root, b)) {
        trace_.push_back(node(b, root, true));
        continue;
      }
      if (opts_.strictly_stronger_only && !strictly_stronger(b, root)) continue;
      for (const auto& d : candidates(root, b)) {
        trace_.push_back(node(b, d, false));
        if (run(root.merged(d), final_root)) return true;
        trace_.pop_back();
      }
      trace_.resize(mark);
      failed_.insert(root);
      return false;
    }
    final_root = root;
    return true;
  }

  // Counterarguments of root up to the first one it cannot answer by itself.
  std::vector<DialecticNode> explain_failure(const Argument& root) {
    std::vector<DialecticNode> out;
    for (const auto& b : r_.minimal_attackers(root)) {
      if (defends(root, b)) {
        out.push_back(node(b, root, true));
        continue;
      }
      DialecticNode n;
      n.attacker = b;
      n.status = TreeStatus::Acceptable;
      out.push_back(std::move(n));
      break;
    }
    return out;
  }

  std::vector<DialecticNode> take_trace() { return std::move(trace_); }

 private:
  const Table& table(const Argument& a) {
    auto it = tables_.find(a);
    if (it == tables_.end()) it = tables_.emplace(a, r_.support_table(a.members())).first;
    return it->second;
  }

  bool defends(const Argument& a, const Argument& b) {
    return defends_with(f_, a, table(a), b, table(b));
  }

  DialecticNode node(const Argument& attacker, const Argument& defense, bool self) {
    DialecticNode n;
    n.attacker = attacker;
    n.defense = defense;
    n.self_defense = self;
    n.strong = !defends(attacker, defense);
    n.status = n.strong ? TreeStatus::Defeated : TreeStatus::Acceptable;
    return n;
  }

  bool on_trace(const Argument& b) const {
    return std::any_of(trace_.begin(), trace_.end(),
                       [&](const DialecticNode& n) { return n.attacker == b; });
  }

  bool strictly_stronger(const Argument& b, const Argument& a) const {
    bool up = false, down = false;
    for (SchemeIndex x : b.members())
      for (SchemeIndex y : a.members()) {
        up = up || f_.stronger(x, y);
        down = down || f_.stronger(y, x);
      }
    return up && !down;
  }

  std::vector<Argument> candidates(const Argument& root, const Argument& b) {
    std::set<Argument> pool;
    auto db = r_.derived(b);
    for (LiteralId l = 0; l < f_.literal_count(); ++l)
      if (db[l])
        for (const auto& d : r_.minimal_supports(f_.literal(f_.complement_id(l)))) pool.insert(d);
    auto ab = r_.applicable(b, db);
    for (SchemeIndex y : b.members()) {
      if (!ab[y]) continue;
      for (SchemeIndex x : f_.conflicting(y))
        for (const auto& d : r_.applicable_supports(x)) pool.insert(d);
    }
    std::vector<Argument> out;
    for (const auto& d : pool) {
      if (d.subset_of(root)) continue;
      if (!r_.conflict_free(root.merged(d))) continue;
      if (!defends(d, b)) continue;
      out.push_back(d);
    }
    std::sort(out.begin(), out.end(), [this](const Argument& x, const Argument& y) {
      if (x.size() != y.size()) return x.size() < y.size();
      return r_.preferred(x, y);
    });
    return out;
  }

  const Reasoner& r_;
  const Framework& f_;
  EngineOptions opts_;
  std::map<Argument, Table> tables_;
  std::set<Argument> failed_;
  std::vector<DialecticNode> trace_;
};

}  // namespace

DialecticTree Reasoner::prove(const Literal& l) const {
  DialecticTree tree{l, {}, {}, {}, TreeStatus::Exhausted};
  auto roots = minimal_supports(l);
  if (roots.empty()) return tree;
  ProofSearch search(*this, opts_);
  for (const auto& root : roots) {
    Argument final_root;
    if (search.run(root, final_root)) {
      tree.support = root;
      tree.root = final_root;
      tree.children = search.take_trace();
      tree.status = TreeStatus::Acceptable;
      return tree;
    }
  }
  tree.support = roots.front();
  tree.root = roots.front();
  tree.children = search.explain_failure(roots.front());
  return tree;
}

QueryVerdict Reasoner::query(const Literal& l) const {
  QueryVerdict v{l};
  auto pos = prove(l);
  auto neg = prove(complement(l));
  v.credulous_pos = pos.status == TreeStatus::Acceptable;
  v.credulous_neg = neg.status == TreeStatus::Acceptable;
  v.classification = classify(v.credulous_pos, v.credulous_neg);
  if (v.credulous_pos) v.pos_witness = std::move(pos);
  if (v.credulous_neg) v.neg_witness = std::move(neg);
  return v;
}

bool supports(const Argument& a, const Literal& l, const Framework& f, const CognitiveState& s) {
  return Reasoner(f, s).supports(a, l);
}

std::vector<Argument> minimal_supports(const Literal& l, const Framework& f, const CognitiveState& s) {
  return Reasoner(f, s).minimal_supports(l);
}

bool attacks(const Argument& a, const Argument& b, const Framework& f, const CognitiveState& s) {
  return Reasoner(f, s).attacks(a, b);
}

bool defends(const Argument& a, const Argument& b, const Framework& f, const CognitiveState& s) {
  return Reasoner(f, s).defends(a, b);
}

std::vector<Argument> minimal_attackers(const Argument& a, const Framework& f, const CognitiveState& s) {
  return Reasoner(f, s).minimal_attackers(a);
}

bool is_admissible(const Argument& a, const Framework& f, const CognitiveState& s) {
  return Reasoner(f, s).is_admissible(a);
}

DialecticTree prove(const Literal& l, const Framework& f, const CognitiveState& s, EngineOptions opts) {
  return Reasoner(f, s, opts).prove(l);
}

QueryVerdict query(const Literal& l, const Framework& f, const CognitiveState& s, EngineOptions opts) {
  return Reasoner(f, s, opts).query(l);
}

}  // namespace cognarg
