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

#include "cognarg/serialize.hpp"

#include <set>

#include "cognarg/cnl.hpp"

namespace cognarg {

namespace {

void check_version(const Json& j, std::string_view what) {
  if (!j.is_object() || !j.contains("v") || j.at("v") != kFormatVersion)
    throw Error(ErrorCode::Format, std::string(what) + ": missing or unsupported \"v\"");
}

Json literals(const std::vector<Literal>& ls) {
  Json out = Json::array();
  for (const auto& l : ls) out.push_back(l.text());
  return out;
}

std::vector<Literal> literals_from(const Json& j) {
  std::vector<Literal> out;
  for (const auto& x : j) out.push_back(parse_literal(x.get<std::string>()));
  return out;
}

Json ids(const Framework& f, const Argument& a) {
  Json out = Json::array();
  for (const auto& id : argument_ids(f, a)) out.push_back(id);
  return out;
}

template <typename Fn>
auto guarded(std::string_view what, Fn&& fn) {
  try {
    return fn();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::Format, std::string(what) + ": " + e.what());
  }
}

}  // namespace

Json profile_to_json(const ReasonerProfile& p) {
  Json overrides = Json::object();
  for (const auto& [id, interp] : p.interpretation_overrides) overrides[id] = to_string(interp);
  return Json{{"mode", to_string(p.mode)},
              {"allow_exogenous", p.allow_exogenous},
              {"auto_demote_necessity", p.auto_demote_necessity},
              {"overrides", overrides}};
}

ReasonerProfile profile_from_json(const Json& j) {
  return guarded("profile", [&] {
    ReasonerProfile p;
    p.mode = parse_mode(j.value("mode", std::string("predictive")));
    p.allow_exogenous = j.value("allow_exogenous", false);
    p.auto_demote_necessity = j.value("auto_demote_necessity", true);
    if (j.contains("overrides"))
      for (const auto& [id, interp] : j.at("overrides").items())
        p.interpretation_overrides[id] = parse_interpretation(interp.get<std::string>());
    return p;
  });
}

Json kb_to_json(const KnowledgeBase& kb) {
  Json atoms = Json::array();
  for (const auto& a : kb.atoms) atoms.push_back(a.name());
  Json conds = Json::array();
  for (const auto& c : kb.conditionals)
    conds.push_back(Json{{"id", c.id},
                         {"condition", literals(c.condition)},
                         {"consequent", c.consequent.text()},
                         {"interpretation", to_string(c.interpretation)}});
  Json facts = Json::array();
  for (const auto& f : kb.state.facts()) facts.push_back(f.text());
  Json aware = Json::array();
  for (const auto& a : kb.state.awareness()) aware.push_back(a.name());
  return Json{{"v", kFormatVersion},
              {"atoms", atoms},
              {"conditionals", conds},
              {"state", Json{{"facts", facts}, {"awareness", aware}}},
              {"profile", profile_to_json(kb.profile)}};
}

KnowledgeBase kb_from_json(const Json& j) {
  check_version(j, "knowledge base");
  return guarded("knowledge base", [&] {
    KnowledgeBase kb;
    for (const auto& a : j.at("atoms")) kb.atoms.emplace_back(a.get<std::string>());
    for (const auto& c : j.at("conditionals")) {
      Conditional cond{c.at("id").get<std::string>(), literals_from(c.at("condition")),
                       parse_literal(c.at("consequent").get<std::string>()),
                       parse_interpretation(c.at("interpretation").get<std::string>())};
      validate(cond);
      kb.conditionals.push_back(std::move(cond));
    }
    std::set<Literal> facts;
    for (const auto& f : j.at("state").at("facts")) facts.insert(parse_literal(f.get<std::string>()));
    std::set<Atom> aware;
    for (const auto& a : j.at("state").at("awareness")) aware.emplace(a.get<std::string>());
    kb.state = make_state(std::move(facts), std::move(aware));
    kb.profile = profile_from_json(j.at("profile"));
    return kb;
  });
}

Json framework_to_json(const Framework& f) {
  Json schemes = Json::array();
  for (const auto& s : f.schemes())
    schemes.push_back(Json{{"id", s.id},
                           {"kind", to_string(s.kind)},
                           {"premises", literals(s.premises)},
                           {"position", s.position.text()},
                           {"source", s.source}});
  auto pairs = [](const std::vector<SchemePair>& ps) {
    Json out = Json::array();
    for (const auto& [a, b] : ps) out.push_back(Json::array({a, b}));
    return out;
  };
  return Json{{"v", kFormatVersion},
              {"schemes", schemes},
              {"scheme_conflicts", pairs(f.scheme_conflict_ids())},
              {"stronger", pairs(f.stronger_ids())}};
}

Framework framework_from_json(const Json& j) {
  check_version(j, "framework");
  return guarded("framework", [&] {
    std::vector<Scheme> schemes;
    for (const auto& s : j.at("schemes"))
      schemes.push_back({s.at("id").get<std::string>(), parse_scheme_kind(s.at("kind").get<std::string>()),
                         literals_from(s.at("premises")), parse_literal(s.at("position").get<std::string>()),
                         s.at("source").get<std::string>()});
    auto pairs = [](const Json& ps) {
      std::vector<SchemePair> out;
      for (const auto& p : ps) out.emplace_back(p.at(0).get<std::string>(), p.at(1).get<std::string>());
      return out;
    };
    return Framework(std::move(schemes), pairs(j.at("scheme_conflicts")), pairs(j.at("stronger")));
  });
}

Json tree_to_json(const DialecticTree& t, const Framework& f) {
  Json nodes = Json::array();
  Json edges = Json::array();
  nodes.push_back(Json{{"id", 0}, {"role", "root"}, {"members", ids(f, t.root)}, {"status", to_string(t.status)}});
  int next = 1;
  for (const auto& n : t.children) {
    const int attacker = next++;
    nodes.push_back(Json{{"id", attacker}, {"role", "attacker"}, {"members", ids(f, n.attacker)},
                         {"status", to_string(n.status)}});
    edges.push_back(Json{{"from", attacker}, {"to", 0}, {"type", "attack"}, {"self", false}});
    if (!n.defense) continue;
    int defender = 0;
    if (!n.self_defense) {
      defender = next++;
      nodes.push_back(Json{{"id", defender}, {"role", "defense"}, {"members", ids(f, *n.defense)},
                           {"status", to_string(TreeStatus::Acceptable)}});
    }
    edges.push_back(Json{{"from", defender}, {"to", attacker}, {"type", n.strong ? "strong" : "defense"},
                         {"self", n.self_defense}});
  }
  return Json{{"v", kFormatVersion},
              {"claim", t.claim.text()},
              {"status", to_string(t.status)},
              {"support", ids(f, t.support)},
              {"root", ids(f, t.root)},
              {"nodes", nodes},
              {"edges", edges}};
}

Json verdict_to_json(const QueryVerdict& v, const Framework& f) {
  auto side = [&](const std::optional<DialecticTree>& t) { return t ? tree_to_json(*t, f) : Json(nullptr); };
  return Json{{"v", kFormatVersion},
              {"literal", v.literal.text()},
              {"credulous_pos", v.credulous_pos},
              {"credulous_neg", v.credulous_neg},
              {"classification", to_string(v.classification)},
              {"answer", cnl::answer_word(v.classification)},
              {"witnesses", Json{{"pos", side(v.pos_witness)}, {"neg", side(v.neg_witness)}}}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::Format, std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace cognarg
