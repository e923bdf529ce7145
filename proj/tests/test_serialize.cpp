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

#include <doctest.h>

#include <random>

#include "cognarg/engine.hpp"
#include "cognarg/serialize.hpp"
#include "random_cases.hpp"

using namespace cognarg;

namespace {

const Literal e = Literal::pos("e"), l = Literal::pos("l"), o = Literal::pos("o");

KnowledgeBase group3() {
  KnowledgeBase kb;
  kb.conditionals = {{"c1", {e}, l, Interpretation::SufficientAndNecessary},
                     {"c2", {o}, l, Interpretation::NecessaryOnly}};
  kb.state = make_state({e}, {Atom("e"), Atom("l"), Atom("o")});
  kb.atoms = vocabulary(kb.conditionals, kb.state);
  return kb;
}

}  // namespace

TEST_CASE("profiles round-trip") {
  ReasonerProfile p;
  p.mode = Mode::Explanatory;
  p.allow_exogenous = true;
  p.auto_demote_necessity = false;
  p.interpretation_overrides["c2"] = Interpretation::SufficientOnly;
  auto j = profile_to_json(p);
  CHECK(j.at("mode") == "explanatory");
  CHECK(profile_from_json(j) == p);
  CHECK(profile_from_json(Json::object()) == ReasonerProfile{});
  CHECK_THROWS_AS(profile_from_json(Json{{"mode", "sideways"}}), Error);
}

TEST_CASE("knowledge bases and frameworks round-trip byte for byte") {
  auto kb = group3();
  const std::string text = dump(kb_to_json(kb));
  CHECK(text.back() == '\n');
  CHECK(dump(kb_to_json(kb_from_json(parse_json(text)))) == text);

  Framework f = compile(kb);
  const std::string ftext = dump(framework_to_json(f));
  Framework back = framework_from_json(parse_json(ftext));
  CHECK(back == f);
  CHECK(dump(framework_to_json(back)) == ftext);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    auto c = testing::random_case(rng);
    CHECK(kb_from_json(parse_json(dump(kb_to_json(c.kb)))) == c.kb);
    CHECK(framework_from_json(parse_json(dump(framework_to_json(c.framework)))) == c.framework);
  }
  for (int i = 0; i < 100; ++i) {
    auto s = make_state({Literal::pos("a0")}, {Atom("a0"), Atom("a1"), Atom("a2")});
    Framework raw = testing::random_raw_framework(rng, s, 3, 8);
    CHECK(framework_from_json(framework_to_json(raw)) == raw);
  }
}

TEST_CASE("version and shape are checked") {
  auto j = kb_to_json(group3());
  j["v"] = 2;
  CHECK_THROWS_AS(kb_from_json(j), Error);
  j.erase("v");
  CHECK_THROWS_AS(kb_from_json(j), Error);
  auto f = framework_to_json(compile(group3()));
  f["schemes"][0]["kind"] = "Nonsense";
  CHECK_THROWS_AS(framework_from_json(f), Error);
  auto g = framework_to_json(compile(group3()));
  g["stronger"].push_back(Json::array({"nope", "hyp(e)"}));
  CHECK_THROWS_AS(framework_from_json(g), Error);
  try {
    parse_json("{\"v\": 1,");
    FAIL("expected Error");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::Format);
  }
}

TEST_CASE("verdict and tree documents") {
  auto kb = group3();
  Framework f = compile(kb);
  auto v = query(l, f, kb.state);
  auto j = verdict_to_json(v, f);
  CHECK(j.at("v") == 1);
  CHECK(j.at("literal") == "l");
  CHECK(j.at("classification") == std::string(to_string(Classification::CredulousBoth)));
  CHECK(j.at("answer") == "Maybe");
  const auto& pos = j.at("witnesses").at("pos");
  REQUIRE(pos.is_object());
  CHECK(pos.at("claim") == "l");
  CHECK(pos.at("nodes").at(0).at("role") == "root");
  CHECK(pos.at("nodes").at(0).at("id") == 0);
  for (const auto& edge : pos.at("edges")) {
    CHECK(edge.contains("from"));
    CHECK(edge.contains("to"));
    const std::string type = edge.at("type");
    CHECK((type == "attack" || type == "defense" || type == "strong"));
  }
  CHECK(pos.at("edges").size() >= 1);

  auto none = verdict_to_json(query(Literal::pos("zzz"), f, kb.state), f);
  CHECK(none.at("witnesses").at("pos").is_null());
  CHECK(none.at("answer") == "Unknown");
}
