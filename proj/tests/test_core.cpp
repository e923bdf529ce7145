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

#include "cognarg/core.hpp"

using namespace cognarg;

TEST_CASE("atoms are normalized") {
  CHECK(Atom("  Library   Open ").name() == "library open");
  CHECK(Atom("essay") == Atom("ESSAY"));
  CHECK_THROWS_AS(Atom("   "), Error);
  CHECK(Atom("exo::l+").is_exo());
  CHECK_FALSE(Atom("exotic").is_exo());
}

TEST_CASE("complement flips the sign and is an involution") {
  CHECK(complement(Literal::pos("essay")) == Literal::neg("essay"));
  CHECK(complement(Literal::neg("library")) == Literal::pos("library"));
  CHECK(complement(complement(Literal::pos("open"))) == Literal::pos("open"));

  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    Literal l{Atom("a" + std::to_string(rng() % 50)), rng() & 1 ? Sign::Positive : Sign::Negative};
    CHECK(complement(complement(l)) == l);
    CHECK(complement(l) != l);
    CHECK(complement(l).key() != l.key());
  }
}

TEST_CASE("literal text form") {
  CHECK(Literal::neg("open").text() == "not open");
  CHECK(parse_literal("not open") == Literal::neg("open"));
  CHECK(parse_literal(" open ") == Literal::pos("open"));
  CHECK(Literal::pos("l").key() == "l+");
  CHECK(Literal::neg("l").key() == "l-");
}

TEST_CASE("make_state closes awareness over facts") {
  auto g1 = make_state({Literal::pos("e")}, {Atom("e"), Atom("l")});
  CHECK(g1.has_fact(Literal::pos("e")));
  CHECK(g1.is_aware(Atom("l")));

  auto s2 = make_state({Literal::pos("need"), Literal::neg("money")},
                       {Atom("need"), Atom("asks"), Atom("buy"), Atom("money")});
  CHECK(s2.awareness().size() == 4);
  CHECK(s2.has_fact(Literal::neg("money")));

  auto closed = make_state({Literal::pos("e")}, {});
  CHECK(closed.awareness() == std::set<Atom>{Atom("e")});
}

TEST_CASE("make_state rejects inconsistent and exogenous facts") {
  try {
    make_state({Literal::pos("e"), Literal::neg("e")}, {});
    FAIL("expected InconsistentFacts");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InconsistentFacts);
  }
  try {
    make_state({Literal::pos("exo::l+")}, {});
    FAIL("expected ExoFact");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ExoFact);
  }
}

TEST_CASE("exo literals are minted deterministically") {
  CHECK(mint_exo_literal(Literal::pos("l")) == Literal::pos("exo::l+"));
  CHECK(mint_exo_literal(Literal::neg("l")) == Literal::pos("exo::l-"));
  CHECK(mint_exo_literal(Literal::pos("l")) == mint_exo_literal(Literal::pos("l")));
  CHECK(mint_exo_literal(Literal::pos("l")) != mint_exo_literal(Literal::neg("l")));
  try {
    mint_exo_literal(Literal::pos("exo::l+"));
    FAIL("expected NestedExo");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NestedExo);
  }
}

TEST_CASE("conditionals are validated") {
  CHECK_NOTHROW(validate({"c", {Literal::pos("e")}, Literal::pos("l"), Interpretation::SufficientOnly}));
  CHECK_THROWS_AS(validate({"c", {}, Literal::pos("l"), Interpretation::SufficientOnly}), Error);
  CHECK_THROWS_AS(validate({"c", {Literal::neg("l")}, Literal::pos("l"), Interpretation::SufficientOnly}), Error);
}

TEST_CASE("framework validation") {
  std::vector<Scheme> s{{"hyp(a)", SchemeKind::Hyp, {}, Literal::pos("a"), "state"},
                        {"hyp(not a)", SchemeKind::Hyp, {}, Literal::neg("a"), "state"},
                        {"hyp(b)", SchemeKind::Hyp, {}, Literal::pos("b"), "state"}};
  CHECK_NOTHROW(Framework(s, {}, {{"hyp(a)", "hyp(not a)"}}));
  CHECK_THROWS_AS(Framework(s, {}, {{"hyp(a)", "hyp(a)"}}), Error);
  CHECK_THROWS_AS(Framework(s, {}, {{"hyp(a)", "hyp(b)"}}), Error);  // not in conflict
  CHECK_THROWS_AS(Framework(s, {}, {{"hyp(a)", "hyp(not a)"}, {"hyp(not a)", "hyp(a)"}}), Error);
  CHECK_THROWS_AS(Framework(s, {}, {{"hyp(a)", "nope"}}), Error);

  auto dup = s;
  dup.push_back(s.front());
  CHECK_THROWS_AS(Framework(dup, {}, {}), Error);

  Framework f(s, {}, {});
  CHECK(f.in_conflict(f.index_of("hyp(a)"), f.index_of("hyp(not a)")));
  CHECK_FALSE(f.in_conflict(f.index_of("hyp(a)"), f.index_of("hyp(b)")));
  CHECK(f.literal_id(Literal::neg("b")).has_value());  // complements are interned
}

TEST_CASE("arguments are sorted sets") {
  Argument a({3, 1, 3, 2});
  CHECK(a.members() == std::vector<SchemeIndex>{1, 2, 3});
  CHECK(Argument({1}).subset_of(a));
  CHECK_FALSE(a.subset_of(Argument({1})));
  CHECK(Argument({1}).merged(Argument({4})) == Argument({1, 4}));
}
