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

#include <set>

#include "cognarg/compiler.hpp"
#include "cognarg/oracle.hpp"

using namespace cognarg;

namespace {

const Literal e = Literal::pos("e"), l = Literal::pos("l");

// Counts conflict-free subsets by recomputing the closure of each subset
// from scratch: derived literals never include a complementary pair and no
// explicitly conflicting pair is applicable together.
std::size_t count_conflict_free(const Framework& f, const CognitiveState& s) {
  std::size_t n = 0;
  for (std::uint32_t m = 1; m < (1u << f.size()); ++m) {
    std::set<Literal> derived;
    std::vector<char> fired(f.size(), 0);
    for (bool grew = true; grew;) {
      grew = false;
      for (SchemeIndex i = 0; i < f.size(); ++i) {
        if (!(m >> i & 1) || fired[i]) continue;
        const Scheme& sc = f.scheme(i);
        bool ok = sc.kind == SchemeKind::Fact  ? s.has_fact(sc.position)
                  : sc.kind == SchemeKind::Hyp ? s.is_aware(sc.position.atom)
                                               : true;
        for (const auto& p : sc.premises) ok = ok && derived.contains(p);
        if (ok) {
          fired[i] = 1;
          derived.insert(sc.position);
          grew = true;
        }
      }
    }
    bool cf = true;
    for (const auto& d : derived) cf = cf && !derived.contains(complement(d));
    for (SchemeIndex i = 0; i < f.size(); ++i)
      for (SchemeIndex j : f.conflicting(i)) cf = cf && !(fired[i] && fired[j]);
    n += cf;
  }
  return n;
}

}  // namespace

TEST_CASE("all_arguments enumerates conflict-free subsets") {
  auto s = make_state({}, {Atom("a")});
  Framework f = compile_schemes({}, s, {});
  auto args = oracle::all_arguments(f, s);
  CHECK(args.size() == 2);

  Framework empty;
  CHECK(oracle::all_arguments(empty, make_state({}, {})).empty());
}

TEST_CASE("Group I framework subset count") {
  auto s = make_state({e}, {Atom("e"), Atom("l")});
  Framework f = compile_schemes({{"c1", {e}, l, Interpretation::SufficientAndNecessary}}, s, {});
  CHECK(f.size() == 9);  // fact, four hyps, suff_p, necc_p, sec_suff_p, sec_necc_p
  CHECK(oracle::all_arguments(f, s).size() == count_conflict_free(f, s));
}

TEST_CASE("cap is enforced") {
  std::set<Atom> aware;
  for (int i = 0; i < 13; ++i) aware.emplace("a" + std::to_string(i));
  auto s = make_state({}, aware);
  Framework f = compile_schemes({}, s, {});  // 26 hyps
  try {
    oracle::Oracle o(f, s);
    FAIL("expected FrameworkTooLarge");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::FrameworkTooLarge);
  }
    CHECK_THROWS_AS(oracle::Oracle(f, s, 40), Error);  // beyond the hard cap
}

TEST_CASE("milk example through the oracle") {
  const Literal buy = Literal::pos("buy");
  std::vector<Conditional> kb{{"c1", {Literal::pos("need")}, buy, Interpretation::SufficientOnly},
                              {"c2", {Literal::pos("asks")}, buy, Interpretation::SufficientOnly},
                              {"c3", {Literal::pos("money")}, buy, Interpretation::NecessaryOnly}};
  std::set<Atom> aware{Atom("need"), Atom("asks"), Atom("buy"), Atom("money")};

  auto s2 = make_state({Literal::pos("need"), Literal::neg("money")}, aware);
  Framework f2 = compile_schemes(kb, s2, {});
  CHECK(oracle::oracle_admissible(argument_from_ids(f2, {"fact(not money)", "necc_p(not money=>not buy)"}), f2, s2,
                                  oracle::kHardCap));
  CHECK(oracle::oracle_query(complement(buy), f2, s2, oracle::kHardCap).classification ==
        Classification::SkepticalYes);

  auto s1 = make_state({Literal::pos("need")}, aware);
  Framework f1 = compile_schemes(kb, s1, {});
  auto v = oracle::oracle_query(buy, f1, s1, oracle::kHardCap);
  CHECK(v.credulous_pos);
  CHECK(v.credulous_neg);
  CHECK(v.classification == Classification::CredulousBoth);
  CHECK(oracle::oracle_query_serial(buy, f1, s1, oracle::kHardCap).classification == v.classification);
}

TEST_CASE("an undefended hypothesis against a fact is not admissible") {
  auto s = make_state({complement(e)}, {Atom("e")});
  Framework f = compile_schemes({}, s, {});
  CHECK_FALSE(oracle::oracle_admissible(argument_from_ids(f, {"hyp(e)"}), f, s));
  CHECK(oracle::oracle_admissible(argument_from_ids(f, {"fact(not e)"}), f, s));
}
