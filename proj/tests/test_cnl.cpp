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

#include "cognarg/cnl.hpp"
#include "cognarg/serialize.hpp"

using namespace cognarg;
using namespace cognarg::cnl;

namespace {

const Literal essay = Literal::pos("she_has_essay_to_finish");
const Literal library = Literal::pos("she_will_study_late_in_library");
const Literal open = Literal::pos("library_is_open");

const char* kGroup3 =
    "Whenever she has an essay to finish then she will study late in the library\n"
    "When the library is not open then she will not study late in the library\n"
    "When she has not an essay to finish then she will not study late in the library\n";

}  // namespace

TEST_CASE("whenever and when rules") {
  auto w = std::get<WheneverRule>(
      parse_statement("Whenever she has an essay to finish then she will study late in the library"));
  CHECK(w.condition == std::vector<Literal>{essay});
  CHECK(w.consequent == library);
  auto c = conditionals_of({w});
  REQUIRE(c.size() == 1);
  CHECK(c[0].interpretation == Interpretation::SufficientOnly);
  CHECK(c[0].id == "c1");

  auto n = std::get<WhenRule>(parse_statement("When the library is not open then she will not study late in the library"));
  CHECK(n.condition == std::vector<Literal>{open});
  CHECK(n.consequent == library);
  auto cn = conditionals_of({n});
  CHECK(cn[0].interpretation == Interpretation::NecessaryOnly);
}

TEST_CASE("when and whenever on the same link merge") {
  StatementFile f = parse_file(kGroup3);
  REQUIRE(f.errors.empty());
  std::vector<Statement> st;
  for (const auto& pl : f.lines) st.push_back(pl.statement);
  auto c = conditionals_of(st);
  REQUIRE(c.size() == 2);
  CHECK(c[0].condition == std::vector<Literal>{essay});
  CHECK(c[0].interpretation == Interpretation::SufficientAndNecessary);
  CHECK(c[1].condition == std::vector<Literal>{open});
  CHECK(c[1].interpretation == Interpretation::NecessaryOnly);
}

TEST_CASE("conjunctive conditions") {
  auto w = std::get<WheneverRule>(parse_statement("whenever I need milk and I have enough money then I will buy milk"));
  CHECK(w.condition.size() == 2);
  CHECK(w.condition[1] == Literal::pos("i_have_enough_money"));
}

TEST_CASE("facts, awareness and queries") {
  CHECK(std::get<FactAssertion>(parse_statement("fact: she has an essay to finish")).literal == essay);
  CHECK(std::get<FactAssertion>(parse_statement("Fact: not she has an essay to finish.")).literal == complement(essay));
  CHECK(std::get<AwarenessDecl>(parse_statement("aware: the library is open")).atom == open.atom);
  CHECK(std::get<Query>(parse_statement("? she will study late in the library")).literal == library);
  CHECK(std::get<Query>(parse_statement("? she will not study late in the library")).literal == complement(library));
  CHECK(std::get<FactAssertion>(parse_statement("fact: I do not have enough money")).literal ==
        Literal::neg("i_have_enough_money"));
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_statement("whenever x then x"), ParseError);
  CHECK_THROWS_AS(parse_statement("whenever then y"), ParseError);
  CHECK_THROWS_AS(parse_statement("whenever x y"), ParseError);
  CHECK_THROWS_AS(parse_statement("aware: not x"), ParseError);
  CHECK_THROWS_AS(parse_statement("fact: not not x"), ParseError);
  CHECK_THROWS_AS(parse_statement("fact: exo::x"), ParseError);
  try {
    parse_statement("whenever x then");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.column > 1);
    CHECK_FALSE(e.expected.empty());
  }
  StatementFile f = parse_file("whenever a then b\n\n# comment\nbogus\nfact: a\n");
  REQUIRE(f.errors.size() == 1);
  CHECK(f.errors[0].line == 4);
  CHECK(f.errors[0].column == 1);
  CHECK(f.lines.size() == 2);
}

TEST_CASE("phrase canonicalization") {
  CHECK(canonicalize_phrase("She has an Essay to finish").name() == "she_has_essay_to_finish");
  CHECK(canonicalize_phrase("  the   library  stays OPEN ").name() == "library_stays_open");
  CHECK(canonicalize_phrase("a b") == canonicalize_phrase("A  B"));
  CHECK_THROWS_AS(canonicalize_phrase("   "), ParseError);
  CHECK(canonicalize_phrase("a").name() == "a");
  CHECK(canonicalize_phrase("café ouvert").name() == "café_ouvert");
}

TEST_CASE("parsing never fails other than with ParseError") {
  std::mt19937_64 rng(8);
  const std::vector<std::string> words{"whenever", "when", "then", "and", "not", "fact:", "aware:", "?",
                                       "x", "y", "the", ":", ".", "#", "z", "fact", "\t"};
  for (int i = 0; i < 3000; ++i) {
    std::string line;
    const int n = rng() % 8;
    for (int k = 0; k < n; ++k) line += words[rng() % words.size()] + (rng() % 4 ? " " : "");
    try {
      parse_statement(line);
    } catch (const ParseError&) {
    }
  }
  CHECK(true);
}

TEST_CASE("statement files build a knowledge base that round-trips") {
  StatementFile f = parse_file(std::string(kGroup3) + "fact: she has an essay to finish\n");
  std::vector<Statement> st;
  for (const auto& pl : f.lines) st.push_back(pl.statement);
  KnowledgeBase kb = knowledge_base_of(st);
  CHECK(kb.state.has_fact(essay));
  CHECK(kb.state.is_aware(open.atom));
  Framework fw = compile(kb);
  KnowledgeBase back = kb_from_json(parse_json(dump(kb_to_json(kb))));
  CHECK(back == kb);
  CHECK(compile(back) == fw);
  CHECK(framework_from_json(framework_to_json(fw)) == fw);
}

TEST_CASE("explanations start with the answer word") {
  StatementFile f = parse_file(std::string(kGroup3) + "fact: she has an essay to finish\n");
  std::vector<Statement> st;
  for (const auto& pl : f.lines) st.push_back(pl.statement);
  KnowledgeBase kb = knowledge_base_of(st);
  Framework fw = compile(kb);
  auto v = query(library, fw, kb.state);
  std::string text = render_explanation(v, fw);
  CHECK(text.rfind("Maybe", 0) == 0);
  CHECK(text.find(library.atom.name() + " is supported because") != std::string::npos);
  CHECK(text.find("not " + library.atom.name() + " is supported because") != std::string::npos);

  auto yes = query(essay, fw, kb.state);
  CHECK(render_explanation(yes, fw).rfind("Yes", 0) == 0);

  QueryVerdict none{Literal::pos("x")};
  CHECK(render_explanation(none, fw) == "Unknown");
  CHECK(answer_word(Classification::SkepticalNo) == "No");
}
