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

// Controlled natural language.
//
//   whenever <phrase> [and <phrase>]* then <phrase>   sufficient condition
//   when <phrase> [and <phrase>]* then <phrase>       necessary condition,
//                                                     written negatively
//   fact: <phrase>
//   aware: <phrase>
//   ? <phrase>
//
// A phrase is negated by one standalone "not" anywhere in it ("not the
// library is open", "the library is not open"); an auxiliary do/does/did
// right before it is dropped. Keywords are case-insensitive; a trailing
// period is ignored.

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cognarg/compiler.hpp"
#include "cognarg/core.hpp"
#include "cognarg/engine.hpp"

namespace cognarg::cnl {

struct ParseError : Error {
  ParseError(std::size_t line, std::size_t column, std::string message, std::string expected);

  std::size_t line;    // 1-based; 0 when parsing a lone statement
  std::size_t column;  // 1-based
  std::string message;
  std::string expected;
};

struct WheneverRule {
  std::vector<Literal> condition;
  Literal consequent;
};

// Stored in positive orientation: "when not X then not Y" holds X => Y.
struct WhenRule {
  std::vector<Literal> condition;
  Literal consequent;
};

struct FactAssertion {
  Literal literal;
};

struct AwarenessDecl {
  Atom atom;
};

struct Query {
  Literal literal;
};

using Statement = std::variant<WheneverRule, WhenRule, FactAssertion, AwarenessDecl, Query>;

Statement parse_statement(std::string_view text);

// Lowercase, drop articles that precede another word, collapse whitespace,
// join with underscores.
Atom canonicalize_phrase(std::string_view text);

// A phrase with optional negation, as used in queries and fact lists.
Literal parse_phrase_literal(std::string_view text);

struct ParsedLine {
  std::size_t line;
  std::string text;
  Statement statement;
};

struct StatementFile {
  std::vector<ParsedLine> lines;
  std::vector<ParseError> errors;
};

// One statement per line; blank lines and '#' comments are skipped. Errors
// are collected rather than thrown.
StatementFile parse_file(std::string_view content);

// Conditionals of the rule statements, numbered c1, c2, ... in order of first
// appearance. A Whenever and a When rule over the same condition and
// consequent fold into one SufficientAndNecessary conditional.
std::vector<Conditional> conditionals_of(const std::vector<Statement>& statements);

// Conditionals, facts and awareness of a statement list; queries are ignored.
KnowledgeBase knowledge_base_of(const std::vector<Statement>& statements,
                                const ReasonerProfile& profile = {});

std::string_view answer_word(Classification c);

// "Yes" / "No" / "Maybe" / "Unknown", then one paragraph per acceptable side.
std::string render_explanation(const QueryVerdict& v, const Framework& f);

}  // namespace cognarg::cnl
