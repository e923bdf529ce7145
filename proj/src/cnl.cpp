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

#include "cognarg/cnl.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace cognarg::cnl {

ParseError::ParseError(std::size_t line_, std::size_t column_, std::string message_,
                       std::string expected_)
    : Error(ErrorCode::Format,
            (line_ ? "line " + std::to_string(line_) + ", " : std::string()) + "column " +
                std::to_string(column_) + ": " + message_ +
                (expected_.empty() ? std::string() : " (expected " + expected_ + ")")),
      line(line_),
      column(column_),
      message(std::move(message_)),
      expected(std::move(expected_)) {}

namespace {

struct Token {
  std::string word;  // lowercased
  std::size_t column;
};

bool word_char(char c) {
  auto u = static_cast<unsigned char>(c);
  return std::isalnum(u) || c == '_' || c == '-' || c == '\'' || u >= 0x80;
}

std::vector<Token> tokenize(std::string_view text, std::size_t offset) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    std::string word;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) {
      if (!word_char(text[i]))
        throw ParseError(0, offset + i + 1, std::string("unexpected character '") + text[i] + "'",
                         "a word");
      word.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(text[i]))));
      ++i;
    }
    out.push_back({std::move(word), offset + start + 1});
  }
  return out;
}

bool is_article(std::string_view w) { return w == "a" || w == "an" || w == "the"; }

std::string join_words(const std::vector<Token>& words) {
  std::string name;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const Token& t = words[i];
    // An article is dropped only before another word, so "a" can name an atom.
    if (is_article(t.word) && i + 1 < words.size()) continue;
    if (!name.empty()) name += '_';
    name += t.word;
  }
  return name;
}

using TokenSpan = std::vector<Token>;

Literal phrase_literal(const TokenSpan& words, std::size_t column, bool allow_negation) {
  TokenSpan kept;
  std::size_t negations = 0;
  for (const auto& t : words) {
    if (t.word == "not") {
      if (!allow_negation) throw ParseError(0, t.column, "negation is not allowed here", "a phrase");
      if (++negations > 1) throw ParseError(0, t.column, "double negation is not supported", "a phrase");
      // "I do not have" names the same atom as "I have".
      if (!kept.empty() && (kept.back().word == "do" || kept.back().word == "does" || kept.back().word == "did"))
        kept.pop_back();
      continue;
    }
    kept.push_back(t);
  }
  std::string name = join_words(kept);
  if (name.empty()) throw ParseError(0, column, "empty phrase", "a phrase");
  Atom atom(name);
  return {atom, negations ? Sign::Negative : Sign::Positive};
}

// Splits tokens on a keyword; the column of each piece is kept for messages.
std::vector<std::pair<TokenSpan, std::size_t>> split_on(const TokenSpan& tokens, std::string_view kw,
                                                         std::size_t column) {
  std::vector<std::pair<TokenSpan, std::size_t>> parts;
  TokenSpan cur;
  std::size_t cur_col = column;
  for (const auto& t : tokens) {
    if (t.word == kw) {
      parts.emplace_back(std::move(cur), cur_col);
      cur.clear();
      cur_col = t.column + t.word.size() + 1;
      continue;
    }
    if (cur.empty()) cur_col = t.column;
    cur.push_back(t);
  }
  parts.emplace_back(std::move(cur), cur_col);
  return parts;
}

std::string_view trim(std::string_view s, std::size_t& offset) {
  std::size_t b = 0;
  while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  std::size_t e = s.size();
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  offset += b;
  return s.substr(b, e - b);
}

bool starts_with_ci(std::string_view s, std::string_view prefix) {
  if (s.size() < prefix.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i)
    if (std::tolower(static_cast<unsigned char>(s[i])) != prefix[i]) return false;
  return true;
}

Statement parse_rule(const TokenSpan& tokens, bool whenever, std::size_t end_column) {
  TokenSpan body(tokens.begin() + 1, tokens.end());
  auto then_it = std::find_if(body.begin(), body.end(), [](const Token& t) { return t.word == "then"; });
  if (then_it == body.end()) throw ParseError(0, end_column, "missing 'then'", "'then'");
  TokenSpan cond(body.begin(), then_it), consq(then_it + 1, body.end());
  const std::size_t cond_col = tokens.front().column + tokens.front().word.size() + 1;
  const std::size_t consq_col = then_it->column + 5;
  if (std::find_if(consq.begin(), consq.end(), [](const Token& t) { return t.word == "then"; }) != consq.end())
    throw ParseError(0, consq_col, "'then' may appear only once", "a phrase");

  std::vector<Literal> condition;
  for (const auto& [words, col] : split_on(cond, "and", cond_col)) {
    Literal l = phrase_literal(words, col, true);
    if (std::find(condition.begin(), condition.end(), l) != condition.end())
      throw ParseError(0, col, "condition repeats '" + l.text() + "'", "a different phrase");
    condition.push_back(l);
  }
  Literal consequent = phrase_literal(consq, consq.empty() ? consq_col : consq.front().column, true);
  for (const auto& k : condition)
    if (k.atom == consequent.atom)
      throw ParseError(0, consq.empty() ? consq_col : consq.front().column,
                       "the consequent also occurs in the condition", "a different phrase");
  if (whenever) return WheneverRule{std::move(condition), consequent};
  std::vector<Literal> positive;
  for (const auto& k : condition) positive.push_back(complement(k));
  return WhenRule{std::move(positive), complement(consequent)};
}

}  // namespace

Statement parse_statement(std::string_view raw) {
  std::size_t offset = 0;
  std::string_view text = trim(raw, offset);
  if (text.empty()) throw ParseError(0, 1, "empty statement", "a statement");
  if (text.back() == '.') text.remove_suffix(1);
  if (text.empty()) throw ParseError(0, offset + 1, "empty statement", "a statement");

  if (starts_with_ci(text, "fact:")) {
    auto tokens = tokenize(text.substr(5), offset + 5);
    return FactAssertion{phrase_literal(tokens, offset + 6, true)};
  }
  if (starts_with_ci(text, "aware:")) {
    auto tokens = tokenize(text.substr(6), offset + 6);
    return AwarenessDecl{phrase_literal(tokens, offset + 7, false).atom};
  }
  if (text.front() == '?') {
    auto tokens = tokenize(text.substr(1), offset + 1);
    return Query{phrase_literal(tokens, offset + 2, true)};
  }
  auto tokens = tokenize(text, offset);
  const std::size_t end_column = offset + text.size() + 1;
  if (tokens.front().word == "whenever") return parse_rule(tokens, true, end_column);
  if (tokens.front().word == "when") return parse_rule(tokens, false, end_column);
  throw ParseError(0, tokens.front().column, "unknown statement '" + tokens.front().word + "'",
                   "'whenever', 'when', 'fact:', 'aware:' or '?'");
}

Atom canonicalize_phrase(std::string_view text) {
  std::string spaced(text);
  std::replace(spaced.begin(), spaced.end(), '_', ' ');
  auto tokens = tokenize(spaced, 0);
  std::string name = join_words(tokens);
  if (name.empty()) throw ParseError(0, 1, "empty phrase", "a phrase");
  return Atom(name);
}

Literal parse_phrase_literal(std::string_view text) {
  std::size_t offset = 0;
  std::string_view t = trim(text, offset);
  return phrase_literal(tokenize(t, offset), offset + 1, true);
}

StatementFile parse_file(std::string_view content) {
  StatementFile out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    std::size_t nl = content.find('\n', pos);
    std::string_view line = content.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? content.size() + 1 : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::size_t hash = line.find('#');
    std::string_view body = line.substr(0, hash);
    std::size_t offset = 0;
    std::string_view trimmed = trim(body, offset);
    if (trimmed.empty()) continue;
    try {
      out.lines.push_back({line_no, std::string(trimmed), parse_statement(body)});
    } catch (const ParseError& e) {
      out.errors.emplace_back(line_no, e.column, e.message, e.expected);
    } catch (const Error& e) {
      out.errors.emplace_back(line_no, 1, e.what(), "");
    }
  }
  return out;
}

std::vector<Conditional> conditionals_of(const std::vector<Statement>& statements) {
  std::vector<Conditional> out;
  std::map<std::pair<std::set<Literal>, Literal>, std::size_t> index;
  for (const auto& st : statements) {
    const std::vector<Literal>* condition = nullptr;
    const Literal* consequent = nullptr;
    Interpretation interp;
    if (const auto* w = std::get_if<WheneverRule>(&st)) {
      condition = &w->condition;
      consequent = &w->consequent;
      interp = Interpretation::SufficientOnly;
    } else if (const auto* n = std::get_if<WhenRule>(&st)) {
      condition = &n->condition;
      consequent = &n->consequent;
      interp = Interpretation::NecessaryOnly;
    } else {
      continue;
    }
    auto key = std::make_pair(std::set<Literal>(condition->begin(), condition->end()), *consequent);
    if (auto it = index.find(key); it != index.end()) {
      Conditional& c = out[it->second];
      if (c.interpretation != interp) c.interpretation = Interpretation::SufficientAndNecessary;
      continue;
    }
    index.emplace(key, out.size());
    out.push_back({"c" + std::to_string(out.size() + 1), *condition, *consequent, interp});
  }
  return out;
}

KnowledgeBase knowledge_base_of(const std::vector<Statement>& statements, const ReasonerProfile& profile) {
  KnowledgeBase kb;
  kb.conditionals = conditionals_of(statements);
  std::set<Literal> facts;
  std::set<Atom> aware;
  for (const auto& c : kb.conditionals) {
    for (const auto& k : c.condition) aware.insert(k.atom);
    aware.insert(c.consequent.atom);
  }
  for (const auto& st : statements) {
    if (const auto* f = std::get_if<FactAssertion>(&st)) facts.insert(f->literal);
    if (const auto* a = std::get_if<AwarenessDecl>(&st)) aware.insert(a->atom);
  }
  kb.state = make_state(std::move(facts), std::move(aware));
  kb.atoms = vocabulary(kb.conditionals, kb.state);
  kb.profile = profile;
  return kb;
}

std::string_view answer_word(Classification c) {
  switch (c) {
    case Classification::SkepticalYes: return "Yes";
    case Classification::SkepticalNo: return "No";
    case Classification::CredulousBoth: return "Maybe";
    case Classification::NoSupport: return "Unknown";
  }
  return "Unknown";
}

namespace {

std::string join_literals(const std::vector<Literal>& ls) {
  std::string out;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (i) out += " and ";
    out += ls[i].text();
  }
  return out;
}

std::string reason(const Scheme& s) {
  switch (s.kind) {
    case SchemeKind::Fact: return s.position.text() + " is given";
    case SchemeKind::Hyp: return s.position.text() + " is assumed";
    case SchemeKind::ExoE: return s.premises.front().text() + " has some other explanation";
    default:
      return join_literals(s.premises) + " gives " + s.position.text() + " by " +
             std::string(to_string(s.kind));
  }
}

std::string paragraph(const DialecticTree& t, const Framework& f) {
  std::vector<SchemeIndex> order = t.support.members();
  std::stable_sort(order.begin(), order.end(), [&](SchemeIndex a, SchemeIndex b) {
    return f.scheme(a).is_base() && !f.scheme(b).is_base();
  });
  std::string out = t.claim.text() + " is supported because ";
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i) out += " and ";
    out += reason(f.scheme(order[i]));
  }
  for (const auto& n : t.children) {
    if (!n.defense) continue;
    bool only_hyps = std::all_of(n.attacker.members().begin(), n.attacker.members().end(),
                                 [&](SchemeIndex i) { return f.scheme(i).kind == SchemeKind::Hyp; });
    if (n.self_defense && only_hyps) continue;
    out += "; the counterargument " + describe(f, n.attacker) + " is defended by ";
    out += n.self_defense ? "the argument itself" : describe(f, *n.defense);
    if (n.strong) out += " (strongly)";
  }
  return out + ".";
}

}  // namespace

std::string render_explanation(const QueryVerdict& v, const Framework& f) {
  std::string out(answer_word(v.classification));
  if (v.pos_witness) out += "\n" + paragraph(*v.pos_witness, f);
  if (v.neg_witness) out += "\n" + paragraph(*v.neg_witness, f);
  return out;
}

}  // namespace cognarg::cnl
