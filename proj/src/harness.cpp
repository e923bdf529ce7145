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

#include "cognarg/harness.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <sstream>

#include "cognarg/oracle.hpp"
#include "cognarg/serialize.hpp"

namespace cognarg::harness {

std::string_view to_string(Group g) {
  switch (g) {
    case Group::I: return "I";
    case Group::II: return "II";
    case Group::III: return "III";
  }
  return "?";
}

GroupSetup build_group(Group g) {
  GroupSetup s;
  const Literal e = Literal::pos("e"), l = Literal::pos("l");
  s.kb.push_back({std::string(kEssayRule), {e}, l, Interpretation::SufficientAndNecessary});
  s.awareness = {Atom("e"), Atom("l")};
  if (g == Group::II) {
    s.kb.push_back({"c_t", {Literal::pos("t")}, l, Interpretation::SufficientOnly});
    s.awareness.insert(Atom("t"));
  }
  if (g == Group::III) {
    s.kb.push_back({"c_o", {Literal::pos("o")}, l, Interpretation::NecessaryOnly});
    s.awareness.insert(Atom("o"));
  }
  return s;
}

ReasonerProfile column_profile(Mode mode, Interpretation essay, bool allow_exogenous) {
  ReasonerProfile p;
  p.mode = mode;
  p.allow_exogenous = allow_exogenous;
  p.interpretation_overrides[std::string(kEssayRule)] = essay;
  return p;
}

Literal question_for(const Literal& given) {
  return given.atom.name() == "e" ? Literal::pos("l") : Literal::pos("e");
}

QueryVerdict run_case(const CaseSpec& c, const RunOptions& opts) {
  if (c.profile.mode == Mode::Explanatory && c.given.atom.name() == "e")
    throw Error(ErrorCode::IncompatibleProfile,
                "explanatory mode applies only when the consequent is observed");
  GroupSetup g = build_group(c.group);
  CognitiveState state = make_state({c.given}, g.awareness);
  Framework f = compile_schemes(g.kb, state, c.profile, opts.rules);
  if (opts.use_oracle) return opts.parallel ? oracle::oracle_query(c.question, f, state)
                                            : oracle::oracle_query_serial(c.question, f, state);
  return query(c.question, f, state);
}

namespace {

struct GoldenRow {
  const char* given;
  Group group;
  std::array<const char*, 4> cells;  // predictive S&N, predictive S, explanatory S&N, explanatory S
  // The group's extra premise offers the alternative explanation an
  // exogenous scheme would otherwise have to supply.
  bool alternative_explains;
  int byrne;
  int dieussaert;
};

// "x" skeptical, "x,y" both credulous, "x*" skeptical only without an
// exogenous explanation, "-" not a plausible profile for this case.
constexpr std::array<GoldenRow, 12> kGolden = {{
    {"e", Group::I, {"l", "l", "-", "-"}, false, 96, 88},
    {"e", Group::II, {"-", "l", "-", "-"}, false, 96, 93},
    {"e", Group::III, {"l,~l", "l,~l", "-", "-"}, false, 38, 60},
    {"~e", Group::I, {"~l", "l,~l", "-", "-"}, false, 46, 49},
    {"~e", Group::II, {"-", "l,~l", "-", "-"}, false, 4, 22},
    {"~e", Group::III, {"~l", "l,~l", "-", "-"}, false, 63, 49},
    {"l", Group::I, {"e", "e,~e", "e*", "e,~e"}, false, 71, 53},
    {"l", Group::II, {"-", "e,~e", "-", "e,~e"}, true, 13, 16},
    {"l", Group::III, {"e", "e,~e", "e*", "e,~e"}, false, 54, 55},
    {"~l", Group::I, {"~e", "~e", "~e*", "~e*"}, false, 92, 69},
    {"~l", Group::II, {"-", "~e", "-", "~e*"}, false, 96, 69},
    {"~l", Group::III, {"~e", "~e", "e,~e", "e,~e"}, true, 33, 44},
}};

Literal golden_literal(std::string_view s) {
  return s.starts_with("~") ? Literal::neg(s.substr(1)) : Literal::pos(s);
}

Classification skeptical(std::string_view s, const Literal& q) {
  return golden_literal(s) == q ? Classification::SkepticalYes : Classification::SkepticalNo;
}

std::optional<Classification> expected_for(const GoldenRow& row, int column, bool exo, const Literal& q) {
  std::string_view cell = row.cells[column];
  if (cell == "-") return std::nullopt;
  const bool both = cell.find(',') != std::string_view::npos;
  const bool starred = cell.ends_with("*");
  if (column < 2) {
    if (exo) return std::nullopt;  // predictive cells ignore the flag
    return both ? Classification::CredulousBoth : skeptical(cell, q);
  }
  if (starred) {
    if (exo) return Classification::CredulousBoth;
    cell.remove_suffix(1);
    return skeptical(cell, q);
  }
  if (both) {
    if (exo || row.alternative_explains) return Classification::CredulousBoth;
    return std::nullopt;
  }
  return skeptical(cell, q);
}

}  // namespace

BatteryReport run_battery(const RunOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  BatteryReport report;
  struct Plan {
    const GoldenRow* row;
    int column;
    bool exo;
  };
  std::vector<Plan> plans;
  for (const auto& row : kGolden) {
    const bool consequent_given = golden_literal(row.given).atom.name() == "l";
    for (int column = 0; column < 4; ++column) {
      const bool explanatory = column >= 2;
      if (explanatory && !consequent_given) continue;
      for (bool exo : {false, true}) {
        if (!explanatory && exo) continue;
        plans.push_back({&row, column, exo});
      }
    }
  }
  std::vector<std::optional<BatteryCell>> cells(plans.size());
  const long count = static_cast<long>(plans.size());
  RunOptions inner = opts;
  inner.parallel = false;
#pragma omp parallel for schedule(dynamic) if (opts.parallel)
  for (long k = 0; k < count; ++k) {
    const Plan& sp = plans[k];
    const Literal given = golden_literal(sp.row->given);
    const Literal q = question_for(given);
    const Mode mode = sp.column >= 2 ? Mode::Explanatory : Mode::Predictive;
    const Interpretation essay =
        sp.column % 2 == 0 ? Interpretation::SufficientAndNecessary : Interpretation::SufficientOnly;
    CaseSpec c{sp.row->group, given, q, column_profile(mode, essay, sp.exo)};
    QueryVerdict v = run_case(c, inner);
    cells[k] = BatteryCell{given, sp.row->group, mode, essay, sp.exo, q, v.classification,
                           expected_for(*sp.row, sp.column, sp.exo, q), sp.row->byrne, sp.row->dieussaert};
  }
  for (auto& c : cells) {
    report.checked += c->checked();
    report.mismatches += !c->pass();
    report.cells.push_back(std::move(*c));
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string format_battery(const BatteryReport& r, std::string_view format) {
  auto interp = [](Interpretation i) { return i == Interpretation::SufficientOnly ? "suff" : "suff&necc"; };
  auto expected = [](const BatteryCell& c) {
    return c.expected ? std::string(to_string(*c.expected)) : std::string("-");
  };
  auto status = [](const BatteryCell& c) { return !c.checked() ? "info" : c.pass() ? "ok" : "MISMATCH"; };
  std::ostringstream out;
  if (format == "json") {
    Json cells = Json::array();
    for (const auto& c : r.cells)
      cells.push_back(Json{{"given", c.given.text()},
                           {"group", to_string(c.group)},
                           {"mode", to_string(c.mode)},
                           {"interpretation", to_string(c.essay)},
                           {"allow_exogenous", c.allow_exogenous},
                           {"question", c.question.text()},
                           {"classification", to_string(c.got)},
                           {"expected", c.expected ? Json(to_string(*c.expected)) : Json(nullptr)},
                           {"pass", c.pass()},
                           {"byrne", c.byrne},
                           {"dieussaert", c.dieussaert}});
    out << dump(Json{{"v", kFormatVersion},
                     {"checked", r.checked},
                     {"mismatches", r.mismatches},
                     {"seconds", r.seconds},
                     {"cells", cells}});
    return out.str();
  }
  if (format == "csv") {
    out << "given,group,mode,interpretation,allow_exogenous,question,classification,expected,status,byrne,dieussaert\n";
    for (const auto& c : r.cells)
      out << c.given.text() << ',' << to_string(c.group) << ',' << to_string(c.mode) << ',' << interp(c.essay)
          << ',' << (c.allow_exogenous ? 1 : 0) << ',' << c.question.text() << ',' << to_string(c.got) << ','
          << expected(c) << ',' << status(c) << ',' << c.byrne << ',' << c.dieussaert << '\n';
    return out.str();
  }
  if (format != "table") throw Error(ErrorCode::Format, "unknown battery format '" + std::string(format) + "'");
  char line[256];
  std::snprintf(line, sizeof line, "%-6s %-4s %-12s %-10s %-4s %-15s %-15s %-8s %s\n", "given", "grp", "mode",
                "interp", "exo", "got", "expected", "status", "byrne/dieussaert");
  out << line;
  for (const auto& c : r.cells) {
    std::snprintf(line, sizeof line, "%-6s %-4s %-12s %-10s %-4s %-15s %-15s %-8s %d%%/%d%%\n",
                  c.given.text().c_str(), std::string(to_string(c.group)).c_str(),
                  std::string(to_string(c.mode)).c_str(), interp(c.essay), c.allow_exogenous ? "yes" : "no",
                  std::string(to_string(c.got)).c_str(), expected(c).c_str(), status(c), c.byrne, c.dieussaert);
    out << line;
  }
  out << r.checked << " cells checked, " << r.mismatches << " mismatches, " << r.seconds << " s\n";
  return out.str();
}

void validate(const CohortPriors& p) {
  for (double x : {p.p_necessary_interpretation, p.p_explanatory_mode_given_consequent_fact, p.p_allow_exogenous})
    if (!(x >= 0.0 && x <= 1.0)) throw Error(ErrorCode::Format, "cohort probabilities must lie in [0, 1]");
  if (p.sample_count < 1) throw Error(ErrorCode::Format, "sample_count must be at least 1");
}

CohortPriors priors_from_json_text(std::string_view text) {
  Json j = parse_json(text);
  CohortPriors p;
  try {
    p.p_necessary_interpretation = j.value("p_necessary_interpretation", p.p_necessary_interpretation);
    p.p_explanatory_mode_given_consequent_fact =
        j.value("p_explanatory_mode_given_consequent_fact", p.p_explanatory_mode_given_consequent_fact);
    p.p_allow_exogenous = j.value("p_allow_exogenous", p.p_allow_exogenous);
    p.sample_count = j.value("sample_count", p.sample_count);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::Format, std::string("priors: ") + e.what());
  }
  validate(p);
  return p;
}

Answer answer_of(Classification c) {
  switch (c) {
    case Classification::SkepticalYes: return Answer::Yes;
    case Classification::SkepticalNo: return Answer::No;
    default: return Answer::Maybe;
  }
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// answers[necessary][explanatory][exo]
using AnswerTable = std::array<std::array<std::array<Answer, 2>, 2>, 2>;

AnswerTable answer_table(const CohortCase& c) {
  AnswerTable t{};
  const bool consequent_given = c.given.atom.name() == "l";
  for (int n = 0; n < 2; ++n)
    for (int m = 0; m < 2; ++m)
      for (int x = 0; x < 2; ++x) {
        if (m && !consequent_given) {
          t[n][m][x] = t[n][0][x];
          continue;
        }
        auto profile = column_profile(m ? Mode::Explanatory : Mode::Predictive,
                                      n ? Interpretation::SufficientAndNecessary : Interpretation::SufficientOnly,
                                      x != 0);
        t[n][m][x] = answer_of(run_case({c.group, c.given, c.question, profile}).classification);
      }
  return t;
}

}  // namespace

Distribution simulate_cohort(const CohortPriors& p, const CohortCase& c, std::uint64_t seed, bool parallel) {
  validate(p);
  const AnswerTable table = answer_table(c);
  const bool consequent_given = c.given.atom.name() == "l";
  const long count = static_cast<long>(p.sample_count);
  long yes = 0, no = 0, maybe = 0;
#pragma omp parallel for reduction(+ : yes, no, maybe) if (parallel)
  for (long i = 0; i < count; ++i) {
    // Seeding an mt19937_64 per sample costs more than the whole draw, so
    // each sample reads three uniforms off a splitmix64 counter stream.
    const std::uint64_t base = splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(i)));
    auto u = [base](std::uint64_t k) { return static_cast<double>(splitmix64(base + k) >> 11) * 0x1.0p-53; };
    const int n = u(0) < p.p_necessary_interpretation;
    const int m = u(1) < p.p_explanatory_mode_given_consequent_fact && consequent_given;
    const int x = u(2) < p.p_allow_exogenous;
    switch (table[n][m][x]) {
      case Answer::Yes: ++yes; break;
      case Answer::No: ++no; break;
      case Answer::Maybe: ++maybe; break;
    }
  }
  const double total = static_cast<double>(count);
  return {yes / total, no / total, maybe / total, p.sample_count};
}

Distribution expected_distribution(const CohortPriors& p, const CohortCase& c) {
  validate(p);
  const AnswerTable table = answer_table(c);
  const bool consequent_given = c.given.atom.name() == "l";
  const double pe = consequent_given ? p.p_explanatory_mode_given_consequent_fact : 0.0;
  Distribution d;
  for (int n = 0; n < 2; ++n)
    for (int m = 0; m < 2; ++m)
      for (int x = 0; x < 2; ++x) {
        double w = (n ? p.p_necessary_interpretation : 1 - p.p_necessary_interpretation) * (m ? pe : 1 - pe) *
                   (x ? p.p_allow_exogenous : 1 - p.p_allow_exogenous);
        switch (table[n][m][x]) {
          case Answer::Yes: d.yes += w; break;
          case Answer::No: d.no += w; break;
          case Answer::Maybe: d.maybe += w; break;
        }
      }
  return d;
}

std::vector<CohortCase> standard_cases() {
  std::vector<CohortCase> out;
  for (const Literal& given : {Literal::pos("e"), Literal::neg("e"), Literal::pos("l"), Literal::neg("l")})
    for (Group g : {Group::I, Group::II, Group::III}) out.push_back({g, given, question_for(given)});
  return out;
}

}  // namespace cognarg::harness
