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

// cognarg: REPL, batch runner, HTTP server and experiment harness.

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cognarg/harness.hpp"
#include "cognarg/service.hpp"

using namespace cognarg;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void print_diagnostics(const std::string& file, const service::KbRejected& e) {
  for (const auto& d : e.diagnostics) {
    std::cerr << file << ":" << d.line << ":" << d.column << ": " << d.message;
    if (!d.expected.empty()) std::cerr << " (expected " << d.expected << ")";
    std::cerr << "\n";
  }
}

struct ProfileFlags {
  std::string mode = "predictive";
  bool exo = false;
  bool no_demote = false;
  std::vector<std::string> overrides;  // id=interpretation

  void add_to(CLI::App* cmd) {
    cmd->add_option("--mode", mode, "predictive or explanatory")->check(CLI::IsMember({"predictive", "explanatory"}));
    cmd->add_flag("--exo", exo, "allow exogenous explanations");
    cmd->add_flag("--no-demote", no_demote, "keep necessity of conditionals in predictive mode");
    cmd->add_option("--interpret", overrides, "override a conditional, e.g. c1=sufficient");
  }

  ReasonerProfile profile() const {
    ReasonerProfile p;
    p.mode = parse_mode(mode);
    p.allow_exogenous = exo;
    p.auto_demote_necessity = !no_demote;
    for (const auto& kv : overrides) {
      auto eq = kv.find('=');
      if (eq == std::string::npos) throw std::runtime_error("--interpret expects id=interpretation");
      p.interpretation_overrides[kv.substr(0, eq)] = parse_interpretation(kv.substr(eq + 1));
    }
    return p;
  }
};

int run_repl(const std::string& kb_file, const ReasonerProfile& profile, bool oracle) {
  service::Session s;
  s.id = "repl";
  s.profile = profile;
  if (!kb_file.empty()) {
    try {
      s = service::with_kb_text(s, read_file(kb_file));
    } catch (const service::KbRejected& e) {
      print_diagnostics(kb_file, e);
      return 2;
    }
  }
  service::QueryOptions opts;
  opts.use_oracle = oracle;
  const bool tty = isatty(STDIN_FILENO);
  if (tty) std::cout << "cognarg repl, :help for commands\n";
  std::string line;
  while ((tty && std::cout << "> " << std::flush), std::getline(std::cin, line)) {
    if (line == ":quit" || line == ":q") break;
    auto [next, out] = service::repl_eval(line, s, opts);
    s = std::move(next);
    if (!out.empty()) std::cout << out << "\n";
  }
  return 0;
}

int run_file(const std::string& file, const std::vector<std::string>& queries, const ReasonerProfile& profile,
             bool json, bool tree, bool oracle) {
  service::Session s;
  s.id = "run";
  s.profile = profile;
  try {
    s = service::with_kb_text(s, read_file(file));
  } catch (const service::KbRejected& e) {
    print_diagnostics(file, e);
    return 2;
  }
  service::QueryOptions opts;
  opts.use_oracle = oracle;
  for (const auto& q : queries) {
    service::QueryOutcome out = service::run_query(s, cnl::parse_phrase_literal(q), opts);
    if (json) {
      std::cout << dump(out.json);
    } else {
      std::cout << out.explanation << "\n";
      if (tree) std::cout << out.json.at("tree").dump(2) << "\n";
    }
  }
  return 0;
}

int run_cohort(const std::string& priors_file, std::uint64_t seed, const std::string& format) {
  harness::CohortPriors p;
  if (!priors_file.empty()) p = harness::priors_from_json_text(read_file(priors_file));
  harness::validate(p);
  Json rows = Json::array();
  if (format == "table") std::cout << "group  given   question  yes     no      maybe\n";
  for (const auto& c : harness::standard_cases()) {
    harness::Distribution d = harness::simulate_cohort(p, c, seed);
    if (format == "table") {
      char buf[128];
      std::snprintf(buf, sizeof buf, "%-6s %-7s %-9s %-7.3f %-7.3f %.3f\n", std::string(to_string(c.group)).c_str(),
                    c.given.text().c_str(), c.question.text().c_str(), d.yes, d.no, d.maybe);
      std::cout << buf;
    } else {
      rows.push_back(Json{{"group", to_string(c.group)},
                          {"given", c.given.text()},
                          {"question", c.question.text()},
                          {"yes", d.yes},
                          {"no", d.no},
                          {"maybe", d.maybe},
                          {"samples", d.samples}});
    }
  }
  if (format == "json") std::cout << dump(Json{{"v", kFormatVersion}, {"seed", seed}, {"cases", rows}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cognarg: cognitive argumentation over conditionals"};
  app.require_subcommand(1);
  bool oracle = false;
  app.add_flag("--oracle", oracle)->group("");  // answer with the exhaustive oracle

  auto* repl = app.add_subcommand("repl", "interactive session");
  std::string repl_kb;
  ProfileFlags repl_profile;
  repl->add_option("--kb", repl_kb, "statement file to load first")->check(CLI::ExistingFile);
  repl_profile.add_to(repl);

  auto* run = app.add_subcommand("run", "answer queries against a statement file");
  std::string run_file_path;
  std::vector<std::string> run_queries;
  bool run_json = false, run_tree = false;
  ProfileFlags run_profile;
  run->add_option("file", run_file_path, "statement file")->required()->check(CLI::ExistingFile);
  run->add_option("--query,-q", run_queries, "phrase to query; repeatable")->required();
  run->add_flag("--json", run_json, "print the JSON reply");
  run->add_flag("--tree", run_tree, "also print the dialectic trees");
  run_profile.add_to(run);

  auto* serve = app.add_subcommand("serve", "HTTP API");
  service::ServerOptions sopts;
  std::string store_path = "cognarg-store.json";
  std::string static_dir;
  serve->add_option("--host", sopts.host);
  serve->add_option("--port", sopts.port)->check(CLI::Range(0, 65535));
  serve->add_option("--store", store_path, "session store file (COGNARG_STORE takes precedence)");
  serve->add_option("--static", static_dir, "directory of web assets")->check(CLI::ExistingDirectory);

  auto* battery = app.add_subcommand("battery", "run the suppression task grid");
  std::string battery_format = "table";
  battery->add_option("--format", battery_format)->check(CLI::IsMember({"table", "csv", "json"}));

  auto* cohort = app.add_subcommand("cohort", "simulate a population of reasoners");
  std::string priors;
  std::uint64_t seed = 1;
  std::string cohort_format = "table";
  cohort->add_option("--priors", priors, "priors JSON file")->check(CLI::ExistingFile);
  cohort->add_option("--seed", seed);
  cohort->add_option("--format", cohort_format)->check(CLI::IsMember({"table", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*repl) return run_repl(repl_kb, repl_profile.profile(), oracle);
    if (*run) return run_file(run_file_path, run_queries, run_profile.profile(), run_json, run_tree, oracle);
    if (*serve) {
      if (const char* env = std::getenv("COGNARG_STORE"); env && *env) store_path = env;
      sopts.store = store_path;
      if (!static_dir.empty()) sopts.static_dir = static_dir;
      sopts.on_listening = [&](int port, const std::function<void()>&) {
        std::cerr << "listening on " << sopts.host << ":" << port << ", store " << store_path << "\n";
      };
      return service::serve(sopts);
    }
    if (*battery) {
      harness::RunOptions ropts;
      ropts.use_oracle = oracle;
      harness::BatteryReport r = harness::run_battery(ropts);
      std::cout << harness::format_battery(r, battery_format);
      return r.mismatches == 0 ? 0 : 1;
    }
    if (*cohort) return run_cohort(priors, seed, cohort_format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
