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

#include <filesystem>
#include <fstream>
#include <future>
#include <random>
#include <sstream>
#include <thread>

#include <httplib.h>

#include "cognarg/service.hpp"

using namespace cognarg;
using namespace cognarg::service;

namespace {

const char* kGroup3 =
    "Whenever she has an essay to finish then she will study late in the library\n"
    "When the library is not open then she will not study late in the library\n"
    "When she has not an essay to finish then she will not study late in the library\n"
    "fact: she has an essay to finish\n";

const Literal library = Literal::pos("she_will_study_late_in_library");

// A store file in a fresh temporary directory, removed afterwards.
struct TempStore {
  std::filesystem::path dir;
  TempStore() {
    std::random_device rd;
    dir = std::filesystem::temp_directory_path() / ("cognarg-test-" + std::to_string(rd()));
    std::filesystem::create_directories(dir);
  }
  ~TempStore() { std::filesystem::remove_all(dir); }
  std::filesystem::path file() const { return dir / "store.json"; }
};

Session run_lines(Session s, std::string_view text) {
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) s = repl_eval(line, s).first;
  return s;
}

Json body_of(const HttpReply& r) { return parse_json(r.body); }

}  // namespace

TEST_CASE("repl answers Maybe with a reason for each side") {
  Session s = run_lines({}, kGroup3);
  CHECK(s.kb.size() == 2);
  CHECK(s.facts.contains(Literal::pos("she_has_essay_to_finish")));
  auto [after, out] = repl_eval("? she will study late in the library", s);
  CHECK(out.rfind("Maybe\n", 0) == 0);
  CHECK(out.find("\n" + library.atom.name() + " is supported because") != std::string::npos);
  CHECK(out.find("\nnot " + library.atom.name() + " is supported because") != std::string::npos);
  CHECK(after.last_query == library);
  CHECK(after.history.size() == s.history.size() + 1);
}

TEST_CASE("repl statements and meta-commands") {
  Session s;
  auto [s1, m1] = repl_eval("fact: she has an essay to finish", s);
  CHECK(m1 == "ok: fact she_has_essay_to_finish");
  auto [s2, m2] = repl_eval("whenever she has an essay to finish then she will study late in the library", s1);
  CHECK(m2.rfind("ok: ", 0) == 0);
  CHECK(repl_eval("? she will study late in the library", s2).second.rfind("Yes", 0) == 0);

  auto [s3, m3] = repl_eval("bogus line", s2);
  CHECK(m3.rfind("error: ", 0) == 0);
  CHECK(s3 == s2);

  auto [s4, m4] = repl_eval(":profile mode=explanatory exo=on", s2);
  CHECK(s4.profile.mode == Mode::Explanatory);
  CHECK(s4.profile.allow_exogenous);
  CHECK(repl_eval(":profile mode=sideways", s2).first == s2);

  CHECK(repl_eval(":tree", s2).second.rfind("error: ", 0) == 0);
  CHECK(repl_eval(":facts", s2).second == "she_has_essay_to_finish");
  CHECK(repl_eval(":forget she has an essay to finish", s2).first.facts.empty());
  CHECK(repl_eval(":hide she has an essay to finish", s2).second.rfind("error: ", 0) == 0);
  CHECK(repl_eval(":reset", s2).first.kb.empty());
  CHECK(repl_eval(":nonsense", s2).second.rfind("error: ", 0) == 0);
  CHECK(repl_eval("   # only a comment", s2).first == s2);
}

TEST_CASE("hiding the extra premise restores the skeptical answer") {
  Session s = run_lines({}, kGroup3);
  CHECK(run_query(s, library).verdict.classification == Classification::CredulousBoth);
  auto [hidden, msg] = repl_eval(":hide the library is open", s);
  CHECK(msg == "ok: hide library_is_open");
  CHECK(hidden.active_kb().size() == 1);
  CHECK(run_query(hidden, library).verdict.classification == Classification::SkepticalYes);
  CHECK(run_query(repl_eval(":show the library is open", hidden).first, library).verdict.classification ==
        Classification::CredulousBoth);
}

TEST_CASE("session documents round-trip byte for byte") {
  Session s = run_lines({}, std::string(kGroup3) + "? she will study late in the library\n:hide library is open\n");
  s.id = "s9";
  s.profile.interpretation_overrides["c2"] = Interpretation::SufficientOnly;
  const std::string text = dump(session_to_json(s));
  Session back = session_from_json(parse_json(text));
  CHECK(back == s);
  CHECK(dump(session_to_json(back)) == text);
  auto j = parse_json(text);
  CHECK(j.at("v") == 1);
  CHECK(j.contains("knowledge_base"));
  j["v"] = 7;
  CHECK_THROWS_AS(session_from_json(j), Error);
}

TEST_CASE("kb text is all or nothing") {
  Session s;
  try {
    with_kb_text(s, "whenever a then b\nwhenever then\nfact: a\nnonsense here\n");
    FAIL("expected KbRejected");
  } catch (const KbRejected& e) {
    REQUIRE(e.diagnostics.size() == 2);
    CHECK(e.diagnostics[0].line == 2);
    CHECK(e.diagnostics[1].line == 4);
  }
  CHECK_THROWS_AS(with_kb_text(s, "? a\n"), KbRejected);
  Session t = with_kb_text(s, "whenever a then b\nfact: a\naware: c\n");
  CHECK(t.kb.size() == 1);
  CHECK(t.declared.contains(Atom("c")));
  CHECK(with_facts(t, {Literal::neg("a")}, false).facts == std::set<Literal>{Literal::neg("a")});
}

TEST_CASE("http flow through the handler") {
  TempStore tmp;
  SessionStore store(tmp.file());
  auto created = handle_request(store, "POST", "/sessions", "");
  REQUIRE(created.status == 201);
  const std::string id = body_of(created).at("id");
  const std::string base = "/sessions/" + id;

  auto empty = handle_request(store, "POST", base + "/query", R"({"literal": "she will study late in the library"})");
  REQUIRE(empty.status == 200);
  CHECK(body_of(empty).at("verdict").at("classification") == std::string(to_string(Classification::NoSupport)));

  auto bad = handle_request(store, "PUT", base + "/kb", "whenever x then x\nwhenever a then b\nwhen\n");
  CHECK(bad.status == 422);
  auto diag = body_of(bad).at("diagnostics");
  REQUIRE(diag.size() == 2);
  CHECK(diag[0].at("line") == 1);
  CHECK(diag[1].at("line") == 3);
  CHECK(diag[1].at("column").get<int>() >= 1);
  CHECK(body_of(handle_request(store, "GET", base, "")).at("kb_lines").empty());

  auto put = handle_request(store, "PUT", base + "/kb", kGroup3);
  REQUIRE(put.status == 200);
  auto q = handle_request(store, "POST", base + "/query", R"({"literal": "she will study late in the library"})");
  REQUIRE(q.status == 200);
  auto qj = body_of(q);
  CHECK(qj.at("v") == 1);
  CHECK(qj.at("verdict").at("classification") == std::string(to_string(Classification::CredulousBoth)));
  CHECK(qj.at("explanation").get<std::string>().rfind("Maybe", 0) == 0);
  CHECK(qj.at("tree").at("pos").is_object());
  CHECK(qj.at("tree").at("neg").is_object());

  auto oq = handle_request(store, "POST", base + "/query",
                           R"({"literal": "she will study late in the library", "oracle": true})");
  CHECK(body_of(oq).at("verdict") == qj.at("verdict"));

  auto hide = handle_request(store, "POST", base + "/awareness", R"({"hide": ["the library is open"]})");
  REQUIRE(hide.status == 200);
  auto q2 = handle_request(store, "POST", base + "/query", R"({"literal": "she will study late in the library"})");
  CHECK(body_of(q2).at("verdict").at("answer") == "Yes");
  CHECK(handle_request(store, "POST", base + "/awareness", R"({"hide": ["she has an essay to finish"]})").status ==
        400);
  handle_request(store, "POST", base + "/awareness", R"({"show": ["the library is open"]})");

  auto facts =
      handle_request(store, "POST", base + "/facts", R"({"facts": ["the library is open"], "replace": false})");
  REQUIRE(facts.status == 200);
  CHECK(body_of(facts).at("facts").size() == 2);
  auto q3 = handle_request(store, "POST", base + "/query", R"({"literal": "she will study late in the library"})");
  CHECK(body_of(q3).at("verdict").at("answer") == "Yes");

  auto prof = handle_request(store, "PUT", base + "/profile", R"({"profile": {"mode": "explanatory"}})");
  REQUIRE(prof.status == 200);
  CHECK(body_of(prof).at("profile").at("mode") == "explanatory");

  CHECK(handle_request(store, "GET", "/sessions/nope", "").status == 404);
  CHECK(handle_request(store, "POST", "/sessions/nope/query", R"({"literal": "x"})").status == 404);
  CHECK(handle_request(store, "GET", "/elsewhere", "").status == 404);
  CHECK(handle_request(store, "GET", base + "/query", "").status == 405);
  CHECK(handle_request(store, "POST", base + "/query", "{not json").status == 400);
  CHECK(handle_request(store, "POST", base + "/query", "{}").status == 422);

  // Everything survives a reload of the store file.
  const std::string saved = handle_request(store, "GET", base, "").body;
  SessionStore reloaded(tmp.file());
  CHECK(reloaded.size() == 1);
  CHECK(handle_request(reloaded, "GET", base, "").body == saved);
  CHECK(body_of(handle_request(reloaded, "POST", "/sessions", "")).at("id") != id);
}

TEST_CASE("repl and http give the same verdict") {
  TempStore tmp;
  SessionStore store(tmp.file());
  const std::string id = body_of(handle_request(store, "POST", "/sessions", "")).at("id");
  handle_request(store, "PUT", "/sessions/" + id + "/kb", kGroup3);
  auto http = body_of(
      handle_request(store, "POST", "/sessions/" + id + "/query", R"({"literal": "she will study late in the library"})"));

  Session s = run_lines({}, kGroup3);
  auto [after, text] = repl_eval("? she will study late in the library", s);
  CHECK(text == http.at("explanation").get<std::string>());
  CHECK(run_query(s, library).json.at("verdict") == http.at("verdict"));
}

TEST_CASE("sessions are independent under concurrent requests") {
  TempStore tmp;
  SessionStore store(tmp.file());
  std::vector<std::string> ids;
  for (int i = 0; i < 4; ++i) ids.push_back(body_of(handle_request(store, "POST", "/sessions", "")).at("id"));
  std::vector<std::future<bool>> jobs;
  for (int i = 0; i < 4; ++i)
    jobs.push_back(std::async(std::launch::async, [&, i] {
      const std::string base = "/sessions/" + ids[i];
      bool ok = handle_request(store, "PUT", base + "/kb", kGroup3).status == 200;
      for (int k = 0; k < 5; ++k) {
        const char* fact = k % 2 ? R"({"facts": ["the library is open"]})" : R"({"facts": ["not the library is open"]})";
        ok = ok && handle_request(store, "POST", base + "/facts", fact).status == 200;
        ok = ok && handle_request(store, "POST", base + "/query", R"({"literal": "she will study late in the library"})")
                           .status == 200;
      }
      return ok;
    }));
  for (auto& j : jobs) CHECK(j.get());
  SessionStore reloaded(tmp.file());
  CHECK(reloaded.size() == 4);
  for (const auto& id : ids) {
    auto j = body_of(handle_request(reloaded, "GET", "/sessions/" + id, ""));
    CHECK(j.at("facts").size() == 2);
  }
}

TEST_CASE("a real server answers over http") {
  TempStore tmp;
  ServerOptions opts;
  opts.port = 0;
  opts.store = tmp.file();
  std::promise<std::pair<int, std::function<void()>>> ready;
  opts.on_listening = [&](int port, std::function<void()> stop) { ready.set_value({port, std::move(stop)}); };
  std::thread server([&] { serve(opts); });
  auto [port, stop] = ready.get_future().get();

  httplib::Client cli("127.0.0.1", port);
  auto created = cli.Post("/sessions", "", "application/json");
  REQUIRE(created);
  CHECK(created->status == 201);
  const std::string id = parse_json(created->body).at("id");
  auto put = cli.Put("/sessions/" + id + "/kb", kGroup3, "text/plain");
  REQUIRE(put);
  CHECK(put->status == 200);
  auto q = cli.Post("/sessions/" + id + "/query", R"({"literal": "she will study late in the library"})",
                    "application/json");
  REQUIRE(q);
  CHECK(q->status == 200);
  CHECK(parse_json(q->body).at("verdict").at("answer") == "Maybe");
  auto missing = cli.Get("/sessions/zzz");
  REQUIRE(missing);
  CHECK(missing->status == 404);

  stop();
  server.join();
}
