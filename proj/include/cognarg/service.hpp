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

#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cognarg/cnl.hpp"
#include "cognarg/compiler.hpp"
#include "cognarg/engine.hpp"
#include "cognarg/serialize.hpp"

namespace cognarg::service {

// Awareness is derived: atoms of the kb, declared atoms and fact atoms, minus
// hidden ones. A conditional touching a hidden atom is inactive, which is how
// a group's premise is switched off without deleting it.
struct Session {
  std::string id;
  std::vector<std::string> kb_lines;  // accepted rule and declaration lines
  std::vector<Conditional> kb;
  std::set<Literal> facts;
  std::set<Atom> declared;
  std::set<Atom> hidden;
  ReasonerProfile profile;
  std::vector<std::pair<std::string, std::string>> history;
  std::optional<Literal> last_query;

  CognitiveState state() const;
  std::vector<Conditional> active_kb() const;
  KnowledgeBase knowledge_base() const;

  friend bool operator==(const Session&, const Session&) = default;
};

Json session_to_json(const Session& s);
Session session_from_json(const Json& j);

struct QueryOutcome {
  QueryVerdict verdict;
  Framework framework;
  std::string explanation;
  Json json;  // {v, verdict, explanation, tree}
};

struct QueryOptions {
  bool use_oracle = false;
  EngineOptions engine{};
};

// The single path every front end uses to answer a query.
QueryOutcome run_query(const Session& s, const Literal& l, const QueryOptions& opts = {});

// Replaces the kb of s with a statement file; fact lines add facts.
// Throws KbRejected carrying every diagnostic; s is untouched then.
struct KbRejected : Error {
  explicit KbRejected(std::vector<cnl::ParseError> d);
  std::vector<cnl::ParseError> diagnostics;
};
Session with_kb_text(const Session& s, std::string_view text);

// Adds facts (replacing any fact on the same atom).
Session with_facts(const Session& s, const std::vector<Literal>& facts, bool replace_all);

// Checks that the session still compiles; throws the compiler's Error if not.
void check_compiles(const Session& s);

std::pair<Session, std::string> repl_eval(std::string_view line, const Session& s,
                                          const QueryOptions& opts = {});

// Sessions persisted as one JSON file. Each session has its own lock; the
// store lock only guards the index and the file.
class SessionStore {
 public:
  explicit SessionStore(std::filesystem::path path);

  std::string create(const ReasonerProfile& profile = {});
  bool exists(const std::string& id) const;

  // Runs fn with exclusive access to the session. If fn returns a changed
  // session it is stored and flushed to disk. Returns false if id is unknown.
  template <typename Fn>
  bool with_session(const std::string& id, Fn&& fn) {
    std::shared_ptr<Entry> e = entry(id);
    if (!e) return false;
    std::lock_guard<std::mutex> lock(e->mu);
    Session before = e->session;
    fn(e->session);
    if (!(before == e->session)) persist(id, e->session);
    return true;
  }

  std::size_t size() const;

 private:
  struct Entry {
    std::mutex mu;
    Session session;
  };
  std::shared_ptr<Entry> entry(const std::string& id) const;
  void persist(const std::string& id, const Session& s);
  void flush_locked();

  std::filesystem::path path_;
  mutable std::mutex mu_;
  std::map<std::string, std::shared_ptr<Entry>> sessions_;
  std::map<std::string, Json> snapshots_;
  std::uint64_t counter_ = 0;
};

struct ServerOptions {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::filesystem::path store = "cognarg-store.json";
  std::optional<std::filesystem::path> static_dir;
  // Called once the socket is bound, with the bound port (port 0 picks a
  // free one) and a function that stops the server from any thread.
  std::function<void(int port, std::function<void()> stop)> on_listening;
};

// Blocks until the server stops.
int serve(const ServerOptions& opts);

// Request handler shared by serve() and tests: method, path and body in,
// status and JSON body out.
struct HttpReply {
  int status;
  std::string body;
};
HttpReply handle_request(SessionStore& store, std::string_view method, std::string_view path,
                         std::string_view body);

}  // namespace cognarg::service
