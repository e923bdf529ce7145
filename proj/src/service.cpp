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

#include "cognarg/service.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include <httplib.h>

#include "cognarg/oracle.hpp"

namespace cognarg::service {

CognitiveState Session::state() const {
  std::set<Atom> aware(declared.begin(), declared.end());
  for (const auto& c : kb) {
    for (const auto& k : c.condition) aware.insert(k.atom);
    aware.insert(c.consequent.atom);
  }
  for (const auto& h : hidden) aware.erase(h);
  return make_state(facts, std::move(aware));
}

std::vector<Conditional> Session::active_kb() const {
  CognitiveState st = state();
  std::vector<Conditional> out;
  for (const auto& c : kb) {
    bool active = st.is_aware(c.consequent.atom);
    for (const auto& k : c.condition) active = active && st.is_aware(k.atom);
    if (active) out.push_back(c);
  }
  return out;
}

KnowledgeBase Session::knowledge_base() const {
  KnowledgeBase k;
  k.conditionals = active_kb();
  k.state = state();
  k.atoms = vocabulary(k.conditionals, k.state);
  k.profile = profile;
  return k;
}

namespace {

Json strings(const auto& xs, auto&& fn) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(fn(x));
  return out;
}

std::vector<Conditional> rules_of(const std::vector<std::string>& lines) {
  std::vector<cnl::Statement> statements;
  for (const auto& l : lines) statements.push_back(cnl::parse_statement(l));
  return cnl::conditionals_of(statements);
}

}  // namespace

Json session_to_json(const Session& s) {
  Json history = Json::array();
  for (const auto& [in, out] : s.history) history.push_back(Json{{"input", in}, {"output", out}});
  auto text = [](const Literal& l) { return l.text(); };
  auto name = [](const Atom& a) { return a.name(); };
  return Json{{"v", kFormatVersion},
              {"id", s.id},
              {"kb_lines", strings(s.kb_lines, [](const std::string& x) { return x; })},
              {"facts", strings(s.facts, text)},
              {"declared", strings(s.declared, name)},
              {"hidden", strings(s.hidden, name)},
              {"profile", profile_to_json(s.profile)},
              {"last_query", s.last_query ? Json(s.last_query->text()) : Json(nullptr)},
              {"history", history},
              {"knowledge_base", kb_to_json(s.knowledge_base())}};
}

Session session_from_json(const Json& j) {
  if (!j.is_object() || j.value("v", 0) != kFormatVersion)
    throw Error(ErrorCode::Format, "session: missing or unsupported \"v\"");
  try {
    Session s;
    s.id = j.at("id").get<std::string>();
    for (const auto& l : j.at("kb_lines")) s.kb_lines.push_back(l.get<std::string>());
    s.kb = rules_of(s.kb_lines);
    for (const auto& f : j.at("facts")) s.facts.insert(parse_literal(f.get<std::string>()));
    for (const auto& a : j.at("declared")) s.declared.emplace(a.get<std::string>());
    for (const auto& a : j.at("hidden")) s.hidden.emplace(a.get<std::string>());
    s.profile = profile_from_json(j.at("profile"));
    if (!j.at("last_query").is_null()) s.last_query = parse_literal(j.at("last_query").get<std::string>());
    for (const auto& h : j.at("history"))
      s.history.emplace_back(h.at("input").get<std::string>(), h.at("output").get<std::string>());
    return s;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::Format, std::string("session: ") + e.what());
  }
}

QueryOutcome run_query(const Session& s, const Literal& l, const QueryOptions& opts) {
  KnowledgeBase kb = s.knowledge_base();
  Framework f = compile(kb);
  QueryVerdict v = opts.use_oracle ? oracle::oracle_query(l, f, kb.state) : query(l, f, kb.state, opts.engine);
  std::string explanation = cnl::render_explanation(v, f);
  Json verdict = verdict_to_json(v, f);
  Json tree = verdict.at("witnesses");
  verdict.erase("witnesses");
  Json json{{"v", kFormatVersion}, {"verdict", verdict}, {"explanation", explanation}, {"tree", tree}};
  return {std::move(v), std::move(f), std::move(explanation), std::move(json)};
}

KbRejected::KbRejected(std::vector<cnl::ParseError> d)
    : Error(ErrorCode::Format, d.empty() ? std::string("knowledge base rejected") : std::string(d.front().what())),
      diagnostics(std::move(d)) {}

void check_compiles(const Session& s) { (void)compile(s.knowledge_base()); }

Session with_kb_text(const Session& s, std::string_view text) {
  cnl::StatementFile file = cnl::parse_file(text);
  for (const auto& pl : file.lines)
    if (std::holds_alternative<cnl::Query>(pl.statement))
      file.errors.emplace_back(pl.line, 1, "queries are not part of a knowledge base", "a rule, fact or aware line");
  if (!file.errors.empty()) {
    std::sort(file.errors.begin(), file.errors.end(),
              [](const cnl::ParseError& a, const cnl::ParseError& b) { return a.line < b.line; });
    throw KbRejected(std::move(file.errors));
  }
  Session out = s;
  out.kb_lines.clear();
  out.declared.clear();
  std::vector<Literal> facts;
  for (const auto& pl : file.lines) {
    if (const auto* f = std::get_if<cnl::FactAssertion>(&pl.statement)) {
      facts.push_back(f->literal);
    } else if (const auto* a = std::get_if<cnl::AwarenessDecl>(&pl.statement)) {
      out.declared.insert(a->atom);
    } else {
      out.kb_lines.push_back(pl.text);
    }
  }
  out.kb = rules_of(out.kb_lines);
  out = with_facts(out, facts, false);
  try {
    check_compiles(out);
  } catch (const Error& e) {
    throw KbRejected({cnl::ParseError(0, 1, e.what(), "")});
  }
  return out;
}

Session with_facts(const Session& s, const std::vector<Literal>& facts, bool replace_all) {
  Session out = s;
  if (replace_all) out.facts.clear();
  for (const auto& f : facts) {
    if (f.atom.is_exo()) throw Error(ErrorCode::ExoFact, "exogenous atoms cannot be observed");
    out.facts.erase(complement(f));
    out.facts.insert(f);
    out.hidden.erase(f.atom);
  }
  check_compiles(out);
  return out;
}

namespace {

std::string describe_conditional(const Conditional& c) {
  std::string out = c.id + ": ";
  for (std::size_t i = 0; i < c.condition.size(); ++i) out += (i ? " and " : "") + c.condition[i].text();
  return out + " => " + c.consequent.text() + " (" + std::string(to_string(c.interpretation)) + ")";
}

bool parse_switch(std::string_view v) {
  if (v == "on" || v == "true" || v == "yes" || v == "1") return true;
  if (v == "off" || v == "false" || v == "no" || v == "0") return false;
  throw Error(ErrorCode::Format, "expected on or off, got '" + std::string(v) + "'");
}

std::string tree_text(const QueryOutcome& q) { return q.json.at("tree").dump(2); }

const char* kHelp =
    "statements: whenever X then Y | when not X then not Y | fact: [not] X | aware: X | ? [not] X\n"
    ":profile [mode=predictive|explanatory] [exo=on|off] [demote=on|off] [<id>=sufficient|necessary|"
    "sufficient_and_necessary] [clear]\n"
    ":facts [clear]   :forget X   :hide X   :show X   :kb   :tree   :reset   :help";

std::pair<Session, std::string> meta_command(std::string_view line, const Session& s, const QueryOptions& opts) {
  std::istringstream in{std::string(line.substr(1))};
  std::string cmd;
  in >> cmd;
  std::string rest;
  std::getline(in, rest);
  Session out = s;
  if (cmd == "help") return {out, kHelp};
  if (cmd == "reset") {
    Session fresh;
    fresh.id = s.id;
    return {fresh, "ok: session reset"};
  }
  if (cmd == "kb") {
    std::string text;
    auto active = s.active_kb();
    for (const auto& c : s.kb) {
      bool on = std::find(active.begin(), active.end(), c) != active.end();
      text += describe_conditional(c) + (on ? "" : " [inactive]") + "\n";
    }
    for (const auto& a : s.declared) text += "aware: " + a.name() + "\n";
    for (const auto& a : s.hidden) text += "hidden: " + a.name() + "\n";
    if (!text.empty()) text.pop_back();
    return {out, text.empty() ? "(empty knowledge base)" : text};
  }
  if (cmd == "facts") {
    std::istringstream args(rest);
    std::string arg;
    if (args >> arg) {
      if (arg != "clear") throw Error(ErrorCode::Format, "usage: :facts [clear]");
      out.facts.clear();
      check_compiles(out);
      return {out, "ok: facts cleared"};
    }
    std::string text;
    for (const auto& f : s.facts) text += (text.empty() ? "" : "\n") + f.text();
    return {out, text.empty() ? "(no facts)" : text};
  }
  if (cmd == "forget") {
    Literal l = cnl::parse_phrase_literal(rest);
    if (!out.facts.erase(l)) throw Error(ErrorCode::Format, "not a fact: " + l.text());
    check_compiles(out);
    return {out, "ok: forgot " + l.text()};
  }
  if (cmd == "hide" || cmd == "show") {
    Atom a = cnl::canonicalize_phrase(rest);
    if (cmd == "hide") {
      if (s.facts.contains({a, Sign::Positive}) || s.facts.contains({a, Sign::Negative}))
        throw Error(ErrorCode::Format, "cannot hide " + a.name() + ": it is a fact");
      out.hidden.insert(a);
    } else {
      out.hidden.erase(a);
    }
    check_compiles(out);
    return {out, "ok: " + cmd + " " + a.name()};
  }
  if (cmd == "profile") {
    std::istringstream args(rest);
    std::string kv;
    bool changed = false;
    while (args >> kv) {
      changed = true;
      if (kv == "clear") {
        out.profile.interpretation_overrides.clear();
        continue;
      }
      auto eq = kv.find('=');
      if (eq == std::string::npos) throw Error(ErrorCode::Format, "expected key=value, got '" + kv + "'");
      std::string key = kv.substr(0, eq), value = kv.substr(eq + 1);
      if (key == "mode")
        out.profile.mode = parse_mode(value);
      else if (key == "exo")
        out.profile.allow_exogenous = parse_switch(value);
      else if (key == "demote")
        out.profile.auto_demote_necessity = parse_switch(value);
      else
        out.profile.interpretation_overrides[key] = parse_interpretation(value);
    }
    if (changed) check_compiles(out);
    return {out, profile_to_json(out.profile).dump()};
  }
  if (cmd == "tree") {
    if (!s.last_query) throw Error(ErrorCode::Format, "no query yet");
    return {out, tree_text(run_query(s, *s.last_query, opts))};
  }
  throw Error(ErrorCode::Format, "unknown command ':" + cmd + "' (try :help)");
}

}  // namespace

std::pair<Session, std::string> repl_eval(std::string_view line, const Session& s, const QueryOptions& opts) {
  std::string_view body = line.substr(0, line.find('#'));
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front()))) body.remove_prefix(1);
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) body.remove_suffix(1);
  if (body.empty()) return {s, ""};
  try {
    std::pair<Session, std::string> result;
    if (body.front() == ':') {
      result = meta_command(body, s, opts);
    } else {
      cnl::Statement st = cnl::parse_statement(body);
      Session out = s;
      std::string msg;
      if (const auto* q = std::get_if<cnl::Query>(&st)) {
        msg = run_query(s, q->literal, opts).explanation;
        out.last_query = q->literal;
      } else if (const auto* f = std::get_if<cnl::FactAssertion>(&st)) {
        out = with_facts(s, {f->literal}, false);
        msg = "ok: fact " + f->literal.text();
      } else if (const auto* a = std::get_if<cnl::AwarenessDecl>(&st)) {
        out.declared.insert(a->atom);
        out.hidden.erase(a->atom);
        check_compiles(out);
        msg = "ok: aware of " + a->atom.name();
      } else {
        out.kb_lines.emplace_back(body);
        out.kb = rules_of(out.kb_lines);
        check_compiles(out);
        msg = "ok: " + describe_conditional(out.kb.back());
        for (const auto& c : out.kb)
          if (s.kb.size() == out.kb.size() && std::find(s.kb.begin(), s.kb.end(), c) == s.kb.end())
            msg = "ok: " + describe_conditional(c);
      }
      result = {std::move(out), std::move(msg)};
    }
    result.first.history.emplace_back(std::string(body), result.second);
    return result;
  } catch (const Error& e) {
    return {s, std::string("error: ") + e.what()};
  }
}

SessionStore::SessionStore(std::filesystem::path path) : path_(std::move(path)) {
  if (!std::filesystem::exists(path_)) return;
  std::ifstream in(path_);
  std::stringstream buf;
  buf << in.rdbuf();
  if (buf.str().empty()) return;
  Json j = parse_json(buf.str());
  if (j.value("v", 0) != kFormatVersion) throw Error(ErrorCode::Format, "store: unsupported \"v\"");
  counter_ = j.value("counter", std::uint64_t{0});
  for (const auto& [id, sj] : j.at("sessions").items()) {
    auto e = std::make_shared<Entry>();
    e->session = session_from_json(sj);
    sessions_.emplace(id, e);
    snapshots_.emplace(id, sj);
  }
}

std::string SessionStore::create(const ReasonerProfile& profile) {
  std::lock_guard<std::mutex> lock(mu_);
  std::string id;
  do id = "s" + std::to_string(++counter_);
  while (sessions_.contains(id));
  auto e = std::make_shared<Entry>();
  e->session.id = id;
  e->session.profile = profile;
  sessions_.emplace(id, e);
  snapshots_[id] = session_to_json(e->session);
  flush_locked();
  return id;
}

bool SessionStore::exists(const std::string& id) const {
  std::lock_guard<std::mutex> lock(mu_);
  return sessions_.contains(id);
}

std::size_t SessionStore::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return sessions_.size();
}

std::shared_ptr<SessionStore::Entry> SessionStore::entry(const std::string& id) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

void SessionStore::persist(const std::string& id, const Session& s) {
  Json snapshot = session_to_json(s);
  std::lock_guard<std::mutex> lock(mu_);
  snapshots_[id] = std::move(snapshot);
  flush_locked();
}

void SessionStore::flush_locked() {
  Json sessions = Json::object();
  for (const auto& [id, sj] : snapshots_) sessions[id] = sj;
  Json doc{{"v", kFormatVersion}, {"counter", counter_}, {"sessions", sessions}};
  if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());
  std::filesystem::path tmp = path_;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << dump(doc);
    if (!out) throw Error(ErrorCode::Format, "cannot write store " + tmp.string());
  }
  std::filesystem::rename(tmp, path_);
}

namespace {

HttpReply reply(int status, const Json& j) { return {status, dump(j)}; }

HttpReply error_reply(int status, std::string_view kind, std::string_view message, Json diagnostics = Json::array()) {
  return reply(status, Json{{"v", kFormatVersion},
                            {"error", kind},
                            {"message", message},
                            {"diagnostics", std::move(diagnostics)}});
}

Json diagnostics_json(const std::vector<cnl::ParseError>& errs) {
  Json out = Json::array();
  for (const auto& e : errs)
    out.push_back(Json{{"line", e.line}, {"column", e.column}, {"message", e.message}, {"expected", e.expected}});
  return out;
}

std::vector<Literal> phrase_list(const Json& j, std::string_view key) {
  std::vector<Literal> out;
  if (!j.contains(key)) return out;
  for (const auto& x : j.at(key)) out.push_back(cnl::parse_phrase_literal(x.get<std::string>()));
  return out;
}

}  // namespace

HttpReply handle_request(SessionStore& store, std::string_view method, std::string_view path_view,
                         std::string_view body) {
  static const std::regex kSession(R"(^/sessions/([A-Za-z0-9_-]+)(/(kb|facts|query|profile|awareness))?/?$)");
  const std::string path(path_view);
  try {
    if (path == "/sessions" || path == "/sessions/") {
      if (method != "POST") return error_reply(405, "method_not_allowed", "use POST");
      ReasonerProfile profile;
      if (!body.empty()) {
        Json j = parse_json(body);
        if (j.contains("profile")) profile = profile_from_json(j.at("profile"));
      }
      std::string id = store.create(profile);
      return reply(201, Json{{"v", kFormatVersion}, {"id", id}});
    }
    std::smatch m;
    if (!std::regex_match(path, m, kSession)) return error_reply(404, "not_found", "no such endpoint");
    const std::string id = m[1];
    const std::string action = m[3];
    HttpReply result{500, ""};
    bool found = store.with_session(id, [&](Session& s) {
      if (action.empty()) {
        result = method == "GET" ? reply(200, session_to_json(s)) : error_reply(405, "method_not_allowed", "use GET");
        return;
      }
      if (action == "kb") {
        if (method != "PUT") {
          result = error_reply(405, "method_not_allowed", "use PUT");
          return;
        }
        try {
          s = with_kb_text(s, body);
          result = reply(200, session_to_json(s));
        } catch (const KbRejected& e) {
          result = error_reply(422, "kb_rejected", e.what(), diagnostics_json(e.diagnostics));
        }
        return;
      }
      if (method != (action == "profile" ? "PUT" : "POST")) {
        result = error_reply(405, "method_not_allowed", action == "profile" ? "use PUT" : "use POST");
        return;
      }
      Json j = body.empty() ? Json::object() : parse_json(body);
      if (action == "facts") {
        Session next = with_facts(s, phrase_list(j, "facts"), j.value("replace", false));
        for (const auto& l : phrase_list(j, "retract")) next.facts.erase(l);
        check_compiles(next);
        s = std::move(next);
        result = reply(200, session_to_json(s));
      } else if (action == "query") {
        if (!j.contains("literal")) {
          result = error_reply(422, "bad_request", "body must contain \"literal\"");
          return;
        }
        Literal l = cnl::parse_phrase_literal(j.at("literal").get<std::string>());
        QueryOptions opts;
        opts.use_oracle = j.value("oracle", false);
        QueryOutcome q = run_query(s, l, opts);
        s.last_query = l;
        result = reply(200, q.json);
      } else if (action == "profile") {
        Session next = s;
        next.profile = profile_from_json(j.contains("profile") ? j.at("profile") : j);
        check_compiles(next);
        s = std::move(next);
        result = reply(200, session_to_json(s));
      } else if (action == "awareness") {
        Session next = s;
        for (const auto& l : phrase_list(j, "declare")) {
          next.declared.insert(l.atom);
          next.hidden.erase(l.atom);
        }
        for (const auto& l : phrase_list(j, "show")) next.hidden.erase(l.atom);
        for (const auto& l : phrase_list(j, "hide")) {
          if (next.facts.contains(l) || next.facts.contains(complement(l)))
            throw Error(ErrorCode::Format, "cannot hide " + l.atom.name() + ": it is a fact");
          next.hidden.insert(l.atom);
        }
        check_compiles(next);
        s = std::move(next);
        result = reply(200, session_to_json(s));
      }
    });
    if (!found) return error_reply(404, "not_found", "unknown session '" + id + "'");
    return result;
  } catch (const cnl::ParseError& e) {
    return error_reply(422, "parse_error", e.what(), diagnostics_json({e}));
  } catch (const Error& e) {
    return error_reply(e.code() == ErrorCode::Format ? 400 : 422, "rejected", e.what());
  } catch (const Json::exception& e) {
    return error_reply(400, "bad_request", e.what());
  }
}

int serve(const ServerOptions& opts) {
  SessionStore store(opts.store);
  httplib::Server svr;
  auto handler = [&store](const httplib::Request& req, httplib::Response& res) {
    HttpReply r = handle_request(store, req.method, req.path, req.body);
    res.status = r.status;
    res.set_content(r.body, "application/json");
  };
  svr.Post(R"(/sessions.*)", handler);
  svr.Put(R"(/sessions.*)", handler);
  svr.Get(R"(/sessions.*)", handler);
  if (opts.static_dir && !svr.set_mount_point("/", opts.static_dir->string()))
    throw Error(ErrorCode::Format, "static directory not found: " + opts.static_dir->string());
  const int port = opts.port == 0 ? svr.bind_to_any_port(opts.host) : svr.bind_to_port(opts.host, opts.port) ? opts.port : -1;
  if (port < 0) return 1;
  if (opts.on_listening) opts.on_listening(port, [&svr] { svr.stop(); });
  return svr.listen_after_bind() ? 0 : 1;
}

}  // namespace cognarg::service
