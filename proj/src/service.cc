// Copyright 2026 The maskmt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "maskmt/service.h"

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <thread>
#include <vector>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_split.h"
#include "httplib.h"
#include "json_codec.h"

namespace maskmt {
namespace {

std::string NowUtc() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string NewSessionId() {
  static std::mutex mu;
  static std::random_device device;
  std::lock_guard<std::mutex> lock(mu);
  std::string id;
  for (int i = 0; i < 4; ++i) absl::StrAppendFormat(&id, "%08x", device());
  return id;
}

HttpReply Reply(int status, const Json& body) {
  return HttpReply{status, body.dump()};
}

HttpReply Error(int status, absl::string_view message) {
  return Reply(status, Json{{"error", message}});
}

int StatusForEncodeError(const absl::Status& s) {
  return s.code() == absl::StatusCode::kInternal ? 500 : 422;
}

struct Session {
  std::mutex mu;
  std::string id;
  std::string created_at;
  std::string x_pri;
  SessionState state = SessionState::kDrafted;
  std::optional<EncodeResult> encoded;
  std::string engine;
  std::optional<std::string> y_pub;
  std::optional<DecodeResult> decoded;
};

Json SessionView(const Session& s) {
  Json j;
  j["session_id"] = s.id;
  j["created_at"] = s.created_at;
  j["state"] = SessionStateName(s.state);
  j["text"] = s.x_pri;
  if (s.encoded) j["encode"] = EncodeResultToJson(*s.encoded);
  if (!s.engine.empty()) j["engine"] = s.engine;
  if (s.y_pub) j["y_pub"] = *s.y_pub;
  if (s.decoded) {
    Json d = DecodeResultToJson(*s.decoded);
    j["y_pri"] = d["y_pri"];
    j["misses"] = d["misses"];
  }
  return j;
}

}  // namespace

absl::string_view SessionStateName(SessionState state) {
  switch (state) {
    case SessionState::kDrafted:
      return "drafted";
    case SessionState::kEncoded:
      return "encoded";
    case SessionState::kSent:
      return "sent";
    case SessionState::kDecoded:
      return "decoded";
  }
  return "drafted";
}

struct Service::Impl {
  Impl(Workspace& ws, ServiceOptions opts)
      : workspace(ws), options(std::move(opts)) {}

  HttpReply Route(absl::string_view method, absl::string_view path,
                  absl::string_view body);

  HttpReply CreateSession(absl::string_view body);
  HttpReply Encode(Session& s, absl::string_view body);
  HttpReply StoreEncoded(Session& s, EncodeResult result);
  HttpReply Send(Session& s, absl::string_view body);
  HttpReply Decode(Session& s);
  HttpReply Export(Session& s);
  HttpReply Engines();
  HttpReply DictStats();
  HttpReply Audit();

  std::shared_ptr<Session> FindSession(absl::string_view id) {
    std::lock_guard<std::mutex> lock(mu);
    auto it = sessions.find(std::string(id));
    return it == sessions.end() ? nullptr : it->second;
  }

  Workspace& workspace;
  ServiceOptions options;
  mutable std::mutex mu;
  std::map<std::string, std::shared_ptr<Session>> sessions;

  httplib::Server server;
  std::thread thread;
  std::mutex run_mu;
  bool running = false;
};

HttpReply Service::Impl::Route(absl::string_view method, absl::string_view path,
                               absl::string_view body) {
  std::vector<absl::string_view> parts =
      absl::StrSplit(path, '/', absl::SkipEmpty());
  if (parts.size() < 2 || parts[0] != "v1") return Error(404, "no such route");

  if (parts.size() == 2 && parts[1] == "engines" && method == "GET") {
    return Engines();
  }
  if (parts.size() == 3 && parts[1] == "dict" && parts[2] == "stats" &&
      method == "GET") {
    return DictStats();
  }
  if (parts.size() == 2 && parts[1] == "audit" && method == "GET") {
    return Audit();
  }
  if (parts[1] != "sessions") return Error(404, "no such route");
  if (parts.size() == 2) {
    if (method == "POST") return CreateSession(body);
    return Error(405, "method not allowed");
  }

  std::shared_ptr<Session> session = FindSession(parts[2]);
  if (session == nullptr) {
    return Error(404, absl::StrCat("unknown session ", parts[2]));
  }
  if (parts.size() == 3) {
    if (method == "GET") {
      std::lock_guard<std::mutex> lock(session->mu);
      return Reply(200, SessionView(*session));
    }
    if (method == "DELETE") {
      std::lock_guard<std::mutex> lock(mu);
      sessions.erase(std::string(parts[2]));
      return Reply(200, Json{{"deleted", parts[2]}});
    }
    return Error(405, "method not allowed");
  }
  if (parts.size() != 4 || method != "POST") {
    return Error(404, "no such route");
  }
  std::lock_guard<std::mutex> lock(session->mu);
  if (parts[3] == "encode") return Encode(*session, body);
  if (parts[3] == "send") return Send(*session, body);
  if (parts[3] == "decode") return Decode(*session);
  if (parts[3] == "export") return Export(*session);
  return Error(404, "no such route");
}

HttpReply Service::Impl::CreateSession(absl::string_view body) {
  absl::StatusOr<Json> req = ParseJson(body);
  if (!req.ok() || !req->is_object()) return Error(422, "expected a JSON object");
  auto text = req->find("text");
  if (text == req->end() || !text->is_string() ||
      text->get<std::string>().empty()) {
    return Error(422, "\"text\" must be a non-empty string");
  }
  auto session = std::make_shared<Session>();
  session->id = NewSessionId();
  session->created_at = NowUtc();
  session->x_pri = text->get<std::string>();
  {
    std::lock_guard<std::mutex> lock(mu);
    sessions.emplace(session->id, session);
  }
  return Reply(201, Json{{"session_id", session->id},
                         {"state", SessionStateName(session->state)}});
}

HttpReply Service::Impl::Encode(Session& s, absl::string_view body) {
  if (s.state != SessionState::kDrafted && s.state != SessionState::kEncoded) {
    return Error(409, absl::StrCat("cannot encode a session in state ",
                                   SessionStateName(s.state)));
  }
  absl::StatusOr<Json> req = ParseJson(body);
  if (!req.ok() || !req->is_object()) return Error(422, "expected a JSON object");

  MechanismParams params;
  auto method = req->find("method");
  if (method == req->end() || !method->is_string()) {
    return Error(422, "\"method\" must be a string");
  }
  std::optional<Method> m = ParseMethod(method->get<std::string>());
  if (!m) {
    return Error(422, absl::StrCat("unknown method ", method->get<std::string>()));
  }
  params.method = *m;

  // Explicit substitutions [{position, replacement}] bypass the randomized
  // encoders. PRISM* sessions get tagged records.
  if (auto subs = req->find("substitutions"); subs != req->end()) {
    if (!subs->is_array()) return Error(422, "\"substitutions\" must be an array");
    if (*m == Method::kMixed) {
      return Error(422, "explicit substitutions need prism_r or prism_star");
    }
    std::vector<ForcedSubstitution> forced;
    for (const Json& sub : *subs) {
      if (!sub.is_object() || !sub.contains("position") ||
          !sub["position"].is_number_unsigned() ||
          !sub.contains("replacement") || !sub["replacement"].is_string()) {
        return Error(422,
                     "each substitution needs a position and a replacement");
      }
      forced.push_back({sub["position"].get<std::size_t>(),
                        sub["replacement"].get<std::string>()});
    }
    absl::StatusOr<EncodeResult> result = EncodeWithSubstitutions(
        s.x_pri, forced,
        *m == Method::kPrismStar ? &workspace.tagger() : nullptr);
    if (!result.ok()) return Error(422, result.status().message());
    return StoreEncoded(s, *std::move(result));
  }

  auto ratio = req->find("ratio");
  if (ratio == req->end() || !ratio->is_number()) {
    return Error(422, "\"ratio\" must be a number");
  }
  params.ratio = ratio->get<double>();
  if (auto beta = req->find("beta"); beta != req->end()) {
    if (!beta->is_number()) return Error(422, "\"beta\" must be a number");
    params.beta = beta->get<double>();
  }
  params.seed = workspace.default_seed();
  if (auto seed = req->find("seed"); seed != req->end() && !seed->is_null()) {
    if (seed->is_number_unsigned()) {
      params.seed = seed->get<uint64_t>();
    } else if (seed->is_string()) {
      absl::StatusOr<uint64_t> parsed = ParseSeed(seed->get<std::string>());
      if (!parsed.ok()) return Error(422, parsed.status().message());
      params.seed = *parsed;
    } else {
      return Error(422, "\"seed\" must be a non-negative integer");
    }
  }
  absl::StatusOr<EncodeResult> result = maskmt::Encode(
      s.x_pri, workspace.dictionaries(), params, workspace.tagger());
  if (!result.ok()) {
    return Error(StatusForEncodeError(result.status()),
                 result.status().message());
  }
  return StoreEncoded(s, *std::move(result));
}

HttpReply Service::Impl::StoreEncoded(Session& s, EncodeResult result) {
  s.encoded = std::move(result);
  s.state = SessionState::kEncoded;
  Json out = EncodeResultToJson(*s.encoded);
  out["session_id"] = s.id;
  out["state"] = SessionStateName(s.state);
  return Reply(200, out);
}

HttpReply Service::Impl::Send(Session& s, absl::string_view body) {
  if (s.state != SessionState::kEncoded) {
    return Error(409, absl::StrCat("cannot send a session in state ",
                                   SessionStateName(s.state)));
  }
  absl::StatusOr<Json> req = ParseJson(body);
  if (!req.ok() || !req->is_object()) return Error(422, "expected a JSON object");
  auto engine = req->find("engine");
  if (engine == req->end() || !engine->is_string()) {
    return Error(422, "\"engine\" must be a string");
  }
  const std::string id = engine->get<std::string>();
  if (!workspace.gateway().Contains(id)) {
    return Error(422, absl::StrCat("unknown engine ", id));
  }
  absl::StatusOr<std::string> y_pub =
      workspace.gateway().Translate(id, s.encoded->x_pub);
  if (!y_pub.ok()) return Error(502, y_pub.status().message());
  s.engine = id;
  s.y_pub = *std::move(y_pub);
  s.state = SessionState::kSent;
  return Reply(200, Json{{"y_pub", *s.y_pub},
                         {"state", SessionStateName(s.state)}});
}

HttpReply Service::Impl::Decode(Session& s) {
  if (s.state != SessionState::kSent) {
    return Error(409, absl::StrCat("cannot decode a session in state ",
                                   SessionStateName(s.state)));
  }
  absl::StatusOr<DecodeResult> result = maskmt::Decode(
      *s.y_pub, s.encoded->history, workspace.dictionaries());
  if (!result.ok()) return Error(422, result.status().message());
  s.decoded = *std::move(result);
  s.state = SessionState::kDecoded;
  Json out = DecodeResultToJson(*s.decoded);
  out["state"] = SessionStateName(s.state);
  return Reply(200, out);
}

HttpReply Service::Impl::Export(Session& s) {
  if (options.session_dir.empty()) {
    return Error(409, "no session directory configured");
  }
  std::error_code ec;
  std::filesystem::create_directories(options.session_dir, ec);
  if (ec) return Error(500, ec.message());
  const std::string path =
      (std::filesystem::path(options.session_dir) / (s.id + ".json")).string();
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return Error(500, absl::StrCat("cannot write ", path));
  out << SessionView(s).dump(2) << '\n';
  if (!out) return Error(500, absl::StrCat("write failed: ", path));
  return Reply(200, Json{{"path", path}});
}

HttpReply Service::Impl::Engines() {
  Json list = Json::array();
  for (const EngineInfo& info : workspace.gateway().List()) {
    list.push_back(EngineInfoToJson(info));
  }
  return Reply(200, Json{{"engines", list}});
}

HttpReply Service::Impl::DictStats() {
  Json all = Json::array();
  for (const WordDictionary* d : {workspace.plain(), workspace.pos_keyed()}) {
    if (d == nullptr) continue;
    all.push_back(Json{{"entries", d->size()},
                       {"vocab_size", d->source_vocab().size()},
                       {"mode", DictionaryModeName(d->mode())}});
  }
  if (all.empty()) return Reply(200, Json{{"entries", 0},
                                          {"vocab_size", 0},
                                          {"mode", nullptr},
                                          {"dictionaries", all}});
  Json out = all[0];
  out["dictionaries"] = all;
  return Reply(200, out);
}

HttpReply Service::Impl::Audit() {
  Json records = Json::array();
  for (const AuditRecord& r : workspace.gateway().audit().Records()) {
    records.push_back(AuditRecordToJson(r));
  }
  return Reply(200, Json{{"records", records}});
}

Service::Service(Workspace& workspace, ServiceOptions options)
    : impl_(std::make_unique<Impl>(workspace, std::move(options))) {
  auto handler = [this](const httplib::Request& req, httplib::Response& res) {
    HttpReply reply = impl_->Route(req.method, req.path, req.body);
    res.status = reply.status;
    res.set_content(reply.body, "application/json");
  };
  impl_->server.Get(".*", handler);
  impl_->server.Post(".*", handler);
  impl_->server.Delete(".*", handler);
}

Service::~Service() { Stop(); }

HttpReply Service::Handle(absl::string_view method, absl::string_view path,
                          absl::string_view body) {
  return impl_->Route(method, path, body);
}

absl::StatusOr<int> Service::Start() {
  std::lock_guard<std::mutex> lock(impl_->run_mu);
  if (impl_->running) return absl::FailedPreconditionError("already running");
  int port = impl_->options.port;
  if (port == 0) {
    port = impl_->server.bind_to_any_port(impl_->options.bind_address);
    if (port < 0) {
      return absl::UnavailableError(
          absl::StrCat("cannot bind ", impl_->options.bind_address));
    }
  } else if (!impl_->server.bind_to_port(impl_->options.bind_address, port)) {
    return absl::UnavailableError(absl::StrCat(
        "cannot bind ", impl_->options.bind_address, ":", port));
  }
  impl_->running = true;
  impl_->thread = std::thread([this] { impl_->server.listen_after_bind(); });
  return port;
}

void Service::Wait() {
  std::thread t;
  {
    std::lock_guard<std::mutex> lock(impl_->run_mu);
    if (!impl_->running || !impl_->thread.joinable()) return;
    t = std::move(impl_->thread);
  }
  t.join();
}

void Service::Stop() {
  impl_->server.stop();
  Wait();
  std::lock_guard<std::mutex> lock(impl_->run_mu);
  impl_->running = false;
}

std::size_t Service::session_count() const {
  std::lock_guard<std::mutex> lock(impl_->mu);
  return impl_->sessions.size();
}

}  // namespace maskmt
