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

#include "maskmt/engine.h"

#include <chrono>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_replace.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"
#include "httplib.h"
#include "json.hpp"
#include "maskmt/fixture_lexicon.h"
#include "maskmt/text.h"

namespace maskmt {
namespace {

std::string LanguageName(absl::string_view code) {
  static const std::map<std::string, std::string, std::less<>> kNames = {
      {"en", "English"}, {"fr", "French"},   {"de", "German"},
      {"es", "Spanish"}, {"it", "Italian"},  {"pt", "Portuguese"},
      {"nl", "Dutch"},   {"ja", "Japanese"}, {"zh", "Chinese"}};
  auto it = kNames.find(code);
  return it != kNames.end() ? it->second : std::string(code);
}

}  // namespace

absl::string_view EngineKindName(EngineKind kind) {
  return kind == EngineKind::kMock ? "mock" : "remote";
}

absl::Status ValidateDescriptor(const EngineDescriptor& d) {
  if (d.id.empty()) return absl::InvalidArgumentError("engine id is empty");
  if (d.source_lang.empty() || d.target_lang.empty()) {
    return absl::InvalidArgumentError(
        absl::StrCat("engine ", d.id, ": language codes are required"));
  }
  if (d.source_lang == d.target_lang) {
    return absl::InvalidArgumentError(absl::StrCat(
        "engine ", d.id, ": source and target language are both ",
        d.source_lang));
  }
  if (d.kind == EngineKind::kRemote &&
      (!d.endpoint.has_value() || d.endpoint->url.empty())) {
    return absl::InvalidArgumentError(
        absl::StrCat("engine ", d.id, ": remote engines need an endpoint url"));
  }
  return absl::OkStatus();
}

// ---------------------------------------------------------------------------
// MockLexicon

absl::StatusOr<MockLexicon> MockLexicon::Create(
    std::map<std::string, std::string> entries, UnknownWordPolicy policy) {
  std::map<std::string, std::string> lowered;
  std::set<std::string> targets;
  for (auto& [source, target] : entries) {
    if (source.empty() || target.empty()) {
      return absl::InvalidArgumentError("mock lexicon has an empty entry");
    }
    std::string t = ToLower(target);
    if (!targets.insert(t).second) {
      return absl::InvalidArgumentError(absl::StrCat(
          "mock lexicon is not one-to-one: '", t, "' has several sources"));
    }
    lowered[ToLower(source)] = std::move(t);
  }
  return MockLexicon(std::move(lowered), policy);
}

const MockLexicon& MockLexicon::Fixture() {
  static const MockLexicon* lexicon =
      new MockLexicon(*Create(FixtureTranslationTable()));
  return *lexicon;
}

absl::StatusOr<MockLexicon> MockLexicon::FromFile(const std::string& path,
                                                  UnknownWordPolicy policy) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::map<std::string, std::string> entries;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    absl::string_view view = absl::StripTrailingAsciiWhitespace(line);
    if (view.empty() || view.front() == '#') continue;
    std::vector<std::string> fields = absl::StrSplit(view, '\t');
    if (fields.size() != 2) {
      return absl::InvalidArgumentError(absl::StrCat(
          path, ":", line_no, ": expected `source<TAB>target`"));
    }
    entries[fields[0]] = fields[1];
  }
  return Create(std::move(entries), policy);
}

absl::Status MockLexicon::Save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) return absl::PermissionDeniedError(absl::StrCat("cannot write ", path));
  for (const auto& [s, t] : entries_) out << s << '\t' << t << '\n';
  return absl::OkStatus();
}

std::optional<std::string> MockLexicon::Lookup(absl::string_view word) const {
  auto it = entries_.find(ToLower(word));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------------------
// MockEngine

MockEngine::MockEngine(EngineDescriptor descriptor, MockLexicon lexicon)
    : descriptor_(std::move(descriptor)), lexicon_(std::move(lexicon)) {}

absl::StatusOr<std::string> MockEngine::Translate(absl::string_view text) const {
  TaggedText tokens = Tokenize(text);
  for (Token& t : tokens.tokens) {
    if (t.kind != TokenKind::kWord) continue;
    std::optional<std::string> target = lexicon_.Lookup(t.surface);
    if (!target) {
      if (lexicon_.policy() == UnknownWordPolicy::kReject) {
        return absl::InvalidArgumentError(absl::StrCat(
            "engine ", descriptor_.id, ": no translation for '", t.surface,
            "'"));
      }
      continue;
    }
    t.surface = ApplyCaseShape(t.case_shape, *target);
    t.case_shape = DetectCaseShape(t.surface);
  }
  return Detokenize(tokens);
}

// ---------------------------------------------------------------------------
// RemoteEngine

RemoteEngine::RemoteEngine(EngineDescriptor descriptor)
    : descriptor_(std::move(descriptor)) {}

std::string RemoteEngine::RenderPrompt(absl::string_view text) const {
  const RemoteEndpoint& ep = *descriptor_.endpoint;
  return absl::StrReplaceAll(
      ep.prompt_template,
      {{"{text}", text},
       {"{source_lang}", descriptor_.source_lang},
       {"{target_lang}", descriptor_.target_lang},
       {"{source_language}", LanguageName(descriptor_.source_lang)},
       {"{target_language}", LanguageName(descriptor_.target_lang)}});
}

absl::StatusOr<std::string> RemoteEngine::Translate(
    absl::string_view text) const {
  const RemoteEndpoint& ep = *descriptor_.endpoint;
  nlohmann::json body = {{ep.text_field, RenderPrompt(text)},
                         {ep.source_field, descriptor_.source_lang},
                         {ep.target_field, descriptor_.target_lang}};
  const std::string payload = body.dump();

  httplib::Client client(ep.url);
  client.set_connection_timeout(std::chrono::milliseconds(ep.timeout_ms));
  client.set_read_timeout(std::chrono::milliseconds(ep.timeout_ms));
  client.set_write_timeout(std::chrono::milliseconds(ep.timeout_ms));
  httplib::Headers headers(ep.headers.begin(), ep.headers.end());

  absl::Status last = absl::UnavailableError("no attempt made");
  int backoff_ms = ep.initial_backoff_ms;
  for (int attempt = 0; attempt <= ep.max_retries; ++attempt) {
    if (attempt > 0) {
      std::this_thread::sleep_for(std::chrono::milliseconds(backoff_ms));
      backoff_ms *= 2;
    }
    httplib::Result res =
        client.Post(ep.path, headers, payload, "application/json");
    if (!res) {
      last = absl::UnavailableError(
          absl::StrCat("engine ", descriptor_.id, ": transport error (",
                       httplib::to_string(res.error()), ")"));
      continue;
    }
    if (res->status >= 500 || res->status == 429) {
      last = absl::UnavailableError(absl::StrCat(
          "engine ", descriptor_.id, ": HTTP ", res->status));
      continue;
    }
    if (res->status != 200) {
      return absl::DataLossError(absl::StrCat(
          "engine ", descriptor_.id, ": protocol error, HTTP ", res->status));
    }
    nlohmann::json reply = nlohmann::json::parse(res->body, nullptr, false);
    if (reply.is_discarded() || !reply.is_object() ||
        !reply.contains(ep.response_field) ||
        !reply[ep.response_field].is_string()) {
      return absl::DataLossError(absl::StrCat(
          "engine ", descriptor_.id, ": protocol error, reply has no string '",
          ep.response_field, "' field"));
    }
    return reply[ep.response_field].get<std::string>();
  }
  return last;
}

// ---------------------------------------------------------------------------
// EngineGateway

absl::StatusOr<std::string> EngineGateway::Register(
    std::unique_ptr<Engine> engine) {
  if (engine == nullptr) return absl::InvalidArgumentError("null engine");
  const EngineDescriptor& d = engine->descriptor();
  if (absl::Status s = ValidateDescriptor(d); !s.ok()) return s;
  std::lock_guard<std::mutex> lock(mu_);
  if (engines_.count(d.id) > 0) {
    return absl::AlreadyExistsError(
        absl::StrCat("engine id '", d.id, "' is already registered"));
  }
  std::string id = d.id;
  engines_.emplace(id, std::move(engine));
  return id;
}

absl::StatusOr<std::string> EngineGateway::RegisterMock(
    EngineDescriptor descriptor, MockLexicon lexicon) {
  descriptor.kind = EngineKind::kMock;
  return Register(
      std::make_unique<MockEngine>(std::move(descriptor), std::move(lexicon)));
}

absl::StatusOr<std::string> EngineGateway::RegisterRemote(
    EngineDescriptor descriptor) {
  descriptor.kind = EngineKind::kRemote;
  if (absl::Status s = ValidateDescriptor(descriptor); !s.ok()) return s;
  return Register(std::make_unique<RemoteEngine>(std::move(descriptor)));
}

bool EngineGateway::Contains(absl::string_view id) const {
  return Find(id) != nullptr;
}

const Engine* EngineGateway::Find(absl::string_view id) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = engines_.find(id);
  return it == engines_.end() ? nullptr : it->second.get();
}

std::vector<EngineInfo> EngineGateway::List() const {
  std::lock_guard<std::mutex> lock(mu_);
  std::vector<EngineInfo> out;
  for (const auto& [id, engine] : engines_) {
    const EngineDescriptor& d = engine->descriptor();
    out.push_back({d.id, d.kind, d.source_lang, d.target_lang});
  }
  return out;
}

absl::StatusOr<std::string> EngineGateway::Translate(absl::string_view id,
                                                     absl::string_view text) {
  const Engine* engine = Find(id);
  if (engine == nullptr) {
    return absl::NotFoundError(absl::StrCat("unknown engine '", id, "'"));
  }
  if (text.empty()) {
    return absl::InvalidArgumentError("refusing to translate empty text");
  }
  absl::StatusOr<std::string> result = engine->Translate(text);
  audit_.Append(id, text, result.ok() ? "ok" : result.status().ToString());
  return result;
}

}  // namespace maskmt
