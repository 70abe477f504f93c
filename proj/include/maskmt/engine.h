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

// Black-box translators and the gateway every outbound call goes through.
//
// The gateway is the only component that hands text to an engine. Each call
// leaves exactly one AuditRecord holding the SHA-256 of the payload, which is
// how callers prove that only masked text ever left the machine.

#ifndef MASKMT_ENGINE_H_
#define MASKMT_ENGINE_H_

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "maskmt/audit.h"

namespace maskmt {

enum class EngineKind { kMock, kRemote };

absl::string_view EngineKindName(EngineKind kind);

// Generic JSON-over-HTTP endpoint. The request body is
//   {<text_field>: rendered prompt, <source_field>: .., <target_field>: ..}
// and the translation is read from <response_field> of the JSON reply.
struct RemoteEndpoint {
  std::string url;  // scheme://host[:port]
  std::string path = "/translate";
  // Placeholders: {text}, {source_lang}, {target_lang}, {source_language},
  // {target_language}. The language names come from a small built-in table
  // and fall back to the code.
  std::string prompt_template = "{text}";
  std::string text_field = "text";
  std::string source_field = "source_lang";
  std::string target_field = "target_lang";
  std::string response_field = "text";
  std::map<std::string, std::string> headers;
  int timeout_ms = 30000;
  int max_retries = 2;
  int initial_backoff_ms = 200;

  // "Directly translate English to French: <text>"
  static constexpr absl::string_view kDirectTranslateTemplate =
      "Directly translate {source_language} to {target_language}: {text}";
};

struct EngineDescriptor {
  std::string id;
  EngineKind kind = EngineKind::kMock;
  std::string source_lang;
  std::string target_lang;
  std::optional<RemoteEndpoint> endpoint;
};

absl::Status ValidateDescriptor(const EngineDescriptor& descriptor);

enum class UnknownWordPolicy { kPassthrough, kReject };

// One-to-one source->target word map used by the mock engine.
class MockLexicon {
 public:
  static absl::StatusOr<MockLexicon> Create(
      std::map<std::string, std::string> entries,
      UnknownWordPolicy policy = UnknownWordPolicy::kPassthrough);
  // Built-in English->French fixture table.
  static const MockLexicon& Fixture();
  // TSV `source<TAB>target`.
  static absl::StatusOr<MockLexicon> FromFile(
      const std::string& path,
      UnknownWordPolicy policy = UnknownWordPolicy::kPassthrough);
  absl::Status Save(const std::string& path) const;

  // Lowercase lookup.
  std::optional<std::string> Lookup(absl::string_view word) const;
  const std::map<std::string, std::string>& entries() const { return entries_; }
  UnknownWordPolicy policy() const { return policy_; }

 private:
  MockLexicon(std::map<std::string, std::string> entries,
              UnknownWordPolicy policy)
      : entries_(std::move(entries)), policy_(policy) {}

  std::map<std::string, std::string> entries_;
  UnknownWordPolicy policy_;
};

class Engine {
 public:
  virtual ~Engine() = default;
  virtual const EngineDescriptor& descriptor() const = 0;
  // Must be safe to call concurrently.
  virtual absl::StatusOr<std::string> Translate(absl::string_view text) const = 0;
};

// Word-by-word translation preserving token order, punctuation and case.
class MockEngine : public Engine {
 public:
  MockEngine(EngineDescriptor descriptor, MockLexicon lexicon);

  const EngineDescriptor& descriptor() const override { return descriptor_; }
  absl::StatusOr<std::string> Translate(absl::string_view text) const override;
  const MockLexicon& lexicon() const { return lexicon_; }

 private:
  EngineDescriptor descriptor_;
  MockLexicon lexicon_;
};

// Transport failures (connection errors, HTTP 5xx/429) are retried with
// exponential backoff and surface as UNAVAILABLE; malformed replies surface as
// DATA_LOSS and are not retried.
class RemoteEngine : public Engine {
 public:
  explicit RemoteEngine(EngineDescriptor descriptor);

  const EngineDescriptor& descriptor() const override { return descriptor_; }
  absl::StatusOr<std::string> Translate(absl::string_view text) const override;

  std::string RenderPrompt(absl::string_view text) const;

 private:
  EngineDescriptor descriptor_;
};

struct EngineInfo {
  std::string id;
  EngineKind kind;
  std::string source_lang;
  std::string target_lang;
};

class EngineGateway {
 public:
  EngineGateway() = default;
  EngineGateway(const EngineGateway&) = delete;
  EngineGateway& operator=(const EngineGateway&) = delete;

  // Returns the engine id.
  absl::StatusOr<std::string> Register(std::unique_ptr<Engine> engine);
  absl::StatusOr<std::string> RegisterMock(EngineDescriptor descriptor,
                                           MockLexicon lexicon);
  absl::StatusOr<std::string> RegisterRemote(EngineDescriptor descriptor);

  bool Contains(absl::string_view id) const;
  std::vector<EngineInfo> List() const;
  // Null if unknown. Engines are never unregistered, so the pointer stays
  // valid for the gateway's lifetime.
  const Engine* Find(absl::string_view id) const;

  // The single outbound path. Appends one audit record per call that reaches
  // an engine, successful or not.
  absl::StatusOr<std::string> Translate(absl::string_view id,
                                        absl::string_view text);

  AuditLog& audit() { return audit_; }
  const AuditLog& audit() const { return audit_; }

 private:
  mutable std::mutex mu_;
  std::map<std::string, std::unique_ptr<Engine>, std::less<>> engines_;
  AuditLog audit_;
};

}  // namespace maskmt

#endif  // MASKMT_ENGINE_H_
