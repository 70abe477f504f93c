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

// Local HTTP service holding translation sessions on the user's side.
//
//   POST   /v1/sessions                {text}            -> {session_id}
//   GET    /v1/sessions/{id}                             -> session view
//   DELETE /v1/sessions/{id}
//   POST   /v1/sessions/{id}/encode    {method, ratio, seed?, beta?}
//                                       or {method, substitutions:
//                                           [{position, replacement}]}
//   POST   /v1/sessions/{id}/send      {engine}          -> {y_pub}
//   POST   /v1/sessions/{id}/decode                      -> {y_pri, misses}
//   POST   /v1/sessions/{id}/export                      -> {path}
//   GET    /v1/engines
//   GET    /v1/dict/stats
//   GET    /v1/audit
//
// Sessions move drafted -> encoded -> sent -> decoded; encode may repeat
// while the session is not yet sent. Only /send reaches an engine. Errors
// are {"error": message} with 404 (unknown session), 409 (illegal state),
// 422 (invalid request) or 502 (engine failure).

#ifndef MASKMT_SERVICE_H_
#define MASKMT_SERVICE_H_

#include <cstdint>
#include <memory>
#include <string>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "maskmt/config.h"

namespace maskmt {

enum class SessionState { kDrafted, kEncoded, kSent, kDecoded };

absl::string_view SessionStateName(SessionState state);

struct ServiceOptions {
  std::string bind_address = "127.0.0.1";
  int port = 0;  // 0 picks a free port
  std::string session_dir;  // export target; empty disables export
};

struct HttpReply {
  int status = 200;
  std::string body;  // JSON
};

class Service {
 public:
  // `workspace` must outlive the service.
  Service(Workspace& workspace, ServiceOptions options);
  ~Service();
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  // In-process dispatch of one request, as the HTTP layer would.
  HttpReply Handle(absl::string_view method, absl::string_view path,
                   absl::string_view body);

  // Binds and serves on a background thread. Returns the bound port.
  absl::StatusOr<int> Start();
  // Blocks until Stop() is called from another thread.
  void Wait();
  void Stop();

  std::size_t session_count() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace maskmt

#endif  // MASKMT_SERVICE_H_
