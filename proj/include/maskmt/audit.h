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

#ifndef MASKMT_AUDIT_H_
#define MASKMT_AUDIT_H_

#include <cstddef>
#include <fstream>
#include <mutex>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/string_view.h"

namespace maskmt {

// One outbound engine call. Only a digest of the payload is kept.
struct AuditRecord {
  std::string timestamp;  // ISO-8601 UTC, millisecond precision
  std::string engine_id;
  std::string payload_sha256;
  std::size_t payload_len = 0;  // code points
  std::string outcome;          // "ok" or the error message
};

std::string Sha256Hex(absl::string_view data);

// Append-only, thread-safe. Optionally mirrors every record to a file as
// newline-delimited JSON.
class AuditLog {
 public:
  AuditLog() = default;
  AuditLog(const AuditLog&) = delete;
  AuditLog& operator=(const AuditLog&) = delete;

  absl::Status OpenSink(const std::string& path);

  void Append(absl::string_view engine_id, absl::string_view payload,
              absl::string_view outcome);

  std::vector<AuditRecord> Records() const;
  std::size_t size() const;
  std::string ToNdjson() const;

  static std::string ToJsonLine(const AuditRecord& record);

 private:
  mutable std::mutex mu_;
  std::vector<AuditRecord> records_;
  std::ofstream sink_;
};

}  // namespace maskmt

#endif  // MASKMT_AUDIT_H_
