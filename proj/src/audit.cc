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

#include "maskmt/audit.h"

#include <openssl/evp.h>

#include <chrono>
#include <ctime>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "json.hpp"
#include "maskmt/text.h"

namespace maskmt {
namespace {

std::string NowIso8601() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t secs = std::chrono::system_clock::to_time_t(now);
  const auto millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                          now.time_since_epoch())
                          .count() %
                      1000;
  std::tm tm{};
  gmtime_r(&secs, &tm);
  return absl::StrFormat("%04d-%02d-%02dT%02d:%02d:%02d.%03dZ",
                         tm.tm_year + 1900, tm.tm_mon + 1, tm.tm_mday,
                         tm.tm_hour, tm.tm_min, tm.tm_sec,
                         static_cast<int>(millis));
}

}  // namespace

std::string Sha256Hex(absl::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    absl::StrAppendFormat(&out, "%02x", digest[i]);
  }
  return out;
}

absl::Status AuditLog::OpenSink(const std::string& path) {
  std::lock_guard<std::mutex> lock(mu_);
  sink_.open(path, std::ios::app);
  if (!sink_) {
    return absl::PermissionDeniedError(
        absl::StrCat("cannot open audit log ", path));
  }
  return absl::OkStatus();
}

void AuditLog::Append(absl::string_view engine_id, absl::string_view payload,
                      absl::string_view outcome) {
  AuditRecord record{NowIso8601(), std::string(engine_id), Sha256Hex(payload),
                     CodePointLength(payload), std::string(outcome)};
  std::lock_guard<std::mutex> lock(mu_);
  if (sink_.is_open()) sink_ << ToJsonLine(record) << '\n' << std::flush;
  records_.push_back(std::move(record));
}

std::vector<AuditRecord> AuditLog::Records() const {
  std::lock_guard<std::mutex> lock(mu_);
  return records_;
}

std::size_t AuditLog::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return records_.size();
}

std::string AuditLog::ToJsonLine(const AuditRecord& record) {
  nlohmann::json j = {{"timestamp", record.timestamp},
                      {"engine", record.engine_id},
                      {"payload_sha256", record.payload_sha256},
                      {"payload_len", record.payload_len},
                      {"outcome", record.outcome}};
  return j.dump();
}

std::string AuditLog::ToNdjson() const {
  std::string out;
  for (const AuditRecord& r : Records()) {
    out += ToJsonLine(r);
    out += '\n';
  }
  return out;
}

}  // namespace maskmt
