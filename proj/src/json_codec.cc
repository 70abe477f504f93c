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

#include "json_codec.h"

#include <set>

#include "absl/strings/str_cat.h"

namespace maskmt {
namespace {

absl::Status Malformed(absl::string_view what) {
  return absl::InvalidArgumentError(absl::StrCat("malformed history: ", what));
}

}  // namespace

Json RecordToJson(const SubstitutionRecord& record) {
  Json j = {{"position", record.position},
            {"original", record.original},
            {"substitute", record.substitute}};
  if (record.tag) j["tag"] = PosTagName(*record.tag);
  return j;
}

Json HistoryToJson(const SubstitutionHistory& history) {
  Json records = Json::array();
  for (const SubstitutionRecord& r : history.records) {
    records.push_back(RecordToJson(r));
  }
  return Json{{"source_len", history.source_len}, {"records", records}};
}

absl::StatusOr<SubstitutionHistory> HistoryFromJson(const Json& json) {
  if (!json.is_object()) return Malformed("expected an object");
  auto len = json.find("source_len");
  if (len == json.end() || !len->is_number_unsigned()) {
    return Malformed("source_len must be a non-negative integer");
  }
  auto records = json.find("records");
  if (records == json.end() || !records->is_array()) {
    return Malformed("records must be an array");
  }
  SubstitutionHistory history;
  history.source_len = len->get<std::size_t>();
  for (const Json& r : *records) {
    if (!r.is_object()) return Malformed("record must be an object");
    auto pos = r.find("position");
    auto orig = r.find("original");
    auto sub = r.find("substitute");
    if (pos == r.end() || !pos->is_number_unsigned() || orig == r.end() ||
        !orig->is_string() || sub == r.end() || !sub->is_string()) {
      return Malformed("record needs position, original and substitute");
    }
    SubstitutionRecord record;
    record.position = pos->get<std::size_t>();
    record.original = orig->get<std::string>();
    record.substitute = sub->get<std::string>();
    if (auto tag = r.find("tag"); tag != r.end() && !tag->is_null()) {
      if (!tag->is_string()) return Malformed("tag must be a string");
      std::optional<PosTag> parsed = ParsePosTag(tag->get<std::string>());
      if (!parsed) {
        return Malformed(absl::StrCat("unknown tag ", tag->get<std::string>()));
      }
      record.tag = *parsed;
    }
    history.records.push_back(std::move(record));
  }
  if (absl::Status s = ValidateHistory(history); !s.ok()) return s;
  return history;
}

Json EncodeResultToJson(const EncodeResult& result) {
  Json subs = Json::array();
  for (const SubstitutionRecord& r : result.history.records) {
    subs.push_back(RecordToJson(r));
  }
  Json j;
  j["x_pub"] = result.x_pub;
  j["substitutions"] = std::move(subs);
  j["history"] = HistoryToJson(result.history);
  if (result.epsilon) j["epsilon"] = *result.epsilon;
  j["method"] = MethodName(result.method);
  j["branch"] = MethodName(result.branch);
  if (result.mixture_beta) j["mixture_beta"] = *result.mixture_beta;
  if (result.mixture_epsilon_r) {
    j["mixture_epsilon_r"] = *result.mixture_epsilon_r;
  }
  if (!result.warning.empty()) j["warning"] = result.warning;
  return j;
}

Json DecodeResultToJson(const DecodeResult& result) {
  Json misses = Json::array();
  for (const DecodeMiss& m : result.misses) {
    Json j = RecordToJson(m.record);
    j["reason"] = m.reason;
    misses.push_back(std::move(j));
  }
  return Json{{"y_pri", result.y_pri}, {"misses", std::move(misses)}};
}

Json AuditRecordToJson(const AuditRecord& record) {
  return Json{{"timestamp", record.timestamp},
              {"engine", record.engine_id},
              {"payload_sha256", record.payload_sha256},
              {"payload_len", record.payload_len},
              {"outcome", record.outcome}};
}

Json EngineInfoToJson(const EngineInfo& info) {
  return Json{{"id", info.id},
              {"kind", EngineKindName(info.kind)},
              {"source_lang", info.source_lang},
              {"target_lang", info.target_lang}};
}

absl::StatusOr<Json> ParseJson(absl::string_view text) {
  Json j = Json::parse(text.begin(), text.end(), nullptr,
                       /*allow_exceptions=*/false);
  if (j.is_discarded()) return absl::InvalidArgumentError("invalid JSON");
  return j;
}

}  // namespace maskmt
