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

// JSON wire forms of mechanism results, shared by the service and the C API.

#ifndef MASKMT_SRC_JSON_CODEC_H_
#define MASKMT_SRC_JSON_CODEC_H_

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "json.hpp"
#include "maskmt/audit.h"
#include "maskmt/engine.h"
#include "maskmt/mechanisms.h"

namespace maskmt {

using Json = nlohmann::ordered_json;

Json RecordToJson(const SubstitutionRecord& record);
Json HistoryToJson(const SubstitutionHistory& history);
absl::StatusOr<SubstitutionHistory> HistoryFromJson(const Json& json);

// {x_pub, substitutions, history, epsilon?, method, branch, mixture_beta?,
//  mixture_epsilon_r?, warning?}
Json EncodeResultToJson(const EncodeResult& result);

// {y_pri, misses: [{position, original, substitute, tag?, reason}]}
Json DecodeResultToJson(const DecodeResult& result);

Json AuditRecordToJson(const AuditRecord& record);
Json EngineInfoToJson(const EngineInfo& info);

// Parses a JSON text, mapping syntax errors to InvalidArgument.
absl::StatusOr<Json> ParseJson(absl::string_view text);

}  // namespace maskmt

#endif  // MASKMT_SRC_JSON_CODEC_H_
