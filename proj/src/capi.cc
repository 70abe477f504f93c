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

#include "maskmt/maskmt.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include "absl/strings/str_cat.h"
#include "json_codec.h"
#include "maskmt/config.h"
#include "maskmt/dictionary.h"
#include "maskmt/evaluation.h"
#include "maskmt/mechanisms.h"
#include "maskmt/privacy.h"
#include "maskmt/service.h"
#include "maskmt/synthetic_corpus.h"

struct maskmt_context {
  std::unique_ptr<maskmt::Workspace> workspace;
  maskmt::Config config;
};

struct maskmt_server {
  std::unique_ptr<maskmt::Service> service;
  std::string bind_address;
};

namespace {

using maskmt::Json;

thread_local std::string last_error;

maskmt_status Fail(maskmt_status code, absl::string_view message) {
  last_error = std::string(message);
  return code;
}

maskmt_status FromStatus(const absl::Status& s) {
  if (s.ok()) {
    last_error.clear();
    return MASKMT_OK;
  }
  maskmt_status code = MASKMT_INTERNAL;
  switch (s.code()) {
    case absl::StatusCode::kInvalidArgument:
    case absl::StatusCode::kOutOfRange:
    case absl::StatusCode::kAlreadyExists:
      code = MASKMT_INVALID_ARGUMENT;
      break;
    case absl::StatusCode::kNotFound:
      code = MASKMT_NOT_FOUND;
      break;
    case absl::StatusCode::kUnavailable:
    case absl::StatusCode::kDataLoss:
    case absl::StatusCode::kDeadlineExceeded:
      code = MASKMT_ENGINE;
      break;
    case absl::StatusCode::kPermissionDenied:
      code = MASKMT_IO;
      break;
    case absl::StatusCode::kFailedPrecondition:
      code = MASKMT_STATE;
      break;
    default:
      break;
  }
  return Fail(code, s.message());
}

maskmt_status Ok() {
  last_error.clear();
  return MASKMT_OK;
}

char* Dup(absl::string_view s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) return nullptr;
  std::memcpy(out, s.data(), s.size());
  out[s.size()] = '\0';
  return out;
}

maskmt_status Emit(absl::string_view s, char** out) {
  *out = Dup(s);
  if (*out == nullptr) return Fail(MASKMT_INTERNAL, "out of memory");
  return Ok();
}

#define MASKMT_REQUIRE(cond, what)                          \
  do {                                                      \
    if (!(cond)) return Fail(MASKMT_INVALID_ARGUMENT, what); \
  } while (0)

absl::StatusOr<Json> ParseObject(const char* text, absl::string_view what) {
  if (text == nullptr || *text == '\0') return Json::object();
  absl::StatusOr<Json> j = maskmt::ParseJson(text);
  if (!j.ok() || !j->is_object()) {
    return absl::InvalidArgumentError(
        absl::StrCat(what, " must be a JSON object"));
  }
  return j;
}

absl::StatusOr<uint64_t> SeedField(const Json& j, uint64_t fallback) {
  auto it = j.find("seed");
  if (it == j.end() || it->is_null()) return fallback;
  if (it->is_number_unsigned()) return it->get<uint64_t>();
  if (it->is_string()) return maskmt::ParseSeed(it->get<std::string>());
  return absl::InvalidArgumentError("seed must be a non-negative integer");
}

absl::StatusOr<maskmt::MechanismParams> ParseParams(const Json& j,
                                                    uint64_t default_seed) {
  maskmt::MechanismParams params;
  if (auto m = j.find("method"); m != j.end()) {
    if (!m->is_string()) return absl::InvalidArgumentError("method must be a string");
    std::optional<maskmt::Method> method = maskmt::ParseMethod(m->get<std::string>());
    if (!method) {
      return absl::InvalidArgumentError(
          absl::StrCat("unknown method ", m->get<std::string>()));
    }
    params.method = *method;
  }
  if (auto r = j.find("ratio"); r != j.end()) {
    if (!r->is_number()) return absl::InvalidArgumentError("ratio must be a number");
    params.ratio = r->get<double>();
  }
  if (auto b = j.find("beta"); b != j.end()) {
    if (!b->is_number()) return absl::InvalidArgumentError("beta must be a number");
    params.beta = b->get<double>();
  }
  absl::StatusOr<uint64_t> seed = SeedField(j, default_seed);
  if (!seed.ok()) return seed.status();
  params.seed = *seed;
  if (absl::Status s = maskmt::ValidateParams(params); !s.ok()) return s;
  return params;
}

absl::StatusOr<std::vector<std::string>> ReadLines(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

absl::StatusOr<std::vector<std::string>> StringList(const Json& j,
                                                    const char* key,
                                                    const char* path_key) {
  if (auto it = j.find(key); it != j.end()) {
    if (!it->is_array()) {
      return absl::InvalidArgumentError(absl::StrCat(key, " must be an array"));
    }
    std::vector<std::string> out;
    for (const Json& v : *it) {
      if (!v.is_string()) {
        return absl::InvalidArgumentError(
            absl::StrCat(key, " must hold strings"));
      }
      out.push_back(v.get<std::string>());
    }
    return out;
  }
  if (auto it = j.find(path_key); it != j.end()) {
    if (!it->is_string()) {
      return absl::InvalidArgumentError(
          absl::StrCat(path_key, " must be a string"));
    }
    return ReadLines(it->get<std::string>());
  }
  return std::vector<std::string>();
}

Json DictStats(const maskmt::WordDictionary& d) {
  return Json{{"entries", d.size()},
              {"vocab_size", d.source_vocab().size()},
              {"mode", maskmt::DictionaryModeName(d.mode())}};
}

Json RunJson(const maskmt::EncodeResult& enc, const std::string& y_pub,
             const maskmt::DecodeResult& dec) {
  Json out = maskmt::EncodeResultToJson(enc);
  out["y_pub"] = y_pub;
  Json d = maskmt::DecodeResultToJson(dec);
  out["y_pri"] = d["y_pri"];
  out["misses"] = d["misses"];
  return out;
}

}  // namespace

extern "C" {

const char* maskmt_version(void) { return "0.1.0"; }

const char* maskmt_last_error(void) { return last_error.c_str(); }

const char* maskmt_status_name(maskmt_status status) {
  switch (status) {
    case MASKMT_OK:
      return "OK";
    case MASKMT_INVALID_ARGUMENT:
      return "INVALID_ARGUMENT";
    case MASKMT_NOT_FOUND:
      return "NOT_FOUND";
    case MASKMT_ENGINE:
      return "ENGINE";
    case MASKMT_IO:
      return "IO";
    case MASKMT_STATE:
      return "STATE";
    case MASKMT_INTERNAL:
      return "INTERNAL";
  }
  return "UNKNOWN";
}

void maskmt_string_free(char* s) { std::free(s); }

maskmt_status maskmt_context_create_fixture(maskmt_context** out) {
  MASKMT_REQUIRE(out != nullptr, "out is null");
  auto ctx = std::make_unique<maskmt_context>();
  ctx->workspace = maskmt::Workspace::Fixture();
  maskmt::Config config;
  if (absl::Status s = maskmt::ApplyEnvOverrides(config); !s.ok()) {
    return FromStatus(s);
  }
  if (config.seed) ctx->workspace->set_default_seed(*config.seed);
  ctx->config = std::move(config);
  *out = ctx.release();
  return Ok();
}

maskmt_status maskmt_context_create_from_config(const char* config_path,
                                                maskmt_context** out) {
  MASKMT_REQUIRE(out != nullptr, "out is null");
  MASKMT_REQUIRE(config_path != nullptr, "config path is null");
  absl::StatusOr<maskmt::Config> config = maskmt::LoadConfig(config_path);
  if (!config.ok()) return FromStatus(config.status());
  if (absl::Status s = maskmt::ApplyEnvOverrides(*config); !s.ok()) {
    return FromStatus(s);
  }
  absl::StatusOr<std::unique_ptr<maskmt::Workspace>> ws =
      maskmt::Workspace::FromConfig(*config);
  if (!ws.ok()) return FromStatus(ws.status());
  auto ctx = std::make_unique<maskmt_context>();
  ctx->workspace = *std::move(ws);
  ctx->config = *std::move(config);
  *out = ctx.release();
  return Ok();
}

void maskmt_context_destroy(maskmt_context* ctx) { delete ctx; }

maskmt_status maskmt_set_seed(maskmt_context* ctx, uint64_t seed) {
  MASKMT_REQUIRE(ctx != nullptr, "context is null");
  ctx->workspace->set_default_seed(seed);
  return Ok();
}

maskmt_status maskmt_load_pos_lexicon(maskmt_context* ctx, const char* path) {
  MASKMT_REQUIRE(ctx != nullptr && path != nullptr, "null argument");
  absl::StatusOr<maskmt::PosTagger> tagger = maskmt::PosTagger::FromFile(path);
  if (!tagger.ok()) return FromStatus(tagger.status());
  ctx->workspace->set_tagger(*std::move(tagger));
  return Ok();
}

maskmt_status maskmt_open_audit_log(maskmt_context* ctx, const char* path) {
  MASKMT_REQUIRE(ctx != nullptr && path != nullptr, "null argument");
  return FromStatus(ctx->workspace->gateway().audit().OpenSink(path));
}

maskmt_status maskmt_register_engine(maskmt_context* ctx,
                                     const char* engine_json) {
  MASKMT_REQUIRE(ctx != nullptr && engine_json != nullptr, "null argument");
  absl::StatusOr<Json> engine = maskmt::ParseJson(engine_json);
  if (!engine.ok()) return FromStatus(engine.status());
  Json wrapped = {{"engines", Json::array({*engine})}};
  absl::StatusOr<maskmt::Config> config = maskmt::ParseConfig(wrapped.dump());
  if (!config.ok()) return FromStatus(config.status());
  const maskmt::EngineConfig& e = config->engines.front();
  absl::StatusOr<std::string> id;
  if (e.descriptor.kind == maskmt::EngineKind::kMock) {
    absl::StatusOr<maskmt::MockLexicon> lexicon =
        e.lexicon_path.empty()
            ? absl::StatusOr<maskmt::MockLexicon>(maskmt::MockLexicon::Fixture())
            : maskmt::MockLexicon::FromFile(e.lexicon_path);
    if (!lexicon.ok()) return FromStatus(lexicon.status());
    id = ctx->workspace->gateway().RegisterMock(e.descriptor,
                                                *std::move(lexicon));
  } else {
    id = ctx->workspace->gateway().RegisterRemote(e.descriptor);
  }
  return FromStatus(id.status());
}

maskmt_status maskmt_engines_json(maskmt_context* ctx, char** out) {
  MASKMT_REQUIRE(ctx != nullptr && out != nullptr, "null argument");
  Json list = Json::array();
  for (const maskmt::EngineInfo& info : ctx->workspace->gateway().List()) {
    list.push_back(maskmt::EngineInfoToJson(info));
  }
  return Emit(Json{{"engines", list}}.dump(), out);
}

maskmt_status maskmt_load_dictionary(maskmt_context* ctx, const char* path) {
  MASKMT_REQUIRE(ctx != nullptr && path != nullptr, "null argument");
  return FromStatus(ctx->workspace->LoadDictionaryFile(path));
}

maskmt_status maskmt_build_dictionary(maskmt_context* ctx,
                                      const char* options_json,
                                      char** out_json) {
  MASKMT_REQUIRE(ctx != nullptr && out_json != nullptr, "null argument");
  absl::StatusOr<Json> opts = ParseObject(options_json, "options");
  if (!opts.ok()) return FromStatus(opts.status());
  const Json& j = *opts;

  absl::StatusOr<std::vector<std::string>> corpus =
      StringList(j, "corpus", "corpus_path");
  if (!corpus.ok()) return FromStatus(corpus.status());
  if (corpus->empty()) *corpus = maskmt::FixturePublicCorpus();
  absl::StatusOr<std::vector<std::string>> vocab_words =
      StringList(j, "vocab", "vocab_path");
  if (!vocab_words.ok()) return FromStatus(vocab_words.status());
  maskmt::Vocabulary vocab;
  if (vocab_words->empty()) {
    vocab = maskmt::CorpusVocabulary(*corpus);
  } else {
    for (const std::string& w : *vocab_words) vocab.Insert(maskmt::ToLower(w));
  }

  maskmt::BuildOptions options;
  options.seed = ctx->workspace->default_seed();
  options.tagger = &ctx->workspace->tagger();
  std::string engine(maskmt::kFixtureEngineId);
  std::string out_path;
  try {
    if (j.contains("engine")) engine = j.at("engine").get<std::string>();
    if (j.contains("out")) out_path = j.at("out").get<std::string>();
    if (j.contains("mode")) {
      const std::string mode = j.at("mode").get<std::string>();
      if (mode == "plain") {
        options.mode = maskmt::DictionaryMode::kPlain;
      } else if (mode == "pos_keyed" || mode == "pos-keyed") {
        options.mode = maskmt::DictionaryMode::kPosKeyed;
      } else {
        return Fail(MASKMT_INVALID_ARGUMENT,
                    absl::StrCat("unknown dictionary mode ", mode));
      }
    }
    if (j.contains("samples_per_word")) {
      options.samples_per_word = j.at("samples_per_word").get<int64_t>();
    }
    if (j.contains("base_samples")) {
      options.base_samples = j.at("base_samples").get<int64_t>();
    }
    if (j.contains("alpha")) options.alpha = j.at("alpha").get<double>();
    if (j.contains("top_k")) options.top_k = j.at("top_k").get<std::size_t>();
    if (j.contains("min_support")) {
      options.min_support = j.at("min_support").get<int64_t>();
    }
    if (j.contains("max_in_flight")) {
      options.max_in_flight = j.at("max_in_flight").get<int>();
    }
  } catch (const Json::exception& e) {
    return Fail(MASKMT_INVALID_ARGUMENT, e.what());
  }
  absl::StatusOr<uint64_t> seed = SeedField(j, options.seed);
  if (!seed.ok()) return FromStatus(seed.status());
  options.seed = *seed;

  absl::StatusOr<maskmt::BuildResult> built = maskmt::BuildDictionary(
      *corpus, ctx->workspace->gateway(), engine, vocab, options);
  if (!built.ok()) return FromStatus(built.status());
  if (!out_path.empty()) {
    if (absl::Status s = maskmt::SaveDictionary(built->dictionary, out_path);
        !s.ok()) {
      return FromStatus(s);
    }
  }
  Json stats = DictStats(built->dictionary);
  ctx->workspace->SetDictionary(std::move(built->dictionary),
                                std::move(built->confidence));
  return Emit(stats.dump(), out_json);
}

maskmt_status maskmt_dictionary_stats_json(maskmt_context* ctx, char** out) {
  MASKMT_REQUIRE(ctx != nullptr && out != nullptr, "null argument");
  Json all = Json::array();
  for (const maskmt::WordDictionary* d :
       {ctx->workspace->plain(), ctx->workspace->pos_keyed()}) {
    if (d != nullptr) all.push_back(DictStats(*d));
  }
  return Emit(Json{{"dictionaries", all}}.dump(), out);
}

maskmt_status maskmt_encode(maskmt_context* ctx, const char* text,
                            const char* params_json, char** out_json) {
  MASKMT_REQUIRE(ctx != nullptr && text != nullptr && out_json != nullptr,
                 "null argument");
  absl::StatusOr<Json> j = ParseObject(params_json, "params");
  if (!j.ok()) return FromStatus(j.status());
  absl::StatusOr<maskmt::MechanismParams> params =
      ParseParams(*j, ctx->workspace->default_seed());
  if (!params.ok()) return FromStatus(params.status());
  absl::StatusOr<maskmt::EncodeResult> result =
      maskmt::Encode(text, ctx->workspace->dictionaries(), *params,
                     ctx->workspace->tagger());
  if (!result.ok()) return FromStatus(result.status());
  return Emit(maskmt::EncodeResultToJson(*result).dump(), out_json);
}

maskmt_status maskmt_translate(maskmt_context* ctx, const char* engine_id,
                               const char* text, char** out_text) {
  MASKMT_REQUIRE(ctx != nullptr && engine_id != nullptr && text != nullptr &&
                     out_text != nullptr,
                 "null argument");
  absl::StatusOr<std::string> y =
      ctx->workspace->gateway().Translate(engine_id, text);
  if (!y.ok()) return FromStatus(y.status());
  return Emit(*y, out_text);
}

maskmt_status maskmt_decode(maskmt_context* ctx, const char* y_pub,
                            const char* history_json, char** out_json) {
  MASKMT_REQUIRE(ctx != nullptr && y_pub != nullptr &&
                     history_json != nullptr && out_json != nullptr,
                 "null argument");
  absl::StatusOr<Json> j = maskmt::ParseJson(history_json);
  if (!j.ok()) return FromStatus(j.status());
  const Json* h = &*j;
  if (j->is_object() && j->contains("history")) h = &(*j)["history"];
  if (h->is_object() && h->contains("encode")) h = &(*h)["encode"]["history"];
  absl::StatusOr<maskmt::SubstitutionHistory> history =
      maskmt::HistoryFromJson(*h);
  if (!history.ok()) return FromStatus(history.status());
  absl::StatusOr<maskmt::DecodeResult> result =
      maskmt::Decode(y_pub, *history, ctx->workspace->dictionaries());
  if (!result.ok()) return FromStatus(result.status());
  return Emit(maskmt::DecodeResultToJson(*result).dump(), out_json);
}

maskmt_status maskmt_run(maskmt_context* ctx, const char* text,
                         const char* params_json, char** out_json) {
  MASKMT_REQUIRE(ctx != nullptr && text != nullptr && out_json != nullptr,
                 "null argument");
  absl::StatusOr<Json> j = ParseObject(params_json, "params");
  if (!j.ok()) return FromStatus(j.status());
  absl::StatusOr<maskmt::MechanismParams> params =
      ParseParams(*j, ctx->workspace->default_seed());
  if (!params.ok()) return FromStatus(params.status());
  std::string engine(maskmt::kFixtureEngineId);
  if (auto e = j->find("engine"); e != j->end()) {
    MASKMT_REQUIRE(e->is_string(), "engine must be a string");
    engine = e->get<std::string>();
  }
  maskmt::Workspace& ws = *ctx->workspace;
  if (!ws.gateway().Contains(engine)) {
    return Fail(MASKMT_NOT_FOUND, absl::StrCat("unknown engine '", engine, "'"));
  }
  absl::StatusOr<maskmt::EncodeResult> enc =
      maskmt::Encode(text, ws.dictionaries(), *params, ws.tagger());
  if (!enc.ok()) return FromStatus(enc.status());
  absl::StatusOr<std::string> y_pub = ws.gateway().Translate(engine, enc->x_pub);
  if (!y_pub.ok()) return FromStatus(y_pub.status());
  absl::StatusOr<maskmt::DecodeResult> dec =
      maskmt::Decode(*y_pub, enc->history, ws.dictionaries());
  if (!dec.ok()) return FromStatus(dec.status());
  Json out = RunJson(*enc, *y_pub, *dec);
  out["engine"] = engine;
  return Emit(out.dump(), out_json);
}

maskmt_status maskmt_eval_sweep(maskmt_context* ctx, const char* options_json,
                                char** out_csv) {
  MASKMT_REQUIRE(ctx != nullptr && out_csv != nullptr, "null argument");
  absl::StatusOr<Json> opts = ParseObject(options_json, "options");
  if (!opts.ok()) return FromStatus(opts.status());
  const Json& j = *opts;
  maskmt::Workspace& ws = *ctx->workspace;

  std::string mechanism = "prism_star";
  std::string engine(maskmt::kFixtureEngineId);
  std::vector<double> grid = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  std::size_t docs = 100;
  double beta = 0.5;
  try {
    if (j.contains("mechanism")) mechanism = j.at("mechanism").get<std::string>();
    if (j.contains("engine")) engine = j.at("engine").get<std::string>();
    if (j.contains("grid")) grid = j.at("grid").get<std::vector<double>>();
    if (j.contains("docs")) docs = j.at("docs").get<std::size_t>();
    if (j.contains("beta")) beta = j.at("beta").get<double>();
  } catch (const Json::exception& e) {
    return Fail(MASKMT_INVALID_ARGUMENT, e.what());
  }
  absl::StatusOr<uint64_t> seed = SeedField(j, ws.default_seed());
  if (!seed.ok()) return FromStatus(seed.status());
  if (ws.mock_lexicon() == nullptr) {
    return Fail(MASKMT_STATE,
                "evaluation needs a mock engine lexicon to translate questions");
  }

  const maskmt::DictionarySet dicts = ws.dictionaries();
  std::unique_ptr<maskmt::Mechanism> mech;
  if (mechanism == "prism_r" || mechanism == "prism-r") {
    mech = maskmt::MakePrismR(dicts);
  } else if (mechanism == "prism_star" || mechanism == "prism-star") {
    mech = maskmt::MakePrismStar(dicts, ws.tagger());
  } else if (mechanism == "no_decode" || mechanism == "nodecode" ||
             mechanism == "no-decode") {
    mech = maskmt::MakeNoDecode(dicts, ws.tagger());
  } else if (mechanism == "mixed") {
    mech = std::make_unique<maskmt::DictionaryMechanism>(
        "mixed", maskmt::Method::kMixed, dicts, ws.tagger(), false, beta);
  } else {
    return Fail(MASKMT_INVALID_ARGUMENT,
                absl::StrCat("unknown mechanism ", mechanism));
  }
  absl::StatusOr<maskmt::SyntheticCorpus> corpus =
      maskmt::GenerateSyntheticCorpus(docs, *seed);
  if (!corpus.ok()) return FromStatus(corpus.status());
  maskmt::QsContext qs_ctx{&ws.gateway(), engine, ws.mock_lexicon()};
  absl::StatusOr<maskmt::TradeoffCurve> curve = maskmt::Sweep(
      *mech, grid, *corpus, qs_ctx, maskmt::OracleEvaluate, *seed);
  if (!curve.ok()) return FromStatus(curve.status());
  return Emit(maskmt::CurveToCsv(*curve), out_csv);
}

maskmt_status maskmt_aupqc_csv(const char* csv, double* out) {
  MASKMT_REQUIRE(csv != nullptr && out != nullptr, "null argument");
  absl::StatusOr<maskmt::TradeoffCurve> curve = maskmt::ParseCurveCsv(csv);
  if (!curve.ok()) return FromStatus(curve.status());
  absl::StatusOr<double> area = maskmt::Aupqc(curve->points);
  if (!area.ok()) return FromStatus(area.status());
  *out = *area;
  return Ok();
}

maskmt_status maskmt_qs_at_csv(const char* csv, double p, double* out,
                               int* extrapolated) {
  MASKMT_REQUIRE(csv != nullptr && out != nullptr, "null argument");
  absl::StatusOr<maskmt::TradeoffCurve> curve = maskmt::ParseCurveCsv(csv);
  if (!curve.ok()) return FromStatus(curve.status());
  absl::StatusOr<maskmt::QsAtResult> q = maskmt::QsAt(curve->points, p);
  if (!q.ok()) return FromStatus(q.status());
  *out = q->qs;
  if (extrapolated != nullptr) *extrapolated = q->extrapolated ? 1 : 0;
  return Ok();
}

maskmt_status maskmt_report_json(const char* csv, const char* mechanism,
                                 const char* engine, const char* ps_json,
                                 char** out) {
  MASKMT_REQUIRE(csv != nullptr && out != nullptr, "null argument");
  absl::StatusOr<maskmt::TradeoffCurve> curve = maskmt::ParseCurveCsv(csv);
  if (!curve.ok()) return FromStatus(curve.status());
  curve->mechanism = mechanism != nullptr ? mechanism : "";
  curve->engine = engine != nullptr ? engine : "";
  std::vector<double> ps;
  if (ps_json != nullptr && *ps_json != '\0') {
    absl::StatusOr<Json> j = maskmt::ParseJson(ps_json);
    if (!j.ok()) return FromStatus(j.status());
    try {
      ps = j->get<std::vector<double>>();
    } catch (const Json::exception& e) {
      return Fail(MASKMT_INVALID_ARGUMENT, "ps must be an array of numbers");
    }
  }
  absl::StatusOr<std::string> report = maskmt::ReportJson(*curve, ps);
  if (!report.ok()) return FromStatus(report.status());
  return Emit(*report, out);
}

maskmt_status maskmt_audit_json(maskmt_context* ctx, char** out) {
  MASKMT_REQUIRE(ctx != nullptr && out != nullptr, "null argument");
  Json records = Json::array();
  for (const maskmt::AuditRecord& r :
       ctx->workspace->gateway().audit().Records()) {
    records.push_back(maskmt::AuditRecordToJson(r));
  }
  return Emit(Json{{"records", records}}.dump(), out);
}

maskmt_status maskmt_epsilon_for(double ratio, size_t vocab_size,
                                 double* out) {
  MASKMT_REQUIRE(out != nullptr, "out is null");
  absl::StatusOr<double> e = maskmt::EpsilonFor(ratio, vocab_size);
  if (!e.ok()) return FromStatus(e.status());
  *out = *e;
  return Ok();
}

maskmt_status maskmt_ratio_for_epsilon(double epsilon, size_t vocab_size,
                                       double* out) {
  MASKMT_REQUIRE(out != nullptr, "out is null");
  absl::StatusOr<double> r = maskmt::RatioForEpsilon(epsilon, vocab_size);
  if (!r.ok()) return FromStatus(r.status());
  *out = *r;
  return Ok();
}

maskmt_status maskmt_server_start(maskmt_context* ctx,
                                  const char* bind_address, int port,
                                  const char* session_dir, maskmt_server** out,
                                  int* bound_port) {
  MASKMT_REQUIRE(ctx != nullptr && out != nullptr, "null argument");
  maskmt::ServiceOptions options;
  options.bind_address =
      bind_address != nullptr ? bind_address : ctx->config.bind_address;
  options.port = port >= 0 ? port : ctx->config.port;
  options.session_dir =
      session_dir != nullptr ? session_dir : ctx->config.session_dir;
  auto server = std::make_unique<maskmt_server>();
  server->bind_address = options.bind_address;
  server->service =
      std::make_unique<maskmt::Service>(*ctx->workspace, std::move(options));
  absl::StatusOr<int> bound = server->service->Start();
  if (!bound.ok()) return FromStatus(bound.status());
  if (bound_port != nullptr) *bound_port = *bound;
  *out = server.release();
  return Ok();
}

const char* maskmt_server_bind_address(const maskmt_server* server) {
  return server != nullptr ? server->bind_address.c_str() : "";
}

void maskmt_server_wait(maskmt_server* server) {
  if (server != nullptr) server->service->Wait();
}

void maskmt_server_stop(maskmt_server* server) {
  if (server != nullptr) server->service->Stop();
}

void maskmt_server_destroy(maskmt_server* server) { delete server; }

}  // extern "C"
