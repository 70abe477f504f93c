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

#include "maskmt/evaluation.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"
#include "json.hpp"
#include "maskmt/seeding.h"
#include "maskmt/text.h"

namespace maskmt {
namespace {

absl::Status CheckCorpus(const SyntheticCorpus& corpus) {
  if (corpus.documents.empty()) {
    return absl::InvalidArgumentError("no documents to evaluate");
  }
  for (const QaItem& item : corpus.items) {
    if (item.doc_id >= corpus.documents.size()) {
      return absl::InvalidArgumentError(
          absl::StrCat("question refers to missing document ", item.doc_id));
    }
  }
  if (corpus.items.empty()) {
    return absl::InvalidArgumentError("no questions to evaluate");
  }
  return absl::OkStatus();
}

// Per-document questions, indexed by doc_id.
std::vector<std::vector<const QaItem*>> GroupItems(
    const SyntheticCorpus& corpus) {
  std::vector<std::vector<const QaItem*>> out(corpus.documents.size());
  for (const QaItem& item : corpus.items) out[item.doc_id].push_back(&item);
  return out;
}

}  // namespace

DictionaryMechanism::DictionaryMechanism(std::string name, Method method,
                                         DictionarySet dicts,
                                         const PosTagger& tagger,
                                         bool skip_decode, double beta)
    : name_(std::move(name)),
      method_(method),
      dicts_(dicts),
      tagger_(&tagger),
      skip_decode_(skip_decode),
      beta_(beta) {}

absl::StatusOr<EncodeResult> DictionaryMechanism::Encode(
    absl::string_view text, double param, uint64_t seed) const {
  MechanismParams params;
  params.method = method_;
  params.ratio = param;
  params.beta = beta_;
  params.seed = seed;
  return maskmt::Encode(text, dicts_, params, *tagger_);
}

absl::StatusOr<std::string> DictionaryMechanism::Decode(
    absl::string_view y_pub, const EncodeResult& encoded) const {
  if (skip_decode_) return std::string(y_pub);
  absl::StatusOr<DecodeResult> decoded =
      maskmt::Decode(y_pub, encoded.history, dicts_);
  if (!decoded.ok()) return decoded.status();
  return std::move(decoded->y_pri);
}

std::unique_ptr<Mechanism> MakePrismR(DictionarySet dicts) {
  return std::make_unique<DictionaryMechanism>("prism_r", Method::kPrismR,
                                               dicts);
}

std::unique_ptr<Mechanism> MakePrismStar(DictionarySet dicts,
                                         const PosTagger& tagger) {
  return std::make_unique<DictionaryMechanism>(
      "prism_star", Method::kPrismStar, dicts, tagger);
}

std::unique_ptr<Mechanism> MakeNoDecode(DictionarySet dicts,
                                        const PosTagger& tagger) {
  return std::make_unique<DictionaryMechanism>(
      "no_decode", Method::kPrismStar, dicts, tagger, /*skip_decode=*/true);
}

char OracleEvaluate(absl::string_view reference, const QaItem& item) {
  std::set<std::string> words;
  for (const Token& t : Tokenize(reference).tokens) {
    if (t.kind == TokenKind::kWord) words.insert(ToLower(t.surface));
  }
  for (std::size_t i = 0; i < kNumChoices; ++i) {
    const auto& probes = item.probe_tokens[i];
    if (probes.empty()) continue;
    const bool all = std::all_of(
        probes.begin(), probes.end(),
        [&](const std::string& p) { return words.count(ToLower(p)) > 0; });
    if (all) return ChoiceLabel(i);
  }
  return 'A';
}

QaItem TranslateItem(const QaItem& item, const MockLexicon& lexicon) {
  QaItem out = item;
  auto map_word = [&](const std::string& w) {
    std::optional<std::string> v = lexicon.Lookup(w);
    return v ? *v : w;
  };
  for (std::size_t i = 0; i < kNumChoices; ++i) {
    out.choices[i] = map_word(item.choices[i]);
    for (std::string& p : out.probe_tokens[i]) p = map_word(p);
  }
  return out;
}

absl::StatusOr<double> Pps(const Mechanism& mechanism, double param,
                           const SyntheticCorpus& corpus,
                           const Evaluator& evaluator, uint64_t seed) {
  if (absl::Status s = CheckCorpus(corpus); !s.ok()) return s;
  const auto items = GroupItems(corpus);
  std::size_t correct = 0;
  for (std::size_t d = 0; d < corpus.documents.size(); ++d) {
    if (items[d].empty()) continue;
    absl::StatusOr<EncodeResult> enc =
        mechanism.Encode(corpus.documents[d], param, DeriveSeed(seed, d));
    if (!enc.ok()) return enc.status();
    for (const QaItem* item : items[d]) {
      if (evaluator(enc->x_pub, *item) == item->answer) ++correct;
    }
  }
  return 1.0 - static_cast<double>(correct) /
                   static_cast<double>(corpus.items.size());
}

absl::StatusOr<double> Qs(const Mechanism& mechanism, double param,
                          const SyntheticCorpus& corpus, const QsContext& ctx,
                          const Evaluator& evaluator, uint64_t seed) {
  if (absl::Status s = CheckCorpus(corpus); !s.ok()) return s;
  if (ctx.gateway == nullptr) {
    return absl::FailedPreconditionError("no engine gateway");
  }
  const auto items = GroupItems(corpus);
  std::size_t correct = 0;
  for (std::size_t d = 0; d < corpus.documents.size(); ++d) {
    if (items[d].empty()) continue;
    absl::StatusOr<EncodeResult> enc =
        mechanism.Encode(corpus.documents[d], param, DeriveSeed(seed, d));
    if (!enc.ok()) return enc.status();
    absl::StatusOr<std::string> y_pub =
        ctx.gateway->Translate(ctx.engine_id, enc->x_pub);
    if (!y_pub.ok()) return y_pub.status();
    absl::StatusOr<std::string> y_pri = mechanism.Decode(*y_pub, *enc);
    if (!y_pri.ok()) return y_pri.status();
    for (const QaItem* item : items[d]) {
      const QaItem asked = ctx.question_lexicon != nullptr
                               ? TranslateItem(*item, *ctx.question_lexicon)
                               : *item;
      if (evaluator(*y_pri, asked) == item->answer) ++correct;
    }
  }
  return static_cast<double>(correct) /
         static_cast<double>(corpus.items.size());
}

std::vector<TradeoffPoint> NormalizePoints(std::vector<TradeoffPoint> points) {
  std::stable_sort(points.begin(), points.end(),
                   [](const TradeoffPoint& a, const TradeoffPoint& b) {
                     return a.pps < b.pps;
                   });
  std::vector<TradeoffPoint> out;
  for (const TradeoffPoint& p : points) {
    if (!out.empty() && out.back().pps == p.pps) {
      if (p.qs > out.back().qs) out.back() = p;
      continue;
    }
    out.push_back(p);
  }
  return out;
}

absl::StatusOr<TradeoffCurve> Sweep(const Mechanism& mechanism,
                                    const std::vector<double>& grid,
                                    const SyntheticCorpus& corpus,
                                    const QsContext& ctx,
                                    const Evaluator& evaluator,
                                    uint64_t seed) {
  if (grid.empty()) return absl::InvalidArgumentError("parameter grid is empty");
  std::vector<double> values;
  for (double v : grid) {
    if (std::find(values.begin(), values.end(), v) == values.end()) {
      values.push_back(v);
    }
  }
  TradeoffCurve curve;
  curve.mechanism = mechanism.name();
  curve.engine = ctx.engine_id;
  std::vector<TradeoffPoint> points;
  for (double v : values) {
    absl::StatusOr<double> pps = Pps(mechanism, v, corpus, evaluator, seed);
    if (!pps.ok()) return pps.status();
    absl::StatusOr<double> qs = Qs(mechanism, v, corpus, ctx, evaluator, seed);
    if (!qs.ok()) return qs.status();
    points.push_back({v, *pps, *qs});
  }
  curve.points = NormalizePoints(std::move(points));
  return curve;
}

absl::StatusOr<double> Aupqc(const std::vector<TradeoffPoint>& points) {
  if (points.empty()) return absl::InvalidArgumentError("curve is empty");
  const std::vector<TradeoffPoint> curve = NormalizePoints(points);
  // Extended-precision accumulation; the result is the correctly rounded
  // area for short curves.
  long double area = static_cast<long double>(curve[0].pps) * curve[0].qs;
  for (std::size_t i = 1; i < curve.size(); ++i) {
    const long double width =
        static_cast<long double>(curve[i].pps) - curve[i - 1].pps;
    const long double height =
        (static_cast<long double>(curve[i - 1].qs) + curve[i].qs) / 2;
    area += width * height;
  }
  return static_cast<double>(area);
}

absl::StatusOr<QsAtResult> QsAt(const std::vector<TradeoffPoint>& points,
                                double p) {
  if (points.empty()) return absl::InvalidArgumentError("curve is empty");
  const std::vector<TradeoffPoint> curve = NormalizePoints(points);
  if (p <= curve.front().pps) return QsAtResult{curve.front().qs, false};
  if (p > curve.back().pps) return QsAtResult{curve.back().qs, true};
  for (std::size_t i = 1; i < curve.size(); ++i) {
    const TradeoffPoint& a = curve[i - 1];
    const TradeoffPoint& b = curve[i];
    if (p == b.pps) return QsAtResult{b.qs, false};
    if (p < b.pps) {
      const double t = (p - a.pps) / (b.pps - a.pps);
      return QsAtResult{a.qs + t * (b.qs - a.qs), false};
    }
  }
  return QsAtResult{curve.back().qs, false};
}

std::string CurveToCsv(const TradeoffCurve& curve) {
  std::string out = "param,pps,qs\n";
  for (const TradeoffPoint& p : curve.points) {
    absl::StrAppendFormat(&out, "%.17g,%.17g,%.17g\n", p.param, p.pps, p.qs);
  }
  return out;
}

absl::StatusOr<TradeoffCurve> ParseCurveCsv(absl::string_view csv) {
  TradeoffCurve curve;
  std::vector<TradeoffPoint> points;
  std::size_t line_no = 0;
  bool header_seen = false;
  for (absl::string_view line : absl::StrSplit(csv, '\n')) {
    ++line_no;
    line = absl::StripAsciiWhitespace(line);
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != "param,pps,qs") {
        return absl::InvalidArgumentError(
            absl::StrCat("curve line ", line_no, ": expected header param,pps,qs"));
      }
      header_seen = true;
      continue;
    }
    std::vector<absl::string_view> fields = absl::StrSplit(line, ',');
    TradeoffPoint p;
    if (fields.size() != 3 || !absl::SimpleAtod(fields[0], &p.param) ||
        !absl::SimpleAtod(fields[1], &p.pps) ||
        !absl::SimpleAtod(fields[2], &p.qs)) {
      return absl::InvalidArgumentError(
          absl::StrCat("curve line ", line_no, ": expected three numbers"));
    }
    if (!(p.pps >= 0.0 && p.pps <= 1.0 && p.qs >= 0.0 && p.qs <= 1.0)) {
      return absl::InvalidArgumentError(
          absl::StrCat("curve line ", line_no, ": pps and qs must lie in [0, 1]"));
    }
    points.push_back(p);
  }
  if (!header_seen) return absl::InvalidArgumentError("curve file is empty");
  curve.points = NormalizePoints(std::move(points));
  return curve;
}

absl::Status SaveCurve(const TradeoffCurve& curve, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return absl::PermissionDeniedError(absl::StrCat("cannot write ", path));
  out << CurveToCsv(curve);
  if (!out) return absl::InternalError(absl::StrCat("write failed: ", path));
  return absl::OkStatus();
}

absl::StatusOr<TradeoffCurve> LoadCurve(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseCurveCsv(buffer.str());
}

absl::StatusOr<std::string> ReportJson(const TradeoffCurve& curve,
                                       const std::vector<double>& qs_at_ps) {
  absl::StatusOr<double> area = Aupqc(curve.points);
  if (!area.ok()) return area.status();
  nlohmann::ordered_json report;
  report["mechanism"] = curve.mechanism;
  report["engine"] = curve.engine;
  report["aupqc"] = *area;
  nlohmann::ordered_json at = nlohmann::ordered_json::object();
  for (double p : qs_at_ps) {
    absl::StatusOr<QsAtResult> q = QsAt(curve.points, p);
    if (!q.ok()) return q.status();
    at[absl::StrCat(p)] = q->qs;
  }
  report["qs_at"] = std::move(at);
  return report.dump(2);
}

}  // namespace maskmt
