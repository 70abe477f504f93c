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

// Privacy/quality evaluation.
//
// PPS = 1 - accuracy of an evaluator answering the questions from x_pub.
// QS  = accuracy of the evaluator answering from y_pri, with the choice
//       probes mapped into the target language.
// A sweep scans the mechanism parameter and yields a curve sorted by PPS;
// AUPQC is the area under it and QS@p reads it at a given PPS.

#ifndef MASKMT_EVALUATION_H_
#define MASKMT_EVALUATION_H_

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "maskmt/dictionary.h"
#include "maskmt/engine.h"
#include "maskmt/mechanisms.h"
#include "maskmt/pos_tagger.h"
#include "maskmt/synthetic_corpus.h"

namespace maskmt {

// A privacy mechanism under evaluation. Deliberately never sees a QaItem.
class Mechanism {
 public:
  virtual ~Mechanism() = default;
  virtual std::string name() const = 0;
  virtual absl::StatusOr<EncodeResult> Encode(absl::string_view text,
                                              double param,
                                              uint64_t seed) const = 0;
  virtual absl::StatusOr<std::string> Decode(
      absl::string_view y_pub, const EncodeResult& encoded) const = 0;
};

// Wraps the dictionary-based encoders. With `skip_decode` the engine output
// is returned untouched (the NoDecode baseline).
class DictionaryMechanism : public Mechanism {
 public:
  DictionaryMechanism(std::string name, Method method, DictionarySet dicts,
                      const PosTagger& tagger = PosTagger::Default(),
                      bool skip_decode = false, double beta = 0.0);

  std::string name() const override { return name_; }
  absl::StatusOr<EncodeResult> Encode(absl::string_view text, double param,
                                      uint64_t seed) const override;
  absl::StatusOr<std::string> Decode(absl::string_view y_pub,
                                     const EncodeResult& encoded) const override;

 private:
  std::string name_;
  Method method_;
  DictionarySet dicts_;
  const PosTagger* tagger_;
  bool skip_decode_;
  double beta_;
};

std::unique_ptr<Mechanism> MakePrismR(DictionarySet dicts);
std::unique_ptr<Mechanism> MakePrismStar(
    DictionarySet dicts, const PosTagger& tagger = PosTagger::Default());
// PRISM* encoding with decoding skipped.
std::unique_ptr<Mechanism> MakeNoDecode(
    DictionarySet dicts, const PosTagger& tagger = PosTagger::Default());

// (reference text, question) -> chosen label.
using Evaluator = std::function<char(absl::string_view, const QaItem&)>;

// First label whose probe tokens all occur as words of `reference`
// (case-insensitive), else 'A'.
char OracleEvaluate(absl::string_view reference, const QaItem& item);

// Maps choices and probes through `lexicon`; words without an entry stay.
QaItem TranslateItem(const QaItem& item, const MockLexicon& lexicon);

struct QsContext {
  EngineGateway* gateway = nullptr;
  std::string engine_id;
  const MockLexicon* question_lexicon = nullptr;
};

// Document d is encoded with DeriveSeed(seed, d) regardless of `param`, so
// different parameter values see common random numbers.
absl::StatusOr<double> Pps(const Mechanism& mechanism, double param,
                           const SyntheticCorpus& corpus,
                           const Evaluator& evaluator, uint64_t seed);

absl::StatusOr<double> Qs(const Mechanism& mechanism, double param,
                          const SyntheticCorpus& corpus, const QsContext& ctx,
                          const Evaluator& evaluator, uint64_t seed);

struct TradeoffPoint {
  double param = 0.0;
  double pps = 0.0;
  double qs = 0.0;

  friend bool operator==(const TradeoffPoint&, const TradeoffPoint&) = default;
};

struct TradeoffCurve {
  std::string mechanism;
  std::string engine;
  std::vector<TradeoffPoint> points;  // ascending, distinct pps

  friend bool operator==(const TradeoffCurve&, const TradeoffCurve&) = default;
};

// Sorts by pps and merges equal-pps points, keeping the larger qs (and that
// point's param).
std::vector<TradeoffPoint> NormalizePoints(std::vector<TradeoffPoint> points);

// Evaluates one point per distinct grid value.
absl::StatusOr<TradeoffCurve> Sweep(const Mechanism& mechanism,
                                    const std::vector<double>& grid,
                                    const SyntheticCorpus& corpus,
                                    const QsContext& ctx,
                                    const Evaluator& evaluator, uint64_t seed);

// First point as a rectangle from pps 0, then trapezoids.
absl::StatusOr<double> Aupqc(const std::vector<TradeoffPoint>& points);

struct QsAtResult {
  double qs = 0.0;
  bool extrapolated = false;  // p beyond the largest measured pps
};

// Linear interpolation, clamped to the end points outside the curve.
absl::StatusOr<QsAtResult> QsAt(const std::vector<TradeoffPoint>& points,
                                double p);

std::string CurveToCsv(const TradeoffCurve& curve);
// Points are normalized after parsing.
absl::StatusOr<TradeoffCurve> ParseCurveCsv(absl::string_view csv);
absl::Status SaveCurve(const TradeoffCurve& curve, const std::string& path);
absl::StatusOr<TradeoffCurve> LoadCurve(const std::string& path);

// {"mechanism", "engine", "aupqc", "qs_at": {"<p>": qs}}
absl::StatusOr<std::string> ReportJson(const TradeoffCurve& curve,
                                       const std::vector<double>& qs_at_ps);

}  // namespace maskmt

#endif  // MASKMT_EVALUATION_H_
