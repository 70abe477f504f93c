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

#include "maskmt/privacy.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "absl/strings/str_cat.h"

namespace maskmt {
namespace {

absl::Status CheckRatio(double ratio) {
  if (!(ratio > 0.0 && ratio < 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("ratio must lie in (0, 1), got ", ratio));
  }
  return absl::OkStatus();
}

void Enumerate(const WordSeq& x, const std::vector<std::string>& vocab,
               double ratio, std::size_t pos, WordSeq& current, double prob,
               std::map<WordSeq, double>& out) {
  if (pos == x.size()) {
    out[current] += prob;
    return;
  }
  current[pos] = x[pos];
  Enumerate(x, vocab, ratio, pos + 1, current, prob * (1.0 - ratio), out);
  const double draw = ratio / static_cast<double>(vocab.size());
  for (const std::string& v : vocab) {
    current[pos] = v;
    Enumerate(x, vocab, ratio, pos + 1, current, prob * draw, out);
  }
  current[pos] = x[pos];
}

// Odometer over all length-n sequences on `vocab`.
std::vector<WordSeq> AllSequences(std::size_t n,
                                  const std::vector<std::string>& vocab) {
  std::vector<WordSeq> out;
  std::vector<std::size_t> digits(n, 0);
  while (true) {
    WordSeq seq(n);
    for (std::size_t i = 0; i < n; ++i) seq[i] = vocab[digits[i]];
    out.push_back(std::move(seq));
    std::size_t i = 0;
    while (i < n && ++digits[i] == vocab.size()) digits[i++] = 0;
    if (i == n) break;
  }
  return out;
}

}  // namespace

absl::StatusOr<double> EpsilonFor(double ratio, std::size_t vocab_size) {
  if (absl::Status s = CheckRatio(ratio); !s.ok()) return s;
  if (vocab_size < 1) {
    return absl::InvalidArgumentError("vocabulary must not be empty");
  }
  const double v = static_cast<double>(vocab_size);
  // ln(1 + |V|(1-r)/r)
  return std::log1p(v * (1.0 - ratio) / ratio);
}

absl::StatusOr<double> RatioForEpsilon(double epsilon, std::size_t vocab_size) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    return absl::InvalidArgumentError(
        absl::StrCat("epsilon must be positive and finite, got ", epsilon));
  }
  if (vocab_size < 1) {
    return absl::InvalidArgumentError("vocabulary must not be empty");
  }
  const double v = static_cast<double>(vocab_size);
  return v / (std::expm1(epsilon) + v);
}

absl::StatusOr<std::map<WordSeq, double>> EncoderDistribution(
    const WordSeq& x, const std::vector<std::string>& vocab, double ratio) {
  if (absl::Status s = CheckRatio(ratio); !s.ok()) return s;
  if (x.size() > kMaxExhaustiveLength) {
    return absl::OutOfRangeError(absl::StrCat(
        "text length ", x.size(), " exceeds ", kMaxExhaustiveLength));
  }
  if (vocab.empty() || vocab.size() > kMaxExhaustiveVocab) {
    return absl::OutOfRangeError(absl::StrCat(
        "vocabulary size must be in 1..", kMaxExhaustiveVocab));
  }
  if (std::set<std::string>(vocab.begin(), vocab.end()).size() !=
      vocab.size()) {
    return absl::InvalidArgumentError("vocabulary has duplicate words");
  }
  std::map<WordSeq, double> out;
  WordSeq current = x;
  Enumerate(x, vocab, ratio, 0, current, 1.0, out);
  return out;
}

double ClosedFormProbability(const WordSeq& x, const WordSeq& s,
                             std::size_t vocab_size, double ratio) {
  if (x.size() != s.size()) return 0.0;
  const std::size_t n = x.size();
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) c += x[i] != s[i] ? 1 : 0;
  const double v = static_cast<double>(vocab_size);
  const double r = ratio;
  const double kept = static_cast<double>(n - c);
  return std::pow(r, static_cast<double>(c)) * std::pow(1.0 - r, kept) *
         std::pow(1.0 / v, static_cast<double>(c)) *
         std::pow(1.0 + r / (v * (1.0 - r)), kept);
}

absl::StatusOr<DpCheckResult> DpRatioCheck(std::size_t n,
                                           std::size_t vocab_size,
                                           double ratio) {
  if (absl::Status s = CheckRatio(ratio); !s.ok()) return s;
  if (n < 1 || n > kMaxExhaustiveLength) {
    return absl::OutOfRangeError(
        absl::StrCat("n must be in 1..", kMaxExhaustiveLength));
  }
  if (vocab_size < 2 || vocab_size > kMaxExhaustiveVocab) {
    return absl::OutOfRangeError(absl::StrCat(
        "vocabulary size must be in 2..", kMaxExhaustiveVocab,
        " (neighbours need two words)"));
  }
  std::vector<std::string> vocab;
  for (std::size_t i = 0; i < vocab_size; ++i) {
    vocab.push_back(absl::StrCat("w", i));
  }
  const std::vector<WordSeq> texts = AllSequences(n, vocab);
  std::map<WordSeq, std::map<WordSeq, double>> dist;
  for (const WordSeq& x : texts) {
    absl::StatusOr<std::map<WordSeq, double>> d =
        EncoderDistribution(x, vocab, ratio);
    if (!d.ok()) return d.status();
    dist.emplace(x, *std::move(d));
  }

  DpCheckResult result;
  result.bound = (ratio + static_cast<double>(vocab_size) * (1.0 - ratio)) /
                 ratio;
  result.max_ratio = 0.0;
  result.min_ratio = std::numeric_limits<double>::infinity();
  for (const WordSeq& x : texts) {
    const auto& px = dist.at(x);
    for (std::size_t i = 0; i < n; ++i) {
      for (const std::string& alt : vocab) {
        if (alt == x[i]) continue;
        WordSeq neighbour = x;
        neighbour[i] = alt;
        const auto& py = dist.at(neighbour);
        ++result.neighbour_pairs;
        for (const WordSeq& s : texts) {
          const auto a = px.find(s);
          const auto b = py.find(s);
          const double pa = a == px.end() ? 0.0 : a->second;
          const double pb = b == py.end() ? 0.0 : b->second;
          if (pa == 0.0 && pb == 0.0) continue;
          const double q = pb == 0.0 ? std::numeric_limits<double>::infinity()
                                     : pa / pb;
          result.max_ratio = std::max(result.max_ratio, q);
          result.min_ratio = std::min(result.min_ratio, q);
          ++result.comparisons;
        }
      }
    }
  }
  return result;
}

}  // namespace maskmt
