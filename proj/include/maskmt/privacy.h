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

// Privacy calculus for the randomized substitution encoder, and exhaustive
// checks of it on small inputs.
//
// For a text x of n words over a vocabulary V and an output s at Hamming
// distance c from x, the encoder emits s with probability
//
//   r^c (1-r)^(n-c) |V|^-c (1 + r / (|V| (1-r)))^(n-c),
//
// so neighbouring texts differ in output probability by at most a factor of
// (r + |V|(1-r)) / r, i.e. epsilon = ln of that, with delta = 0.

#ifndef MASKMT_PRIVACY_H_
#define MASKMT_PRIVACY_H_

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "absl/status/statusor.h"

namespace maskmt {

absl::StatusOr<double> EpsilonFor(double ratio, std::size_t vocab_size);

// Inverse of EpsilonFor: r = |V| / (e^epsilon - 1 + |V|).
absl::StatusOr<double> RatioForEpsilon(double epsilon, std::size_t vocab_size);

inline constexpr std::size_t kMaxExhaustiveLength = 6;
inline constexpr std::size_t kMaxExhaustiveVocab = 6;

using WordSeq = std::vector<std::string>;

// Exact output distribution of the substitution encoder for input `x` over
// `vocab`, by enumerating every keep/replace pattern and every draw.
absl::StatusOr<std::map<WordSeq, double>> EncoderDistribution(
    const WordSeq& x, const std::vector<std::string>& vocab, double ratio);

// Closed form of Pr[encode(x) = s].
double ClosedFormProbability(const WordSeq& x, const WordSeq& s,
                             std::size_t vocab_size, double ratio);

struct DpCheckResult {
  double max_ratio = 0.0;
  double min_ratio = 0.0;
  double bound = 0.0;  // (r + |V|(1-r)) / r
  std::size_t neighbour_pairs = 0;
  std::size_t comparisons = 0;
};

// Over every text of length n on a vocabulary of `vocab_size` words, every
// neighbour (one differing position) and every output, computes the extreme
// probability ratios.
absl::StatusOr<DpCheckResult> DpRatioCheck(std::size_t n,
                                           std::size_t vocab_size,
                                           double ratio);

}  // namespace maskmt

#endif  // MASKMT_PRIVACY_H_
