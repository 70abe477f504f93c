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

// Word-substitution encoders and the matching decoder.
//
// An encoder turns the private text into the public text that is sent to the
// translator and returns the substitution history, which never leaves the
// user's machine. After translation the decoder looks for the translation of
// every substitute in the engine output and swaps it back for the translation
// of the original word.
//
//   PRISM-R  every word independently, with probability r, is replaced by a
//            word drawn uniformly from the dictionary's source vocabulary
//            (possibly itself). epsilon-DP with
//            epsilon = ln((r + |V|(1 - r)) / r).
//   PRISM*   the ceil(r * n) most confidently translatable words are replaced
//            by the unused same-tag source word of highest confidence. No
//            formal bound.
//   mixed    one Bernoulli(beta) draw picks PRISM* (beta) or PRISM-R.
//
// Only word tokens take part; punctuation and numbers are never replaced and
// do not count toward n.

#ifndef MASKMT_MECHANISMS_H_
#define MASKMT_MECHANISMS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "maskmt/dictionary.h"
#include "maskmt/pos_tagger.h"
#include "maskmt/text.h"

namespace maskmt {

enum class Method { kPrismR, kPrismStar, kMixed };

absl::string_view MethodName(Method method);
// Accepts "prism_r"/"prism-r", "prism_star"/"prism-star", "mixed".
std::optional<Method> ParseMethod(absl::string_view name);

struct MechanismParams {
  Method method = Method::kPrismR;
  double ratio = 0.5;  // (0, 1)
  double beta = 0.0;   // [0, 1], mixed only
  uint64_t seed = 0;
};

absl::Status ValidateParams(const MechanismParams& params);

struct SubstitutionRecord {
  std::size_t position = 0;  // token index in the encoded text
  std::string original;      // surface in the private text
  std::string substitute;    // surface in the public text
  std::optional<PosTag> tag;  // set by PRISM*

  friend bool operator==(const SubstitutionRecord&,
                         const SubstitutionRecord&) = default;
};

struct SubstitutionHistory {
  std::vector<SubstitutionRecord> records;
  std::size_t source_len = 0;  // token count of the encoded text

  friend bool operator==(const SubstitutionHistory&,
                         const SubstitutionHistory&) = default;
};

absl::Status ValidateHistory(const SubstitutionHistory& history);

struct EncodeResult {
  std::string x_pub;
  SubstitutionHistory history;
  // Set only when the PRISM-R encoder produced x_pub.
  std::optional<double> epsilon;
  Method method = Method::kPrismR;
  // Encoder that actually ran; differs from `method` only for kMixed.
  Method branch = Method::kPrismR;
  // Mixture metadata (kMixed only): beta and the epsilon of its PRISM-R arm.
  std::optional<double> mixture_beta;
  std::optional<double> mixture_epsilon_r;
  // Non-empty when PRISM* could not reach its substitution target.
  std::string warning;

  friend bool operator==(const EncodeResult&, const EncodeResult&) = default;
};

struct DecodeMiss {
  SubstitutionRecord record;
  std::string reason;
};

struct DecodeResult {
  std::string y_pri;
  std::vector<DecodeMiss> misses;
};

// Dictionaries available to encoders and the decoder. Records without a tag
// decode against `plain`, tagged records against `pos_keyed`.
struct DictionarySet {
  const WordDictionary* plain = nullptr;
  const WordDictionary* pos_keyed = nullptr;
  const ConfidenceTable* confidence = nullptr;  // for `pos_keyed`
};

absl::StatusOr<EncodeResult> EncodePrismR(absl::string_view text,
                                          const WordDictionary& dict,
                                          const MechanismParams& params);

absl::StatusOr<EncodeResult> EncodePrismStar(
    absl::string_view text, const WordDictionary& dict,
    const ConfidenceTable& confidence, const MechanismParams& params,
    const PosTagger& tagger = PosTagger::Default());

// With the same seed, beta = 0 reproduces EncodePrismR exactly and beta = 1
// reproduces EncodePrismStar.
absl::StatusOr<EncodeResult> EncodeMixed(
    absl::string_view text, const DictionarySet& dicts,
    const MechanismParams& params,
    const PosTagger& tagger = PosTagger::Default());

// Dispatches on params.method.
absl::StatusOr<EncodeResult> Encode(
    absl::string_view text, const DictionarySet& dicts,
    const MechanismParams& params,
    const PosTagger& tagger = PosTagger::Default());

struct ForcedSubstitution {
  std::size_t position;  // token index in tokenize(text)
  std::string replacement;
};

// Applies the given substitutions verbatim. With a tagger the records carry
// POS tags (for a POS-keyed decode), otherwise they are untagged.
absl::StatusOr<EncodeResult> EncodeWithSubstitutions(
    absl::string_view text, const std::vector<ForcedSubstitution>& subs,
    const PosTagger* tagger = nullptr);

// Processes records in history order. For a record (w -> u) the ranked
// translations of u are tried in order; the first one present as a whole,
// unconsumed word of the engine output (case-insensitive) is overwritten by
// the top translation of w, keeping that token's case. When a candidate
// occurs several times, the occurrence whose relative position is closest to
// the record's relative position in the encoded text wins, earliest first on
// ties. Records without a hit are reported as misses and leave the text
// unchanged.
absl::StatusOr<DecodeResult> Decode(absl::string_view y_pub,
                                    const SubstitutionHistory& history,
                                    const DictionarySet& dicts);

}  // namespace maskmt

#endif  // MASKMT_MECHANISMS_H_
