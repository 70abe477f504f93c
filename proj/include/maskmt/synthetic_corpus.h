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

// Templated short stories with four multiple-choice questions each, built
// only from words of the fixture lexicon.
//
// Every question asks for one slot filler (place, object, food, animal). The
// three distractors come from the same category and never occur in the
// story, so scanning the plaintext for the choice words answers every
// question correctly.

#ifndef MASKMT_SYNTHETIC_CORPUS_H_
#define MASKMT_SYNTHETIC_CORPUS_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/statusor.h"

namespace maskmt {

inline constexpr std::size_t kNumChoices = 4;

// 'A' + index.
char ChoiceLabel(std::size_t index);

struct QaItem {
  std::size_t doc_id = 0;
  std::string question;
  std::array<std::string, kNumChoices> choices;
  char answer = 'A';
  // Lowercase words the oracle looks for, one set per choice.
  std::array<std::vector<std::string>, kNumChoices> probe_tokens;

  friend bool operator==(const QaItem&, const QaItem&) = default;
};

struct SyntheticCorpus {
  std::vector<std::string> documents;
  std::vector<QaItem> items;  // kNumChoices per document, in document order

  friend bool operator==(const SyntheticCorpus&,
                         const SyntheticCorpus&) = default;
};

absl::StatusOr<SyntheticCorpus> GenerateSyntheticCorpus(std::size_t size,
                                                        uint64_t seed);

// Independent single sentences from the same templates, used as the public
// corpus for dictionary scoring and induction.
std::vector<std::string> GeneratePublicSentences(std::size_t count,
                                                 uint64_t seed);

}  // namespace maskmt

#endif  // MASKMT_SYNTHETIC_CORPUS_H_
