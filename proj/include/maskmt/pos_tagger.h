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

#ifndef MASKMT_POS_TAGGER_H_
#define MASKMT_POS_TAGGER_H_

#include <map>
#include <string>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "maskmt/text.h"

namespace maskmt {

// Lexicon tagger. Lookup is on the lowercased surface. Words missing from the
// lexicon are tagged in this order:
//   capitalized and not sentence-initial -> PROPN
//   -ing / -ed                            -> VERB
//   -ly                                   -> ADV
//   -ous -ful -ive -able -ible -less -al  -> ADJ
//   anything else                         -> NOUN
class PosTagger {
 public:
  explicit PosTagger(std::map<std::string, PosTag> lexicon)
      : lexicon_(std::move(lexicon)) {}

  // Tagger over the built-in fixture lexicon.
  static const PosTagger& Default();

  // TSV `word<TAB>tag`, one entry per line. Blank lines and lines starting
  // with '#' are skipped.
  static absl::StatusOr<PosTagger> FromFile(const std::string& path);
  static absl::StatusOr<PosTagger> FromTsv(absl::string_view contents);

  absl::Status Save(const std::string& path) const;

  TaggedText Tag(TaggedText text) const;

  // Tag of a single word with no sentence context.
  PosTag TagWord(absl::string_view word) const;

  const std::map<std::string, PosTag>& lexicon() const { return lexicon_; }

 private:
  PosTag TagUnknown(const Token& token, bool sentence_initial) const;

  std::map<std::string, PosTag> lexicon_;
};

}  // namespace maskmt

#endif  // MASKMT_POS_TAGGER_H_
