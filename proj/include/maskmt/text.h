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

#ifndef MASKMT_TEXT_H_
#define MASKMT_TEXT_H_

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"

namespace maskmt {

enum class TokenKind { kWord, kPunctuation, kNumber };

enum class CaseShape { kLower, kTitle, kUpper, kMixed };

enum class PosTag {
  kNoun,
  kPropn,
  kVerb,
  kAdj,
  kAdv,
  kDet,
  kPron,
  kAdp,
  kConj,
  kNum,
  kPunct,
  kOther,
};

inline constexpr PosTag kAllPosTags[] = {
    PosTag::kNoun, PosTag::kPropn, PosTag::kVerb, PosTag::kAdj,
    PosTag::kAdv,  PosTag::kDet,   PosTag::kPron, PosTag::kAdp,
    PosTag::kConj, PosTag::kNum,   PosTag::kPunct, PosTag::kOther};

absl::string_view PosTagName(PosTag tag);
std::optional<PosTag> ParsePosTag(absl::string_view name);

struct Token {
  std::string surface;
  TokenKind kind = TokenKind::kWord;
  CaseShape case_shape = CaseShape::kLower;

  friend bool operator==(const Token&, const Token&) = default;
};

// A tokenized text. `separators[i]` is the whitespace emitted before token i
// on detokenization; it is empty for the first token and for punctuation that
// was attached to its neighbour in the source.
struct TaggedText {
  std::vector<Token> tokens;
  std::vector<PosTag> tags;
  std::vector<std::string> separators;

  std::size_t size() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }
  std::size_t WordCount() const;

  friend bool operator==(const TaggedText&, const TaggedText&) = default;
};

// Set of lowercase source words. Iteration order is lexicographic, so index
// based draws are deterministic.
class Vocabulary {
 public:
  Vocabulary() = default;
  explicit Vocabulary(std::set<std::string> words) : words_(std::move(words)) {}

  bool Contains(absl::string_view word) const;
  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }
  const std::set<std::string>& words() const { return words_; }
  std::vector<std::string> AsVector() const {
    return {words_.begin(), words_.end()};
  }
  void Insert(std::string word) { words_.insert(std::move(word)); }

  friend bool operator==(const Vocabulary&, const Vocabulary&) = default;

 private:
  std::set<std::string> words_;
};

// NFC normalization followed by whitespace collapsing. Runs containing a
// newline collapse to "\n", all other runs to a single space; leading and
// trailing whitespace is dropped.
std::string NormalizeText(absl::string_view text);

// Splits normalized text on whitespace, then peels leading and trailing
// punctuation off each chunk one code point at a time. Apostrophes and hyphens
// inside a word stay in the word. Words get tag OTHER until `PosTagger::Tag`
// runs; punctuation and numbers are tagged immediately.
TaggedText Tokenize(absl::string_view text);

std::string Detokenize(const TaggedText& text);

std::string ToLower(absl::string_view s);
CaseShape DetectCaseShape(absl::string_view surface);
// `kMixed` leaves the word untouched.
std::string ApplyCaseShape(CaseShape shape, absl::string_view word);

// Replaces the word at `index` with `replacement` re-shaped to the case of
// the token it replaces.
absl::StatusOr<TaggedText> SubstituteToken(const TaggedText& text,
                                           std::size_t index,
                                           absl::string_view replacement);

// Number of Unicode code points in a UTF-8 string.
std::size_t CodePointLength(absl::string_view s);

}  // namespace maskmt

#endif  // MASKMT_TEXT_H_
