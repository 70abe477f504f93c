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

#include "maskmt/text.h"

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include <algorithm>
#include <array>

#include "absl/strings/str_cat.h"

namespace maskmt {
namespace {

constexpr std::array<absl::string_view, 12> kTagNames = {
    "NOUN", "PROPN", "VERB", "ADJ", "ADV",   "DET",
    "PRON", "ADP",   "CONJ", "NUM", "PUNCT", "OTHER"};

// Decodes the UTF-8 string into code points. Ill-formed sequences become
// U+FFFD so tokenization stays total.
std::vector<UChar32> CodePoints(absl::string_view s) {
  std::vector<UChar32> out;
  out.reserve(s.size());
  int32_t i = 0;
  const auto* p = reinterpret_cast<const uint8_t*>(s.data());
  const int32_t n = static_cast<int32_t>(s.size());
  while (i < n) {
    UChar32 c;
    U8_NEXT(p, i, n, c);
    out.push_back(c < 0 ? 0xFFFD : c);
  }
  return out;
}

void AppendCodePoint(std::string& out, UChar32 c) {
  char buf[U8_MAX_LENGTH];
  int32_t len = 0;
  UBool error = false;
  U8_APPEND(reinterpret_cast<uint8_t*>(buf), len, U8_MAX_LENGTH, c, error);
  if (!error) out.append(buf, static_cast<size_t>(len));
}

bool IsPunctuation(UChar32 c) {
  if (u_ispunct(c)) return true;
  switch (u_charType(c)) {
    case U_MATH_SYMBOL:
    case U_CURRENCY_SYMBOL:
    case U_MODIFIER_SYMBOL:
    case U_OTHER_SYMBOL:
      return true;
    default:
      return false;
  }
}

bool IsSpace(UChar32 c) { return u_isUWhiteSpace(c) != 0; }

TokenKind ClassifyChunk(const std::vector<UChar32>& cps, size_t begin,
                        size_t end) {
  bool all_punct = true;
  for (size_t i = begin; i < end; ++i) {
    if (!IsPunctuation(cps[i])) {
      all_punct = false;
      break;
    }
  }
  if (all_punct) return TokenKind::kPunctuation;
  if (!u_isdigit(cps[begin])) return TokenKind::kWord;
  for (size_t i = begin; i < end; ++i) {
    const UChar32 c = cps[i];
    if (!u_isdigit(c) && c != '.' && c != ',' && c != ':') {
      return TokenKind::kWord;
    }
  }
  return TokenKind::kNumber;
}

std::string Encode(const std::vector<UChar32>& cps, size_t begin, size_t end) {
  std::string out;
  for (size_t i = begin; i < end; ++i) AppendCodePoint(out, cps[i]);
  return out;
}

std::string ToUtf8(const icu::UnicodeString& s) {
  std::string out;
  s.toUTF8String(out);
  return out;
}

Token MakeToken(std::string surface, TokenKind kind) {
  Token t;
  t.kind = kind;
  t.case_shape = kind == TokenKind::kWord ? DetectCaseShape(surface)
                                          : CaseShape::kLower;
  t.surface = std::move(surface);
  return t;
}

PosTag InitialTag(TokenKind kind) {
  switch (kind) {
    case TokenKind::kPunctuation:
      return PosTag::kPunct;
    case TokenKind::kNumber:
      return PosTag::kNum;
    case TokenKind::kWord:
      return PosTag::kOther;
  }
  return PosTag::kOther;
}

}  // namespace

absl::string_view PosTagName(PosTag tag) {
  return kTagNames[static_cast<size_t>(tag)];
}

std::optional<PosTag> ParsePosTag(absl::string_view name) {
  for (size_t i = 0; i < kTagNames.size(); ++i) {
    if (kTagNames[i] == name) return static_cast<PosTag>(i);
  }
  return std::nullopt;
}

std::size_t TaggedText::WordCount() const {
  return static_cast<size_t>(
      std::count_if(tokens.begin(), tokens.end(),
                    [](const Token& t) { return t.kind == TokenKind::kWord; }));
}

bool Vocabulary::Contains(absl::string_view word) const {
  return words_.find(std::string(word)) != words_.end();
}

std::size_t CodePointLength(absl::string_view s) {
  return CodePoints(s).size();
}

std::string NormalizeText(absl::string_view text) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  std::string composed;
  if (U_SUCCESS(status)) {
    icu::UnicodeString u = icu::UnicodeString::fromUTF8(
        icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
    icu::UnicodeString n = nfc->normalize(u, status);
    composed = U_SUCCESS(status) ? ToUtf8(n) : std::string(text);
  } else {
    composed = std::string(text);
  }

  const std::vector<UChar32> cps = CodePoints(composed);
  std::string out;
  out.reserve(composed.size());
  size_t i = 0;
  while (i < cps.size()) {
    if (!IsSpace(cps[i])) {
      AppendCodePoint(out, cps[i]);
      ++i;
      continue;
    }
    bool newline = false;
    while (i < cps.size() && IsSpace(cps[i])) {
      if (cps[i] == '\n') newline = true;
      ++i;
    }
    if (!out.empty() && i < cps.size()) out += newline ? "\n" : " ";
  }
  return out;
}

TaggedText Tokenize(absl::string_view text) {
  const std::string normalized = NormalizeText(text);
  const std::vector<UChar32> cps = CodePoints(normalized);
  TaggedText out;
  auto push = [&](std::string separator, size_t b, size_t e, TokenKind kind) {
    out.tokens.push_back(MakeToken(Encode(cps, b, e), kind));
    out.tags.push_back(InitialTag(kind));
    out.separators.push_back(std::move(separator));
  };

  std::string pending_separator;
  size_t i = 0;
  while (i < cps.size()) {
    if (IsSpace(cps[i])) {
      pending_separator = cps[i] == '\n' ? "\n" : " ";
      ++i;
      continue;
    }
    size_t chunk_end = i;
    while (chunk_end < cps.size() && !IsSpace(cps[chunk_end])) ++chunk_end;

    size_t core_begin = i;
    while (core_begin < chunk_end && IsPunctuation(cps[core_begin])) {
      ++core_begin;
    }
    size_t core_end = chunk_end;
    while (core_end > core_begin && IsPunctuation(cps[core_end - 1])) {
      --core_end;
    }

    bool first = true;
    auto next_separator = [&]() {
      std::string sep = first ? pending_separator : std::string();
      first = false;
      return sep;
    };
    for (size_t k = i; k < core_begin; ++k) {
      push(next_separator(), k, k + 1, TokenKind::kPunctuation);
    }
    if (core_begin < core_end) {
      push(next_separator(), core_begin, core_end,
           ClassifyChunk(cps, core_begin, core_end));
    }
    for (size_t k = core_end; k < chunk_end; ++k) {
      push(next_separator(), k, k + 1, TokenKind::kPunctuation);
    }
    pending_separator.clear();
    i = chunk_end;
  }
  return out;
}

std::string Detokenize(const TaggedText& text) {
  std::string out;
  for (size_t i = 0; i < text.tokens.size(); ++i) {
    if (i > 0 && i < text.separators.size()) out += text.separators[i];
    out += text.tokens[i].surface;
  }
  return out;
}

std::string ToLower(absl::string_view s) {
  icu::UnicodeString u = icu::UnicodeString::fromUTF8(
      icu::StringPiece(s.data(), static_cast<int32_t>(s.size())));
  u.toLower(icu::Locale::getRoot());
  return ToUtf8(u);
}

CaseShape DetectCaseShape(absl::string_view surface) {
  const std::vector<UChar32> cps = CodePoints(surface);
  size_t cased = 0;
  size_t upper = 0;
  bool first_cased_is_upper = false;
  bool first_seen = false;
  bool rest_lower = true;
  for (UChar32 c : cps) {
    const bool is_upper = u_isupper(c) || u_istitle(c);
    const bool is_lower = u_islower(c);
    if (!is_upper && !is_lower) continue;
    ++cased;
    if (is_upper) ++upper;
    if (!first_seen) {
      first_seen = true;
      first_cased_is_upper = is_upper;
    } else if (is_upper) {
      rest_lower = false;
    }
  }
  if (cased == 0 || upper == 0) return CaseShape::kLower;
  if (first_cased_is_upper && rest_lower) return CaseShape::kTitle;
  if (upper == cased) return CaseShape::kUpper;
  return CaseShape::kMixed;
}

std::string ApplyCaseShape(CaseShape shape, absl::string_view word) {
  switch (shape) {
    case CaseShape::kMixed:
      return std::string(word);
    case CaseShape::kLower:
      return ToLower(word);
    case CaseShape::kUpper: {
      icu::UnicodeString u = icu::UnicodeString::fromUTF8(
          icu::StringPiece(word.data(), static_cast<int32_t>(word.size())));
      u.toUpper(icu::Locale::getRoot());
      return ToUtf8(u);
    }
    case CaseShape::kTitle: {
      const std::vector<UChar32> cps = CodePoints(ToLower(word));
      std::string out;
      bool done = false;
      for (UChar32 c : cps) {
        if (!done && (u_islower(c) || u_isupper(c))) {
          AppendCodePoint(out, u_totitle(c));
          done = true;
        } else {
          AppendCodePoint(out, c);
        }
      }
      return out;
    }
  }
  return std::string(word);
}

absl::StatusOr<TaggedText> SubstituteToken(const TaggedText& text,
                                           std::size_t index,
                                           absl::string_view replacement) {
  if (index >= text.tokens.size()) {
    return absl::OutOfRangeError(absl::StrCat(
        "token index ", index, " out of range for ", text.tokens.size(),
        " tokens"));
  }
  const Token& original = text.tokens[index];
  if (original.kind != TokenKind::kWord) {
    return absl::InvalidArgumentError(absl::StrCat(
        "token ", index, " ('", original.surface, "') is not a word"));
  }
  if (replacement.empty()) {
    return absl::InvalidArgumentError("replacement word is empty");
  }
  TaggedText out = text;
  Token& t = out.tokens[index];
  t.surface = ApplyCaseShape(original.case_shape, replacement);
  t.case_shape = DetectCaseShape(t.surface);
  return out;
}

}  // namespace maskmt
