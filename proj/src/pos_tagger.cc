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

#include "maskmt/pos_tagger.h"

#include <fstream>
#include <sstream>

#include "absl/strings/match.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"
#include "maskmt/fixture_lexicon.h"

namespace maskmt {
namespace {

bool EndsSentence(const Token& t) {
  return t.kind == TokenKind::kPunctuation &&
         (t.surface == "." || t.surface == "!" || t.surface == "?");
}

}  // namespace

const PosTagger& PosTagger::Default() {
  static const PosTagger* tagger = new PosTagger(FixturePosTable());
  return *tagger;
}

absl::StatusOr<PosTagger> PosTagger::FromTsv(absl::string_view contents) {
  std::map<std::string, PosTag> lexicon;
  int line_no = 0;
  for (absl::string_view line : absl::StrSplit(contents, '\n')) {
    ++line_no;
    line = absl::StripTrailingAsciiWhitespace(line);
    if (line.empty() || absl::StartsWith(line, "#")) continue;
    std::vector<absl::string_view> fields = absl::StrSplit(line, '\t');
    if (fields.size() != 2 || fields[0].empty()) {
      return absl::InvalidArgumentError(
          absl::StrCat("POS lexicon line ", line_no,
                       ": expected `word<TAB>tag`"));
    }
    auto tag = ParsePosTag(fields[1]);
    if (!tag) {
      return absl::InvalidArgumentError(absl::StrCat(
          "POS lexicon line ", line_no, ": unknown tag '", fields[1], "'"));
    }
    lexicon[ToLower(fields[0])] = *tag;
  }
  return PosTagger(std::move(lexicon));
}

absl::StatusOr<PosTagger> PosTagger::FromFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::stringstream buf;
  buf << in.rdbuf();
  return FromTsv(buf.str());
}

absl::Status PosTagger::Save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) return absl::PermissionDeniedError(absl::StrCat("cannot write ", path));
  for (const auto& [word, tag] : lexicon_) {
    out << word << '\t' << PosTagName(tag) << '\n';
  }
  return out ? absl::OkStatus()
             : absl::InternalError(absl::StrCat("write failed: ", path));
}

PosTag PosTagger::TagUnknown(const Token& token, bool sentence_initial) const {
  if (!sentence_initial && token.case_shape != CaseShape::kLower) {
    return PosTag::kPropn;
  }
  const std::string w = ToLower(token.surface);
  auto ends = [&](absl::string_view suffix) {
    return w.size() > suffix.size() + 1 && absl::EndsWith(w, suffix);
  };
  if (ends("ing") || ends("ed")) return PosTag::kVerb;
  if (ends("ly")) return PosTag::kAdv;
  for (absl::string_view s : {"ous", "ful", "ive", "able", "ible", "less", "al"}) {
    if (ends(s)) return PosTag::kAdj;
  }
  return PosTag::kNoun;
}

PosTag PosTagger::TagWord(absl::string_view word) const {
  TaggedText t = Tag(Tokenize(word));
  return t.tags.empty() ? PosTag::kNoun : t.tags.front();
}

TaggedText PosTagger::Tag(TaggedText text) const {
  text.tags.resize(text.tokens.size(), PosTag::kOther);
  bool sentence_initial = true;
  for (size_t i = 0; i < text.tokens.size(); ++i) {
    const Token& t = text.tokens[i];
    switch (t.kind) {
      case TokenKind::kPunctuation:
        text.tags[i] = PosTag::kPunct;
        break;
      case TokenKind::kNumber:
        text.tags[i] = PosTag::kNum;
        break;
      case TokenKind::kWord: {
        auto it = lexicon_.find(ToLower(t.surface));
        text.tags[i] = it != lexicon_.end() ? it->second
                                            : TagUnknown(t, sentence_initial);
        // PUNCT is reserved for punctuation tokens.
        if (text.tags[i] == PosTag::kPunct) text.tags[i] = PosTag::kOther;
        break;
      }
    }
    if (EndsSentence(t)) {
      sentence_initial = true;
    } else if (t.kind != TokenKind::kPunctuation) {
      sentence_initial = false;
    }
  }
  return text;
}

}  // namespace maskmt
