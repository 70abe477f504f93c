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

#include <filesystem>
#include <fstream>
#include <string>

#include "gtest/gtest.h"
#include "maskmt/text.h"

namespace maskmt {
namespace {

std::vector<PosTag> TagsOf(absl::string_view text,
                           const PosTagger& tagger = PosTagger::Default()) {
  return tagger.Tag(Tokenize(text)).tags;
}

TEST(PosTaggerTest, FixtureLexicon) {
  EXPECT_EQ(TagsOf("Alice is heading ."),
            (std::vector<PosTag>{PosTag::kPropn, PosTag::kVerb, PosTag::kVerb,
                                 PosTag::kPunct}));
}

TEST(PosTaggerTest, AllPunctuation) {
  for (PosTag tag : TagsOf("... ! ? , ;")) EXPECT_EQ(tag, PosTag::kPunct);
}

TEST(PosTaggerTest, UnknownWordFallsBackToNoun) {
  EXPECT_EQ(TagsOf("blarg"), std::vector<PosTag>{PosTag::kNoun});
  EXPECT_EQ(PosTagger::Default().TagWord("blarg"), PosTag::kNoun);
}

TEST(PosTaggerTest, SuffixHeuristics) {
  const PosTagger empty({});
  EXPECT_EQ(TagsOf("the zorbing", empty)[1], PosTag::kVerb);
  EXPECT_EQ(TagsOf("the zorbed", empty)[1], PosTag::kVerb);
  EXPECT_EQ(TagsOf("the zorbly", empty)[1], PosTag::kAdv);
  EXPECT_EQ(TagsOf("the zorbous", empty)[1], PosTag::kAdj);
  EXPECT_EQ(TagsOf("the Zorb", empty)[1], PosTag::kPropn);
  // Sentence-initial capitals are not evidence of a name.
  EXPECT_EQ(TagsOf("Zorb", empty)[0], PosTag::kNoun);
}

TEST(PosTaggerTest, TotalAndPunctuationConsistent) {
  TaggedText t = PosTagger::Default().Tag(
      Tokenize("Then Bob gave the old map to Carol, 3 times!"));
  ASSERT_EQ(t.tags.size(), t.tokens.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    EXPECT_EQ(t.tags[i] == PosTag::kPunct,
              t.tokens[i].kind == TokenKind::kPunctuation);
    EXPECT_NE(t.tags[i], PosTag::kOther) << t.tokens[i].surface;
  }
}

TEST(PosTaggerTest, Deterministic) {
  const std::string s = "Alice found a strange lamp near the market.";
  EXPECT_EQ(TagsOf(s), TagsOf(s));
}

TEST(PosTaggerTest, TsvRoundTrip) {
  auto tagger = PosTagger::FromTsv("# comment\nalice\tPROPN\n\nrun\tVERB\n");
  ASSERT_TRUE(tagger.ok()) << tagger.status();
  EXPECT_EQ(tagger->lexicon().size(), 2u);
  EXPECT_EQ(tagger->TagWord("run"), PosTag::kVerb);

  const auto path =
      std::filesystem::path(::testing::TempDir()) / "pos_lexicon.tsv";
  ASSERT_TRUE(tagger->Save(path.string()).ok());
  auto loaded = PosTagger::FromFile(path.string());
  ASSERT_TRUE(loaded.ok()) << loaded.status();
  EXPECT_EQ(loaded->lexicon(), tagger->lexicon());
}

TEST(PosTaggerTest, TsvErrors) {
  EXPECT_FALSE(PosTagger::FromTsv("alice\n").ok());
  auto bad = PosTagger::FromTsv("alice\tPROPN\nrun\tVERBISH\n");
  ASSERT_FALSE(bad.ok());
  EXPECT_NE(bad.status().message().find("2"), std::string::npos);
  EXPECT_EQ(PosTagger::FromFile("/nonexistent/pos.tsv").status().code(),
            absl::StatusCode::kNotFound);
}

}  // namespace
}  // namespace maskmt
