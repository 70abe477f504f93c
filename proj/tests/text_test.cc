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

#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "maskmt/pos_tagger.h"
#include "maskmt/synthetic_corpus.h"

namespace maskmt {
namespace {

std::vector<std::string> Surfaces(const TaggedText& t) {
  std::vector<std::string> out;
  for (const Token& tok : t.tokens) out.push_back(tok.surface);
  return out;
}

TEST(TokenizeTest, SplitsTrailingPunctuation) {
  TaggedText t = Tokenize("Alice is heading to the hideout.");
  ASSERT_EQ(t.size(), 7u);
  EXPECT_EQ(t.tokens.back().surface, ".");
  EXPECT_EQ(t.tokens.back().kind, TokenKind::kPunctuation);
  EXPECT_EQ(t.tags.back(), PosTag::kPunct);
  EXPECT_EQ(t.WordCount(), 6u);
  EXPECT_EQ(t.tokens[0].case_shape, CaseShape::kTitle);
}

TEST(TokenizeTest, EmptyInput) {
  TaggedText t = Tokenize("");
  EXPECT_TRUE(t.empty());
  EXPECT_EQ(Detokenize(t), "");
  EXPECT_TRUE(Tokenize("   \t ").empty());
}

TEST(TokenizeTest, RoundTripFrench) {
  const std::string s = "Bob se dirige vers la boutique.";
  TaggedText t = Tokenize(s);
  EXPECT_EQ(t.size(), 7u);
  EXPECT_EQ(Detokenize(t), s);
}

TEST(TokenizeTest, RoundTripComma) {
  EXPECT_EQ(Detokenize(Tokenize("Hello, world.")), "Hello, world.");
  EXPECT_EQ(Surfaces(Tokenize("Hello, world.")),
            (std::vector<std::string>{"Hello", ",", "world", "."}));
}

TEST(TokenizeTest, CollapsesWhitespace) {
  EXPECT_EQ(Detokenize(Tokenize("a  b")), "a b");
  EXPECT_EQ(NormalizeText("  a \t b  "), "a b");
}

TEST(TokenizeTest, KeepsIntraWordApostropheAndHyphen) {
  EXPECT_EQ(Surfaces(Tokenize("don't stop-gap")),
            (std::vector<std::string>{"don't", "stop-gap"}));
  EXPECT_EQ(Surfaces(Tokenize("(\"quoted\")")),
            (std::vector<std::string>{"(", "\"", "quoted", "\"", ")"}));
}

TEST(TokenizeTest, Numbers) {
  TaggedText t = Tokenize("It cost 42 coins.");
  EXPECT_EQ(t.tokens[2].kind, TokenKind::kNumber);
  EXPECT_EQ(t.tags[2], PosTag::kNum);
  EXPECT_EQ(t.WordCount(), 3u);
}

TEST(TokenizeTest, NfcNormalization) {
  // "e" + combining acute becomes the precomposed code point.
  const std::string decomposed = "caf\x65\xcc\x81";
  const std::string composed = "caf\xc3\xa9";
  EXPECT_EQ(Detokenize(Tokenize(decomposed)), composed);
  EXPECT_EQ(CodePointLength(composed), 4u);
}

TEST(TokenizeTest, RoundTripOnGeneratedCorpus) {
  for (const std::string& s : GeneratePublicSentences(300, 5)) {
    EXPECT_EQ(Detokenize(Tokenize(s)), s);
  }
  auto corpus = GenerateSyntheticCorpus(20, 3);
  ASSERT_TRUE(corpus.ok());
  for (const std::string& d : corpus->documents) {
    EXPECT_EQ(Detokenize(Tokenize(d)), d);
  }
}

TEST(TokenizeTest, SeparatorsAlignWithTokens) {
  TaggedText t = Tokenize("One, two; three!");
  EXPECT_EQ(t.separators.size(), t.tokens.size());
  EXPECT_EQ(t.tags.size(), t.tokens.size());
  for (const Token& tok : t.tokens) {
    EXPECT_FALSE(tok.surface.empty());
    EXPECT_EQ(tok.surface.find(' '), std::string::npos);
    EXPECT_EQ(DetectCaseShape(tok.surface), tok.case_shape);
  }
}

TEST(CaseShapeTest, Detection) {
  EXPECT_EQ(DetectCaseShape("alice"), CaseShape::kLower);
  EXPECT_EQ(DetectCaseShape("Alice"), CaseShape::kTitle);
  EXPECT_EQ(DetectCaseShape("ALICE"), CaseShape::kUpper);
  EXPECT_EQ(DetectCaseShape("aLiCe"), CaseShape::kMixed);
  EXPECT_EQ(DetectCaseShape("\xc3\x89t\xc3\xa9"), CaseShape::kTitle);
}

TEST(CaseShapeTest, ApplyingOwnShapeIsIdentity) {
  for (const char* w : {"alice", "Alice", "ALICE", "aLiCe", "A", "x"}) {
    EXPECT_EQ(ApplyCaseShape(DetectCaseShape(w), w), w) << w;
  }
  EXPECT_EQ(ApplyCaseShape(CaseShape::kTitle, "bob"), "Bob");
  EXPECT_EQ(ApplyCaseShape(CaseShape::kUpper, "bob"), "BOB");
  EXPECT_EQ(ApplyCaseShape(CaseShape::kLower, "BOB"), "bob");
  EXPECT_EQ(ToLower("\xc3\x89T\xc3\x89"), "\xc3\xa9t\xc3\xa9");
}

TEST(SubstituteTokenTest, PreservesCase) {
  TaggedText t = Tokenize("Alice is heading to the hideout.");
  auto out = SubstituteToken(t, 0, "bob");
  ASSERT_TRUE(out.ok()) << out.status();
  EXPECT_EQ(Detokenize(*out), "Bob is heading to the hideout.");
  EXPECT_EQ(out->size(), t.size());
  EXPECT_EQ(out->tags, t.tags);
  EXPECT_EQ(out->separators, t.separators);
}

TEST(SubstituteTokenTest, IdentityReplacement) {
  TaggedText t = Tokenize("Alice is heading to the hideout.");
  auto out = SubstituteToken(t, 5, "hideout");
  ASSERT_TRUE(out.ok());
  EXPECT_EQ(*out, t);
}

TEST(SubstituteTokenTest, RejectsPunctuationAndRange) {
  TaggedText t = Tokenize("Alice is heading to the hideout.");
  EXPECT_EQ(SubstituteToken(t, 6, "x").status().code(),
            absl::StatusCode::kInvalidArgument);
  EXPECT_EQ(SubstituteToken(t, 7, "x").status().code(),
            absl::StatusCode::kOutOfRange);
}

TEST(PosTagTest, NamesRoundTrip) {
  for (PosTag tag : kAllPosTags) {
    auto parsed = ParsePosTag(PosTagName(tag));
    ASSERT_TRUE(parsed.has_value());
    EXPECT_EQ(*parsed, tag);
  }
  EXPECT_FALSE(ParsePosTag("BOGUS").has_value());
}

TEST(VocabularyTest, Membership) {
  Vocabulary v({"b", "a"});
  EXPECT_EQ(v.size(), 2u);
  EXPECT_TRUE(v.Contains("a"));
  EXPECT_FALSE(v.Contains("c"));
  EXPECT_EQ(v.AsVector(), (std::vector<std::string>{"a", "b"}));
}

}  // namespace
}  // namespace maskmt
