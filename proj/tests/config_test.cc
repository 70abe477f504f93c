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

#include "maskmt/config.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "gtest/gtest.h"

namespace maskmt {
namespace {

namespace fs = std::filesystem;

fs::path ScratchDir() {
  fs::path dir = fs::path(::testing::TempDir()) /
                 ("config_" + std::string(::testing::UnitTest::GetInstance()
                                              ->current_test_info()
                                              ->name()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void WriteFile(const fs::path& path, const std::string& contents) {
  std::ofstream(path) << contents;
}

TEST(ParseSeedTest, DecimalAndHex) {
  EXPECT_EQ(*ParseSeed("0"), 0u);
  EXPECT_EQ(*ParseSeed("18446744073709551615"), UINT64_MAX);
  EXPECT_EQ(*ParseSeed("0x2a"), 42u);
  EXPECT_EQ(*ParseSeed("0XFF"), 255u);
  for (const char* bad : {"", "-1", "0x", "0xzz", "12a", "18446744073709551616"}) {
    EXPECT_EQ(ParseSeed(bad).status().code(),
              absl::StatusCode::kInvalidArgument)
        << bad;
  }
}

TEST(ParseConfigTest, DefaultsForEmptyObject) {
  absl::StatusOr<Config> c = ParseConfig("{}");
  ASSERT_TRUE(c.ok());
  EXPECT_TRUE(c->engines.empty());
  EXPECT_EQ(c->bind_address, "127.0.0.1");
  EXPECT_EQ(c->port, 8080);
  EXPECT_FALSE(c->seed.has_value());
}

TEST(ParseConfigTest, FullDocumentResolvesPaths) {
  absl::StatusOr<Config> c = ParseConfig(R"({
    "engines": [
      {"id": "mock-en-fr", "kind": "mock", "source_lang": "en",
       "target_lang": "fr", "lexicon": "fr.tsv"},
      {"id": "remote", "kind": "remote", "source_lang": "en",
       "target_lang": "de",
       "endpoint": {"url": "http://127.0.0.1:9000", "path": "/translate",
                    "timeout_ms": 250, "max_retries": 1}}
    ],
    "dictionaries": {"plain": "plain.tsv", "pos_keyed": "/abs/pos.tsv"},
    "pos_lexicon": "lex/pos.tsv",
    "bind_address": "0.0.0.0", "port": 0,
    "session_dir": "sessions", "audit_log": "audit.ndjson",
    "seed": "0x10"
  })",
                                         "/etc/maskmt");
  ASSERT_TRUE(c.ok()) << c.status();
  ASSERT_EQ(c->engines.size(), 2u);
  EXPECT_EQ(c->engines[0].descriptor.kind, EngineKind::kMock);
  EXPECT_EQ(c->engines[0].lexicon_path, "/etc/maskmt/fr.tsv");
  const EngineDescriptor& remote = c->engines[1].descriptor;
  EXPECT_EQ(remote.kind, EngineKind::kRemote);
  EXPECT_EQ(remote.target_lang, "de");
  ASSERT_TRUE(remote.endpoint.has_value());
  EXPECT_EQ(remote.endpoint->path, "/translate");
  EXPECT_EQ(remote.endpoint->timeout_ms, 250);
  EXPECT_EQ(remote.endpoint->max_retries, 1);
  EXPECT_EQ(c->plain_dictionary, "/etc/maskmt/plain.tsv");
  EXPECT_EQ(c->pos_dictionary, "/abs/pos.tsv");
  EXPECT_EQ(c->pos_lexicon, "/etc/maskmt/lex/pos.tsv");
  EXPECT_EQ(c->bind_address, "0.0.0.0");
  EXPECT_EQ(c->port, 0);
  EXPECT_EQ(c->session_dir, "/etc/maskmt/sessions");
  EXPECT_EQ(c->audit_log, "/etc/maskmt/audit.ndjson");
  EXPECT_EQ(c->seed, 16u);
}

TEST(ParseConfigTest, Rejects) {
  for (const char* bad : {
           "[]",
           "not json",
           R"({"engines": {}})",
           R"({"engines": [{"id": "x", "kind": "carrier", "source_lang": "en",
                            "target_lang": "fr"}]})",
           R"({"engines": [{"id": "x", "kind": "remote", "source_lang": "en",
                            "target_lang": "fr"}]})",
           R"({"engines": [{"kind": "mock", "source_lang": "en",
                            "target_lang": "fr"}]})",
           R"({"dictionaries": []})",
           R"({"port": 70000})",
           R"({"port": "80"})",
           R"({"seed": -3})",
           R"({"seed": "many"})",
           R"({"session_dir": 4})",
       }) {
    EXPECT_EQ(ParseConfig(bad).status().code(),
              absl::StatusCode::kInvalidArgument)
        << bad;
  }
}

TEST(LoadConfigTest, MissingFileAndPrefixedErrors) {
  EXPECT_EQ(LoadConfig("/nonexistent/maskmt.json").status().code(),
            absl::StatusCode::kNotFound);
  const fs::path dir = ScratchDir();
  WriteFile(dir / "bad.json", R"({"port": -1})");
  absl::Status s = LoadConfig((dir / "bad.json").string()).status();
  EXPECT_EQ(s.code(), absl::StatusCode::kInvalidArgument);
  EXPECT_NE(s.message().find("bad.json"), absl::string_view::npos);
}

TEST(ApplyEnvOverridesTest, SeedFromEnvironment) {
  Config c;
  c.seed = 1;
  ::setenv(std::string(kSeedEnvVar).c_str(), "0x20", 1);
  ASSERT_TRUE(ApplyEnvOverrides(c).ok());
  EXPECT_EQ(c.seed, 32u);
  ::setenv(std::string(kSeedEnvVar).c_str(), "zzz", 1);
  EXPECT_EQ(ApplyEnvOverrides(c).code(), absl::StatusCode::kInvalidArgument);
  ::setenv(std::string(kSeedEnvVar).c_str(), "", 1);
  ASSERT_TRUE(ApplyEnvOverrides(c).ok());
  EXPECT_EQ(c.seed, 32u);
  ::unsetenv(std::string(kSeedEnvVar).c_str());
}

TEST(WorkspaceTest, Fixture) {
  auto ws = Workspace::Fixture();
  ASSERT_NE(ws->plain(), nullptr);
  ASSERT_NE(ws->pos_keyed(), nullptr);
  EXPECT_EQ(ws->plain()->mode(), DictionaryMode::kPlain);
  EXPECT_EQ(ws->pos_keyed()->mode(), DictionaryMode::kPosKeyed);
  EXPECT_NE(ws->dictionaries().confidence, nullptr);
  ASSERT_NE(ws->mock_lexicon(), nullptr);
  EXPECT_EQ(*ws->gateway().Translate(std::string(kFixtureEngineId),
                                     "Bob is heading to the store."),
            "Bob se dirige vers la boutique.");
}

TEST(WorkspaceTest, FromConfigFiles) {
  const fs::path dir = ScratchDir();
  auto lexicon = MockLexicon::Create({{"cat", "chat"}, {"dog", "chien"}});
  ASSERT_TRUE(lexicon.ok());
  ASSERT_TRUE(lexicon->Save((dir / "lex.tsv").string()).ok());
  auto fixture = Workspace::Fixture();
  ASSERT_TRUE(SaveDictionary(*fixture->plain(), (dir / "plain.tsv").string())
                  .ok());
  ASSERT_TRUE(
      SaveDictionary(*fixture->pos_keyed(), (dir / "pos.tsv").string()).ok());
  ASSERT_TRUE(PosTagger::Default().Save((dir / "tags.tsv").string()).ok());
  WriteFile(dir / "config.json", R"({
    "engines": [{"id": "tiny", "kind": "mock", "source_lang": "en",
                 "target_lang": "fr", "lexicon": "lex.tsv"}],
    "dictionaries": {"plain": "plain.tsv", "pos_keyed": "pos.tsv"},
    "pos_lexicon": "tags.tsv",
    "audit_log": "audit.ndjson",
    "seed": 99
  })");
  absl::StatusOr<Config> config = LoadConfig((dir / "config.json").string());
  ASSERT_TRUE(config.ok()) << config.status();
  auto ws = Workspace::FromConfig(*config);
  ASSERT_TRUE(ws.ok()) << ws.status();
  EXPECT_EQ((*ws)->default_seed(), 99u);
  EXPECT_EQ(*(*ws)->gateway().Translate("tiny", "cat dog bird"),
            "chat chien bird");
  EXPECT_EQ((*ws)->plain()->size(), fixture->plain()->size());
  EXPECT_EQ((*ws)->pos_keyed()->size(), fixture->pos_keyed()->size());
  EXPECT_EQ((*ws)->tagger().lexicon(), PosTagger::Default().lexicon());
  EXPECT_EQ((*ws)->mock_lexicon()->entries().size(), 2u);
  EXPECT_TRUE(fs::exists(dir / "audit.ndjson"));
}

TEST(WorkspaceTest, FromConfigMissingFile) {
  Config config;
  config.plain_dictionary = "/nonexistent/plain.tsv";
  EXPECT_EQ(Workspace::FromConfig(config).status().code(),
            absl::StatusCode::kNotFound);
}

}  // namespace
}  // namespace maskmt
