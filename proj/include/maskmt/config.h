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

// JSON configuration and the assembled runtime (engines, tagger,
// dictionaries) shared by the CLI, the service and the C API.
//
//   {
//     "engines": [
//       {"id": "mock-en-fr", "kind": "mock", "source_lang": "en",
//        "target_lang": "fr", "lexicon": "fr.tsv"},
//       {"id": "gpt", "kind": "remote", "source_lang": "en",
//        "target_lang": "fr",
//        "endpoint": {"url": "http://127.0.0.1:9000", "path": "/translate",
//                     "prompt_template": "..."}}
//     ],
//     "dictionaries": {"plain": "plain.tsv", "pos_keyed": "pos.tsv"},
//     "pos_lexicon": "pos.tsv",
//     "bind_address": "127.0.0.1", "port": 8080,
//     "session_dir": "sessions", "audit_log": "audit.ndjson",
//     "seed": 0
//   }
//
// Relative paths resolve against the directory of the config file. A mock
// engine without a lexicon uses the built-in fixture table.

#ifndef MASKMT_CONFIG_H_
#define MASKMT_CONFIG_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "maskmt/dictionary.h"
#include "maskmt/engine.h"
#include "maskmt/mechanisms.h"
#include "maskmt/pos_tagger.h"

namespace maskmt {

inline constexpr absl::string_view kConfigEnvVar = "MASKMT_CONFIG";
inline constexpr absl::string_view kSeedEnvVar = "MASKMT_SEED";
inline constexpr absl::string_view kFixtureEngineId = "mock-en-fr";

struct EngineConfig {
  EngineDescriptor descriptor;
  std::string lexicon_path;  // mock only; empty means the fixture table
};

struct Config {
  std::vector<EngineConfig> engines;
  std::string plain_dictionary;
  std::string pos_dictionary;
  std::string pos_lexicon;
  std::string bind_address = "127.0.0.1";
  int port = 8080;
  std::string session_dir;
  std::string audit_log;
  std::optional<uint64_t> seed;
};

absl::StatusOr<Config> ParseConfig(absl::string_view json,
                                   absl::string_view base_dir = "");
absl::StatusOr<Config> LoadConfig(const std::string& path);

// MASKMT_SEED, when set, replaces config.seed.
absl::Status ApplyEnvOverrides(Config& config);

// Parses a decimal or 0x-prefixed seed.
absl::StatusOr<uint64_t> ParseSeed(absl::string_view text);

// Engines, tagger and dictionaries behind one object.
class Workspace {
 public:
  Workspace();
  Workspace(const Workspace&) = delete;
  Workspace& operator=(const Workspace&) = delete;

  // Mock engine "mock-en-fr" over the fixture table, default tagger, and
  // both dictionaries derived from that table.
  static std::unique_ptr<Workspace> Fixture();
  static absl::StatusOr<std::unique_ptr<Workspace>> FromConfig(
      const Config& config);

  EngineGateway& gateway() { return gateway_; }
  const EngineGateway& gateway() const { return gateway_; }
  const PosTagger& tagger() const { return tagger_; }
  void set_tagger(PosTagger tagger) { tagger_ = std::move(tagger); }

  // Installs the dictionary in the slot matching its mode.
  void SetDictionary(WordDictionary dict, ConfidenceTable confidence);
  absl::Status LoadDictionaryFile(const std::string& path);

  const WordDictionary* plain() const { return plain_.get(); }
  const WordDictionary* pos_keyed() const { return pos_keyed_.get(); }
  DictionarySet dictionaries() const;

  // Lexicon of the first registered mock engine, if any.
  const MockLexicon* mock_lexicon() const { return mock_lexicon_.get(); }

  uint64_t default_seed() const { return default_seed_; }
  void set_default_seed(uint64_t seed) { default_seed_ = seed; }

 private:
  EngineGateway gateway_;
  PosTagger tagger_;
  std::unique_ptr<WordDictionary> plain_;
  std::unique_ptr<WordDictionary> pos_keyed_;
  std::unique_ptr<ConfidenceTable> confidence_;
  std::unique_ptr<MockLexicon> mock_lexicon_;
  uint64_t default_seed_ = 0;
};

// Public corpus the fixture dictionaries are scored on.
const std::vector<std::string>& FixturePublicCorpus();

}  // namespace maskmt

#endif  // MASKMT_CONFIG_H_
