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

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/match.h"
#include "json.hpp"
#include "maskmt/synthetic_corpus.h"

namespace maskmt {
namespace {

using nlohmann::json;

constexpr uint64_t kFixtureCorpusSeed = 2026;
constexpr std::size_t kFixtureCorpusSize = 2000;

std::string Resolve(absl::string_view base_dir, const std::string& path) {
  if (path.empty() || base_dir.empty()) return path;
  std::filesystem::path p(path);
  if (p.is_absolute()) return path;
  return (std::filesystem::path(std::string(base_dir)) / p).lexically_normal().string();
}

absl::StatusOr<std::string> GetString(const json& obj, const char* key,
                                      bool required, absl::string_view where) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    if (required) {
      return absl::InvalidArgumentError(
          absl::StrCat(where, ": missing \"", key, "\""));
    }
    return std::string();
  }
  if (!it->is_string()) {
    return absl::InvalidArgumentError(
        absl::StrCat(where, ": \"", key, "\" must be a string"));
  }
  return it->get<std::string>();
}

absl::Status ReadInt(const json& obj, const char* key, int& out,
                     absl::string_view where) {
  auto it = obj.find(key);
  if (it == obj.end()) return absl::OkStatus();
  if (!it->is_number_integer()) {
    return absl::InvalidArgumentError(
        absl::StrCat(where, ": \"", key, "\" must be an integer"));
  }
  out = it->get<int>();
  return absl::OkStatus();
}

absl::StatusOr<RemoteEndpoint> ParseEndpoint(const json& obj,
                                             absl::string_view where) {
  if (!obj.is_object()) {
    return absl::InvalidArgumentError(
        absl::StrCat(where, ": endpoint must be an object"));
  }
  RemoteEndpoint ep;
  struct Field {
    const char* key;
    std::string* dest;
    bool required;
  };
  const Field fields[] = {
      {"url", &ep.url, true},
      {"path", &ep.path, false},
      {"prompt_template", &ep.prompt_template, false},
      {"text_field", &ep.text_field, false},
      {"source_field", &ep.source_field, false},
      {"target_field", &ep.target_field, false},
      {"response_field", &ep.response_field, false},
  };
  for (const Field& f : fields) {
    absl::StatusOr<std::string> v = GetString(obj, f.key, f.required, where);
    if (!v.ok()) return v.status();
    if (obj.contains(f.key)) *f.dest = *v;
  }
  if (auto h = obj.find("headers"); h != obj.end()) {
    if (!h->is_object()) {
      return absl::InvalidArgumentError(
          absl::StrCat(where, ": headers must be an object"));
    }
    for (const auto& [k, v] : h->items()) {
      if (!v.is_string()) {
        return absl::InvalidArgumentError(
            absl::StrCat(where, ": header ", k, " must be a string"));
      }
      ep.headers[k] = v.get<std::string>();
    }
  }
  if (absl::Status s = ReadInt(obj, "timeout_ms", ep.timeout_ms, where);
      !s.ok()) {
    return s;
  }
  if (absl::Status s = ReadInt(obj, "max_retries", ep.max_retries, where);
      !s.ok()) {
    return s;
  }
  if (absl::Status s =
          ReadInt(obj, "initial_backoff_ms", ep.initial_backoff_ms, where);
      !s.ok()) {
    return s;
  }
  return ep;
}

absl::StatusOr<EngineConfig> ParseEngine(const json& obj, std::size_t index,
                                         absl::string_view base_dir) {
  const std::string where = absl::StrCat("engines[", index, "]");
  if (!obj.is_object()) {
    return absl::InvalidArgumentError(absl::StrCat(where, " must be an object"));
  }
  EngineConfig cfg;
  EngineDescriptor& d = cfg.descriptor;
  absl::StatusOr<std::string> id = GetString(obj, "id", true, where);
  if (!id.ok()) return id.status();
  d.id = *id;
  absl::StatusOr<std::string> kind = GetString(obj, "kind", true, where);
  if (!kind.ok()) return kind.status();
  if (*kind == "mock") {
    d.kind = EngineKind::kMock;
  } else if (*kind == "remote") {
    d.kind = EngineKind::kRemote;
  } else {
    return absl::InvalidArgumentError(
        absl::StrCat(where, ": unknown kind \"", *kind, "\""));
  }
  absl::StatusOr<std::string> src = GetString(obj, "source_lang", true, where);
  if (!src.ok()) return src.status();
  d.source_lang = *src;
  absl::StatusOr<std::string> tgt = GetString(obj, "target_lang", true, where);
  if (!tgt.ok()) return tgt.status();
  d.target_lang = *tgt;

  if (d.kind == EngineKind::kMock) {
    absl::StatusOr<std::string> lex = GetString(obj, "lexicon", false, where);
    if (!lex.ok()) return lex.status();
    cfg.lexicon_path = Resolve(base_dir, *lex);
  } else {
    auto ep = obj.find("endpoint");
    if (ep == obj.end()) {
      return absl::InvalidArgumentError(
          absl::StrCat(where, ": remote engines need an endpoint"));
    }
    absl::StatusOr<RemoteEndpoint> parsed = ParseEndpoint(*ep, where);
    if (!parsed.ok()) return parsed.status();
    d.endpoint = *std::move(parsed);
  }
  if (absl::Status s = ValidateDescriptor(d); !s.ok()) {
    return absl::InvalidArgumentError(absl::StrCat(where, ": ", s.message()));
  }
  return cfg;
}

}  // namespace

absl::StatusOr<uint64_t> ParseSeed(absl::string_view text) {
  uint64_t seed = 0;
  bool ok = false;
  if (absl::StartsWith(text, "0x") || absl::StartsWith(text, "0X")) {
    const absl::string_view digits = text.substr(2);
    const auto [end, ec] = std::from_chars(
        digits.data(), digits.data() + digits.size(), seed, 16);
    ok = !digits.empty() && ec == std::errc() &&
         end == digits.data() + digits.size();
  } else {
    ok = absl::SimpleAtoi(text, &seed);
  }
  if (!ok) {
    return absl::InvalidArgumentError(absl::StrCat("invalid seed '", text, "'"));
  }
  return seed;
}

absl::StatusOr<Config> ParseConfig(absl::string_view text,
                                   absl::string_view base_dir) {
  json root = json::parse(text.begin(), text.end(), nullptr,
                          /*allow_exceptions=*/false);
  if (root.is_discarded() || !root.is_object()) {
    return absl::InvalidArgumentError("config is not a JSON object");
  }
  Config config;
  if (auto engines = root.find("engines"); engines != root.end()) {
    if (!engines->is_array()) {
      return absl::InvalidArgumentError("\"engines\" must be an array");
    }
    for (std::size_t i = 0; i < engines->size(); ++i) {
      absl::StatusOr<EngineConfig> e = ParseEngine((*engines)[i], i, base_dir);
      if (!e.ok()) return e.status();
      config.engines.push_back(*std::move(e));
    }
  }
  if (auto dicts = root.find("dictionaries"); dicts != root.end()) {
    if (!dicts->is_object()) {
      return absl::InvalidArgumentError("\"dictionaries\" must be an object");
    }
    absl::StatusOr<std::string> plain =
        GetString(*dicts, "plain", false, "dictionaries");
    if (!plain.ok()) return plain.status();
    absl::StatusOr<std::string> pos =
        GetString(*dicts, "pos_keyed", false, "dictionaries");
    if (!pos.ok()) return pos.status();
    config.plain_dictionary = Resolve(base_dir, *plain);
    config.pos_dictionary = Resolve(base_dir, *pos);
  }
  struct PathField {
    const char* key;
    std::string* dest;
    bool resolve;
  };
  const PathField fields[] = {
      {"pos_lexicon", &config.pos_lexicon, true},
      {"bind_address", &config.bind_address, false},
      {"session_dir", &config.session_dir, true},
      {"audit_log", &config.audit_log, true},
  };
  for (const PathField& f : fields) {
    if (!root.contains(f.key)) continue;
    absl::StatusOr<std::string> v = GetString(root, f.key, false, "config");
    if (!v.ok()) return v.status();
    *f.dest = f.resolve ? Resolve(base_dir, *v) : *v;
  }
  if (absl::Status s = ReadInt(root, "port", config.port, "config"); !s.ok()) {
    return s;
  }
  if (config.port < 0 || config.port > 65535) {
    return absl::InvalidArgumentError("port must be in 0..65535");
  }
  if (auto seed = root.find("seed"); seed != root.end()) {
    if (seed->is_number_unsigned()) {
      config.seed = seed->get<uint64_t>();
    } else if (seed->is_string()) {
      absl::StatusOr<uint64_t> s = ParseSeed(seed->get<std::string>());
      if (!s.ok()) return s.status();
      config.seed = *s;
    } else {
      return absl::InvalidArgumentError(
          "\"seed\" must be a non-negative integer or string");
    }
  }
  return config;
}

absl::StatusOr<Config> LoadConfig(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string dir =
      std::filesystem::path(path).parent_path().string();
  absl::StatusOr<Config> config = ParseConfig(buffer.str(), dir);
  if (!config.ok()) {
    return absl::Status(config.status().code(),
                        absl::StrCat(path, ": ", config.status().message()));
  }
  return config;
}

absl::Status ApplyEnvOverrides(Config& config) {
  const char* seed = std::getenv(std::string(kSeedEnvVar).c_str());
  if (seed != nullptr && *seed != '\0') {
    absl::StatusOr<uint64_t> s = ParseSeed(seed);
    if (!s.ok()) {
      return absl::InvalidArgumentError(
          absl::StrCat(kSeedEnvVar, ": ", s.status().message()));
    }
    config.seed = *s;
  }
  return absl::OkStatus();
}

const std::vector<std::string>& FixturePublicCorpus() {
  static const auto* corpus = new std::vector<std::string>(
      GeneratePublicSentences(kFixtureCorpusSize, kFixtureCorpusSeed));
  return *corpus;
}

Workspace::Workspace() : tagger_(PosTagger::Default()) {}

std::unique_ptr<Workspace> Workspace::Fixture() {
  auto ws = std::make_unique<Workspace>();
  const MockLexicon& lexicon = MockLexicon::Fixture();
  EngineDescriptor d;
  d.id = std::string(kFixtureEngineId);
  d.kind = EngineKind::kMock;
  d.source_lang = "en";
  d.target_lang = "fr";
  // Cannot fail: fresh gateway, valid descriptor.
  (void)ws->gateway_.RegisterMock(d, lexicon);
  ws->mock_lexicon_ = std::make_unique<MockLexicon>(lexicon);
  for (DictionaryMode mode :
       {DictionaryMode::kPlain, DictionaryMode::kPosKeyed}) {
    WordDictionary dict = DictionaryFromLexicon(lexicon, mode,
                                                FixturePublicCorpus(),
                                                ws->tagger_);
    ConfidenceTable conf = ConfidenceTable::FromDictionary(dict);
    ws->SetDictionary(std::move(dict), std::move(conf));
  }
  return ws;
}

absl::StatusOr<std::unique_ptr<Workspace>> Workspace::FromConfig(
    const Config& config) {
  auto ws = std::make_unique<Workspace>();
  if (!config.pos_lexicon.empty()) {
    absl::StatusOr<PosTagger> tagger = PosTagger::FromFile(config.pos_lexicon);
    if (!tagger.ok()) return tagger.status();
    ws->tagger_ = *std::move(tagger);
  }
  for (const EngineConfig& e : config.engines) {
    absl::StatusOr<std::string> id;
    if (e.descriptor.kind == EngineKind::kMock) {
      absl::StatusOr<MockLexicon> lexicon =
          e.lexicon_path.empty() ? absl::StatusOr<MockLexicon>(
                                       MockLexicon::Fixture())
                                 : MockLexicon::FromFile(e.lexicon_path);
      if (!lexicon.ok()) return lexicon.status();
      if (ws->mock_lexicon_ == nullptr) {
        ws->mock_lexicon_ = std::make_unique<MockLexicon>(*lexicon);
      }
      id = ws->gateway_.RegisterMock(e.descriptor, *std::move(lexicon));
    } else {
      id = ws->gateway_.RegisterRemote(e.descriptor);
    }
    if (!id.ok()) return id.status();
  }
  for (const std::string* path :
       {&config.plain_dictionary, &config.pos_dictionary}) {
    if (path->empty()) continue;
    if (absl::Status s = ws->LoadDictionaryFile(*path); !s.ok()) return s;
  }
  if (!config.audit_log.empty()) {
    if (absl::Status s = ws->gateway_.audit().OpenSink(config.audit_log);
        !s.ok()) {
      return s;
    }
  }
  if (config.seed) ws->default_seed_ = *config.seed;
  return ws;
}

void Workspace::SetDictionary(WordDictionary dict, ConfidenceTable confidence) {
  if (dict.mode() == DictionaryMode::kPlain) {
    plain_ = std::make_unique<WordDictionary>(std::move(dict));
  } else {
    pos_keyed_ = std::make_unique<WordDictionary>(std::move(dict));
    confidence_ = std::make_unique<ConfidenceTable>(std::move(confidence));
  }
}

absl::Status Workspace::LoadDictionaryFile(const std::string& path) {
  absl::StatusOr<LoadedDictionary> loaded = LoadDictionary(path);
  if (!loaded.ok()) return loaded.status();
  SetDictionary(std::move(loaded->dictionary), std::move(loaded->confidence));
  return absl::OkStatus();
}

DictionarySet Workspace::dictionaries() const {
  return DictionarySet{plain_.get(), pos_keyed_.get(), confidence_.get()};
}

}  // namespace maskmt
