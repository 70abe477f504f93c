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

#include "maskmt/dictionary.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"
#include "maskmt/seeding.h"

namespace maskmt {
namespace {

void SortList(RankedList& list) {
  std::sort(list.begin(), list.end(),
            [](const RankedEntry& a, const RankedEntry& b) {
              if (a.score != b.score) return a.score > b.score;
              return a.target_word < b.target_word;
            });
}

std::set<std::string> TargetWords(absl::string_view translation) {
  std::set<std::string> out;
  for (const Token& t : Tokenize(translation).tokens) {
    if (t.kind == TokenKind::kWord) out.insert(ToLower(t.surface));
  }
  return out;
}

double SmoothedRatio(int64_t cond_count, int64_t cond_trials,
                     int64_t base_count, int64_t base_trials, double alpha) {
  const double cond_rate = (static_cast<double>(cond_count) + alpha) /
                           (static_cast<double>(cond_trials) + alpha);
  const double base_rate = (static_cast<double>(base_count) + alpha) /
                           (static_cast<double>(base_trials) + alpha);
  return cond_rate / base_rate;
}

struct KeyProbe {
  std::map<std::string, int64_t> counts;
  int64_t trials = 0;
  absl::Status status;
};

}  // namespace

absl::string_view DictionaryModeName(DictionaryMode mode) {
  return mode == DictionaryMode::kPlain ? "plain" : "pos_keyed";
}

// ---------------------------------------------------------------------------
// WordDictionary / ConfidenceTable

absl::StatusOr<WordDictionary> WordDictionary::Create(
    DictionaryMode mode, std::map<DictionaryKey, RankedList> lists) {
  WordDictionary dict(mode);
  for (auto& [key, list] : lists) {
    if (key.word.empty()) {
      return absl::InvalidArgumentError("dictionary key with empty word");
    }
    const TaggedText parsed = Tokenize(key.word);
    if (parsed.size() != 1 || parsed.tokens[0].kind != TokenKind::kWord ||
        parsed.tokens[0].surface != key.word || ToLower(key.word) != key.word) {
      return absl::InvalidArgumentError(absl::StrCat(
          "dictionary key '", key.word, "' is not a single lowercase word"));
    }
    if (key.tag.has_value() != (mode == DictionaryMode::kPosKeyed)) {
      return absl::InvalidArgumentError(absl::StrCat(
          "key '", key.word, "' does not match dictionary mode ",
          DictionaryModeName(mode)));
    }
    if (list.empty()) {
      return absl::InvalidArgumentError(
          absl::StrCat("empty candidate list for '", key.word, "'"));
    }
    for (const RankedEntry& e : list) {
      if (!(e.score > 0.0) || !std::isfinite(e.score)) {
        return absl::InvalidArgumentError(absl::StrCat(
            "non-positive score for '", key.word, "' -> '", e.target_word,
            "'"));
      }
    }
    SortList(list);
    dict.vocab_.Insert(key.word);
  }
  dict.lists_ = std::move(lists);
  return dict;
}

const RankedList* WordDictionary::Find(const DictionaryKey& key) const {
  auto it = lists_.find(key);
  return it == lists_.end() ? nullptr : &it->second;
}

const RankedList* WordDictionary::Find(absl::string_view word) const {
  return Find(DictionaryKey{ToLower(word), std::nullopt});
}

absl::StatusOr<std::string> WordDictionary::Lookup(const DictionaryKey& key,
                                                   std::size_t rank) const {
  const RankedList* list = Find(key);
  if (list == nullptr) {
    return absl::NotFoundError(absl::StrCat("no dictionary entry for '",
                                            key.word, "' (", key.TagName(),
                                            ")"));
  }
  if (rank < 1 || rank > list->size()) {
    return absl::OutOfRangeError(absl::StrCat(
        "rank ", rank, " out of range 1..", list->size(), " for '", key.word,
        "'"));
  }
  return (*list)[rank - 1].target_word;
}

std::vector<std::string> WordDictionary::WordsWithTag(PosTag tag) const {
  std::vector<std::string> out;
  for (const auto& [key, list] : lists_) {
    if (key.tag == tag) out.push_back(key.word);
  }
  return out;
}

ConfidenceTable ConfidenceTable::FromDictionary(const WordDictionary& dict) {
  ConfidenceTable table;
  for (const auto& [key, list] : dict.lists()) {
    table.scores_[key] = list.front().score;
  }
  return table;
}

std::optional<double> ConfidenceTable::Find(const DictionaryKey& key) const {
  auto it = scores_.find(key);
  if (it == scores_.end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------------------
// Scoring

absl::StatusOr<double> Score(const ProbeStats& stats, const DictionaryKey& key,
                             absl::string_view target_word, double alpha) {
  auto trials = stats.cond_trials.find(key);
  if (trials == stats.cond_trials.end()) {
    return absl::NotFoundError(
        absl::StrCat("no probe statistics for '", key.word, "'"));
  }
  if (trials->second <= 0 || stats.base_trials <= 0) {
    return absl::FailedPreconditionError(
        absl::StrCat("zero trials recorded for '", key.word, "'"));
  }
  int64_t cond = 0;
  if (auto c = stats.cond_counts.find(key); c != stats.cond_counts.end()) {
    if (auto v = c->second.find(std::string(target_word));
        v != c->second.end()) {
      cond = v->second;
    }
  }
  int64_t base = 0;
  if (auto b = stats.base_counts.find(std::string(target_word));
      b != stats.base_counts.end()) {
    base = b->second;
  }
  return SmoothedRatio(cond, trials->second, base, stats.base_trials, alpha);
}

// ---------------------------------------------------------------------------
// Induction

Vocabulary CorpusVocabulary(const std::vector<std::string>& corpus) {
  Vocabulary vocab;
  for (const std::string& sentence : corpus) {
    for (const Token& t : Tokenize(sentence).tokens) {
      if (t.kind == TokenKind::kWord) vocab.Insert(ToLower(t.surface));
    }
  }
  return vocab;
}

absl::StatusOr<BuildResult> BuildDictionary(
    const std::vector<std::string>& corpus, EngineGateway& gateway,
    absl::string_view engine_id, const Vocabulary& vocab,
    const BuildOptions& options) {
  if (corpus.empty()) return absl::InvalidArgumentError("corpus is empty");
  if (options.samples_per_word < 1) {
    return absl::InvalidArgumentError("samples_per_word must be at least 1");
  }
  if (vocab.empty()) return absl::InvalidArgumentError("vocabulary is empty");
  if (!gateway.Contains(engine_id)) {
    return absl::NotFoundError(absl::StrCat("unknown engine '", engine_id, "'"));
  }
  const PosTagger& tagger =
      options.tagger != nullptr ? *options.tagger : PosTagger::Default();

  // Only sentences with at least one word can host a substitution.
  std::vector<TaggedText> sentences;
  for (const std::string& s : corpus) {
    TaggedText t = tagger.Tag(Tokenize(s));
    if (t.WordCount() > 0) sentences.push_back(std::move(t));
  }
  if (sentences.empty()) {
    return absl::InvalidArgumentError("corpus contains no words");
  }

  BuildResult result;
  ProbeStats& stats = result.stats;

  // Shared base pool of unmodified translations.
  std::mt19937_64 base_rng(DeriveSeed(options.seed, 0));
  std::uniform_int_distribution<size_t> pick_sentence(0, sentences.size() - 1);
  const int64_t base_samples = options.base_samples > 0
                                   ? options.base_samples
                                   : options.samples_per_word;
  for (int64_t i = 0; i < base_samples; ++i) {
    const TaggedText& s = sentences[pick_sentence(base_rng)];
    absl::StatusOr<std::string> r = gateway.Translate(engine_id, Detokenize(s));
    if (!r.ok()) return r.status();
    for (const std::string& v : TargetWords(*r)) ++stats.base_counts[v];
  }
  stats.base_trials = base_samples;

  // Keys to probe.
  std::vector<DictionaryKey> keys;
  if (options.mode == DictionaryMode::kPlain) {
    for (const std::string& w : vocab.words()) keys.push_back({w, std::nullopt});
  } else {
    std::map<std::string, std::set<PosTag>> seen;
    for (const TaggedText& s : sentences) {
      for (size_t i = 0; i < s.size(); ++i) {
        if (s.tokens[i].kind != TokenKind::kWord) continue;
        std::string w = ToLower(s.tokens[i].surface);
        if (vocab.Contains(w)) seen[w].insert(s.tags[i]);
      }
    }
    for (const std::string& w : vocab.words()) {
      auto it = seen.find(w);
      if (it == seen.end()) {
        keys.push_back({w, tagger.TagWord(w)});
      } else {
        for (PosTag tag : it->second) keys.push_back({w, tag});
      }
    }
  }

  std::vector<KeyProbe> probes(keys.size());
  auto probe_key = [&](size_t index) {
    const DictionaryKey& key = keys[index];
    KeyProbe& probe = probes[index];
    std::mt19937_64 rng(DeriveSeed(options.seed, index + 1));
    std::uniform_int_distribution<size_t> pick(0, sentences.size() - 1);
    const int64_t max_draws = options.samples_per_word * 100;
    int64_t draws = 0;
    while (probe.trials < options.samples_per_word && draws < max_draws) {
      ++draws;
      const TaggedText& s = sentences[pick(rng)];
      std::vector<size_t> slots;
      for (size_t i = 0; i < s.size(); ++i) {
        if (s.tokens[i].kind != TokenKind::kWord) continue;
        if (key.tag && s.tags[i] != *key.tag) continue;
        slots.push_back(i);
      }
      if (slots.empty()) continue;  // resample
      std::uniform_int_distribution<size_t> pick_slot(0, slots.size() - 1);
      absl::StatusOr<TaggedText> replaced =
          SubstituteToken(s, slots[pick_slot(rng)], key.word);
      if (!replaced.ok()) {
        probe.status = replaced.status();
        return;
      }
      absl::StatusOr<std::string> r =
          gateway.Translate(engine_id, Detokenize(*replaced));
      if (!r.ok()) {
        probe.status = r.status();
        probe.counts.clear();
        probe.trials = 0;
        return;
      }
      for (const std::string& v : TargetWords(*r)) ++probe.counts[v];
      ++probe.trials;
    }
  };

  const size_t workers = static_cast<size_t>(std::max(1, options.max_in_flight));
  if (workers == 1 || keys.size() < 2) {
    for (size_t i = 0; i < keys.size(); ++i) probe_key(i);
  } else {
    std::vector<std::thread> pool;
    for (size_t w = 0; w < std::min(workers, keys.size()); ++w) {
      pool.emplace_back([&, w] {
        for (size_t i = w; i < keys.size(); i += workers) probe_key(i);
      });
    }
    for (std::thread& t : pool) t.join();
  }

  std::map<DictionaryKey, RankedList> lists;
  for (size_t i = 0; i < keys.size(); ++i) {
    KeyProbe& probe = probes[i];
    if (!probe.status.ok()) return probe.status;
    stats.cond_trials[keys[i]] = probe.trials;
    stats.cond_counts[keys[i]] = probe.counts;
    if (probe.trials < options.min_support) continue;
    RankedList list;
    for (const auto& [v, count] : probe.counts) {
      if (count == 0) continue;
      const auto base = stats.base_counts.find(v);
      list.push_back({v, SmoothedRatio(count, probe.trials,
                                       base == stats.base_counts.end()
                                           ? 0
                                           : base->second,
                                       stats.base_trials, options.alpha)});
    }
    if (list.empty()) continue;
    SortList(list);
    if (list.size() > options.top_k) list.resize(options.top_k);
    lists.emplace(keys[i], std::move(list));
  }

  absl::StatusOr<WordDictionary> dict =
      WordDictionary::Create(options.mode, std::move(lists));
  if (!dict.ok()) return dict.status();
  result.dictionary = *std::move(dict);
  result.confidence = ConfidenceTable::FromDictionary(result.dictionary);
  return result;
}

WordDictionary DictionaryFromLexicon(const MockLexicon& lexicon,
                                     DictionaryMode mode,
                                     const std::vector<std::string>& corpus,
                                     const PosTagger& tagger, double alpha) {
  std::map<std::string, int64_t> base_counts;
  int64_t base_trials = 0;
  for (const std::string& sentence : corpus) {
    std::set<std::string> targets;
    for (const Token& t : Tokenize(sentence).tokens) {
      if (t.kind != TokenKind::kWord) continue;
      if (auto v = lexicon.Lookup(t.surface)) targets.insert(*v);
    }
    for (const std::string& v : targets) ++base_counts[v];
    ++base_trials;
  }
  std::map<DictionaryKey, RankedList> lists;
  for (const auto& [source, target] : lexicon.entries()) {
    double score = 1.0;
    if (base_trials > 0) {
      auto it = base_counts.find(target);
      score = SmoothedRatio(base_trials, base_trials,
                            it == base_counts.end() ? 0 : it->second,
                            base_trials, alpha);
    }
    DictionaryKey key{source, std::nullopt};
    if (mode == DictionaryMode::kPosKeyed) key.tag = tagger.TagWord(source);
    lists[key] = {{target, score}};
  }
  return *WordDictionary::Create(mode, std::move(lists));
}

// ---------------------------------------------------------------------------
// Persistence

std::string DictionaryToTsv(const WordDictionary& dict) {
  std::string out(kDictionaryHeader);
  out += '\n';
  for (const auto& [key, list] : dict.lists()) {
    for (size_t r = 0; r < list.size(); ++r) {
      absl::StrAppendFormat(&out, "%s\t%s\t%d\t%s\t%.17g\n", key.word,
                            key.TagName(), r + 1, list[r].target_word,
                            list[r].score);
    }
  }
  return out;
}

absl::Status SaveDictionary(const WordDictionary& dict, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return absl::PermissionDeniedError(absl::StrCat("cannot write ", path));
  out << DictionaryToTsv(dict);
  return out ? absl::OkStatus()
             : absl::InternalError(absl::StrCat("write failed: ", path));
}

absl::StatusOr<LoadedDictionary> ParseDictionaryTsv(absl::string_view contents) {
  std::map<DictionaryKey, RankedList> lists;
  std::optional<DictionaryMode> mode;
  int line_no = 0;
  bool header_seen = false;
  auto fail = [&](absl::string_view what) {
    return absl::InvalidArgumentError(
        absl::StrCat("dictionary line ", line_no, ": ", what));
  };
  for (absl::string_view line : absl::StrSplit(contents, '\n')) {
    ++line_no;
    line = absl::StripTrailingAsciiWhitespace(line);
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != kDictionaryHeader) return fail("missing or malformed header");
      header_seen = true;
      continue;
    }
    std::vector<absl::string_view> f = absl::StrSplit(line, '\t');
    if (f.size() != 5) return fail("expected 5 tab-separated fields");
    if (f[0].empty() || f[3].empty()) return fail("empty word");
    DictionaryKey key{std::string(f[0]), std::nullopt};
    const DictionaryMode row_mode =
        f[1] == "-" ? DictionaryMode::kPlain : DictionaryMode::kPosKeyed;
    if (row_mode == DictionaryMode::kPosKeyed) {
      key.tag = ParsePosTag(f[1]);
      if (!key.tag) return fail(absl::StrCat("unknown POS tag '", f[1], "'"));
    }
    if (mode && *mode != row_mode) return fail("mixes plain and POS-keyed rows");
    mode = row_mode;
    int rank = 0;
    if (!absl::SimpleAtoi(f[2], &rank) || rank < 1) return fail("bad rank");
    double score = 0;
    if (!absl::SimpleAtod(f[4], &score) || !std::isfinite(score) ||
        score <= 0) {
      return fail(absl::StrCat("bad score '", f[4], "'"));
    }
    RankedList& list = lists[key];
    if (static_cast<size_t>(rank) != list.size() + 1) {
      return fail("ranks must be consecutive from 1");
    }
    if (!list.empty() && list.back().score < score) {
      return fail("scores must be non-increasing along a list");
    }
    list.push_back({std::string(f[3]), score});
  }
  if (!header_seen) {
    line_no = 1;
    return fail("missing or malformed header");
  }
  absl::StatusOr<WordDictionary> dict = WordDictionary::Create(
      mode.value_or(DictionaryMode::kPlain), std::move(lists));
  if (!dict.ok()) return dict.status();
  LoadedDictionary out{*std::move(dict), {}};
  out.confidence = ConfidenceTable::FromDictionary(out.dictionary);
  return out;
}

absl::StatusOr<LoadedDictionary> LoadDictionary(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::stringstream buf;
  buf << in.rdbuf();
  return ParseDictionaryTsv(buf.str());
}

}  // namespace maskmt
