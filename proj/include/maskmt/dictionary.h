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

// Word translation dictionary induced by probing a translator.
//
// For a source word w (optionally paired with a POS tag s) the score of a
// target word v is the ratio of two appearance rates,
//
//   p(w, v) = Pr[v in T(S_w)] / Pr[v in T(S)],
//
// where S is a random corpus sentence and S_w is S with one random word (one
// random word tagged s, in POS-keyed mode) replaced by w. Dividing by the
// base rate keeps articles and other ubiquitous words from ranking first.
// Both rates are estimated with additive smoothing:
//
//   ((cond_count + a) / (cond_trials + a)) / ((base_count + a) / (base_trials + a))
//
// Appearance is a per-sentence boolean, not a token count.

#ifndef MASKMT_DICTIONARY_H_
#define MASKMT_DICTIONARY_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "maskmt/engine.h"
#include "maskmt/pos_tagger.h"
#include "maskmt/text.h"

namespace maskmt {

enum class DictionaryMode { kPlain, kPosKeyed };

absl::string_view DictionaryModeName(DictionaryMode mode);

struct DictionaryKey {
  std::string word;           // lowercase
  std::optional<PosTag> tag;  // set iff the dictionary is POS-keyed

  std::string TagName() const {
    return tag ? std::string(PosTagName(*tag)) : std::string("-");
  }
  friend bool operator==(const DictionaryKey&, const DictionaryKey&) = default;
  // Orders by (word, tag name) so the TSV sort order falls out of map order.
  friend bool operator<(const DictionaryKey& a, const DictionaryKey& b) {
    if (a.word != b.word) return a.word < b.word;
    return a.TagName() < b.TagName();
  }
};

struct RankedEntry {
  std::string target_word;
  double score = 0.0;

  friend bool operator==(const RankedEntry&, const RankedEntry&) = default;
};

using RankedList = std::vector<RankedEntry>;

class WordDictionary {
 public:
  explicit WordDictionary(DictionaryMode mode = DictionaryMode::kPlain)
      : mode_(mode) {}

  // Sorts every list (descending score, ties by target word) and checks that
  // lists are non-empty and keys match the mode.
  static absl::StatusOr<WordDictionary> Create(
      DictionaryMode mode, std::map<DictionaryKey, RankedList> lists);

  DictionaryMode mode() const { return mode_; }
  const std::map<DictionaryKey, RankedList>& lists() const { return lists_; }
  const Vocabulary& source_vocab() const { return vocab_; }
  std::size_t size() const { return lists_.size(); }
  bool empty() const { return lists_.empty(); }

  const RankedList* Find(const DictionaryKey& key) const;
  // Convenience for plain dictionaries.
  const RankedList* Find(absl::string_view word) const;

  // 1-based rank.
  absl::StatusOr<std::string> Lookup(const DictionaryKey& key,
                                     std::size_t rank) const;

  // Source words carrying `tag` (POS-keyed mode), lexicographic.
  std::vector<std::string> WordsWithTag(PosTag tag) const;

  friend bool operator==(const WordDictionary&, const WordDictionary&) = default;

 private:
  DictionaryMode mode_;
  std::map<DictionaryKey, RankedList> lists_;
  Vocabulary vocab_;
};

// c(w, s): head score of each list.
class ConfidenceTable {
 public:
  ConfidenceTable() = default;
  static ConfidenceTable FromDictionary(const WordDictionary& dict);

  std::optional<double> Find(const DictionaryKey& key) const;
  const std::map<DictionaryKey, double>& scores() const { return scores_; }

  friend bool operator==(const ConfidenceTable&, const ConfidenceTable&) = default;

 private:
  std::map<DictionaryKey, double> scores_;
};

struct ProbeStats {
  std::map<std::string, int64_t> base_counts;
  int64_t base_trials = 0;
  std::map<DictionaryKey, std::map<std::string, int64_t>> cond_counts;
  std::map<DictionaryKey, int64_t> cond_trials;
};

// Smoothed ratio estimator for one (key, target word).
absl::StatusOr<double> Score(const ProbeStats& stats, const DictionaryKey& key,
                             absl::string_view target_word, double alpha = 1.0);

struct BuildOptions {
  DictionaryMode mode = DictionaryMode::kPlain;
  int64_t samples_per_word = 1000;
  // Size of the shared pool of unmodified (S, R) pairs; 0 means
  // samples_per_word.
  int64_t base_samples = 0;
  uint64_t seed = 0;
  double alpha = 1.0;
  std::size_t top_k = 10;
  // Keys probed fewer times than this are dropped.
  int64_t min_support = 10;
  // Concurrent engine probes. Results do not depend on this value.
  int max_in_flight = 1;
  const PosTagger* tagger = nullptr;  // defaults to PosTagger::Default()
};

struct BuildResult {
  WordDictionary dictionary;
  ConfidenceTable confidence;
  ProbeStats stats;
};

// Probes `engine_id` through the gateway. Sentences are drawn uniformly with
// replacement; each key has its own generator derived from the seed, so the
// output is bit-identical for a fixed (corpus, engine, vocab, options).
absl::StatusOr<BuildResult> BuildDictionary(
    const std::vector<std::string>& corpus, EngineGateway& gateway,
    absl::string_view engine_id, const Vocabulary& vocab,
    const BuildOptions& options);

// Every lowercase word token of a corpus.
Vocabulary CorpusVocabulary(const std::vector<std::string>& corpus);

// Dictionary with one entry per lexicon word, L(w) = [lexicon(w)], as the
// prober would converge to under a one-to-one word translator. Scores are the
// smoothed inverse base rate of lexicon(w) over `corpus` (all 1.0 when the
// corpus is empty).
WordDictionary DictionaryFromLexicon(const MockLexicon& lexicon,
                                     DictionaryMode mode,
                                     const std::vector<std::string>& corpus,
                                     const PosTagger& tagger,
                                     double alpha = 1.0);

// TSV: header, then `source_word<TAB>pos_tag_or_-<TAB>rank<TAB>target_word<TAB>score`
// sorted by (source_word, pos, rank). Scores use round-trip precision.
absl::Status SaveDictionary(const WordDictionary& dict, const std::string& path);
std::string DictionaryToTsv(const WordDictionary& dict);

struct LoadedDictionary {
  WordDictionary dictionary;
  ConfidenceTable confidence;
};
absl::StatusOr<LoadedDictionary> LoadDictionary(const std::string& path);
absl::StatusOr<LoadedDictionary> ParseDictionaryTsv(absl::string_view contents);

inline constexpr absl::string_view kDictionaryHeader =
    "source_word\tpos_tag\trank\ttarget_word\tscore";

}  // namespace maskmt

#endif  // MASKMT_DICTIONARY_H_
