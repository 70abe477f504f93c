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

#include "maskmt/mechanisms.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "absl/strings/str_cat.h"
#include "maskmt/privacy.h"
#include "maskmt/seeding.h"

namespace maskmt {
namespace {

// Stream id for the mixture's branch draw; keeps it independent of the
// encoder's own generator.
constexpr uint64_t kBranchStream = 0x6d697865;  // "mixe"

// Guards ceil(r * n) against r * n landing a hair above an integer.
constexpr double kCeilSlack = 1e-9;

std::size_t SubstitutionTarget(double ratio, std::size_t n) {
  const double rn = ratio * static_cast<double>(n);
  return static_cast<std::size_t>(std::ceil(rn - kCeilSlack));
}

absl::StatusOr<TaggedText> Substitute(TaggedText& text, std::size_t pos,
                                      const std::string& word,
                                      SubstitutionRecord& record) {
  absl::StatusOr<TaggedText> next = SubstituteToken(text, pos, word);
  if (!next.ok()) return next.status();
  record.position = pos;
  record.original = text.tokens[pos].surface;
  record.substitute = next->tokens[pos].surface;
  return next;
}

}  // namespace

absl::string_view MethodName(Method method) {
  switch (method) {
    case Method::kPrismR:
      return "prism_r";
    case Method::kPrismStar:
      return "prism_star";
    case Method::kMixed:
      return "mixed";
  }
  return "prism_r";
}

std::optional<Method> ParseMethod(absl::string_view name) {
  if (name == "prism_r" || name == "prism-r") return Method::kPrismR;
  if (name == "prism_star" || name == "prism-star" || name == "prism*") {
    return Method::kPrismStar;
  }
  if (name == "mixed") return Method::kMixed;
  return std::nullopt;
}

absl::Status ValidateParams(const MechanismParams& params) {
  if (!(params.ratio > 0.0 && params.ratio < 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("ratio must lie in (0, 1), got ", params.ratio));
  }
  if (!(params.beta >= 0.0 && params.beta <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("beta must lie in [0, 1], got ", params.beta));
  }
  return absl::OkStatus();
}

absl::Status ValidateHistory(const SubstitutionHistory& history) {
  if (history.records.size() > history.source_len) {
    return absl::InvalidArgumentError(
        "history has more records than source tokens");
  }
  std::set<std::size_t> positions;
  for (const SubstitutionRecord& r : history.records) {
    if (r.position >= history.source_len) {
      return absl::InvalidArgumentError(absl::StrCat(
          "history position ", r.position, " outside ", history.source_len,
          " tokens"));
    }
    if (!positions.insert(r.position).second) {
      return absl::InvalidArgumentError(
          absl::StrCat("history repeats position ", r.position));
    }
    if (r.original.empty() || r.substitute.empty()) {
      return absl::InvalidArgumentError("history record with empty word");
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<EncodeResult> EncodePrismR(absl::string_view text,
                                          const WordDictionary& dict,
                                          const MechanismParams& params) {
  if (absl::Status s = ValidateParams(params); !s.ok()) return s;
  if (dict.empty()) return absl::FailedPreconditionError("dictionary is empty");
  const std::vector<std::string> vocab = dict.source_vocab().AsVector();
  absl::StatusOr<double> epsilon = EpsilonFor(params.ratio, vocab.size());
  if (!epsilon.ok()) return epsilon.status();

  TaggedText tokens = Tokenize(text);
  EncodeResult result;
  result.method = Method::kPrismR;
  result.branch = Method::kPrismR;
  result.epsilon = *epsilon;
  result.history.source_len = tokens.size();

  std::mt19937_64 rng(params.seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> draw(0, vocab.size() - 1);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens.tokens[i].kind != TokenKind::kWord) continue;
    // Both draws happen for every word, so the set of replaced positions and
    // their substitutes grow monotonically with r under a fixed seed.
    const double p = coin(rng);
    const std::string& u = vocab[draw(rng)];
    if (p >= params.ratio) continue;
    SubstitutionRecord record;
    absl::StatusOr<TaggedText> next = Substitute(tokens, i, u, record);
    if (!next.ok()) return next.status();
    tokens = *std::move(next);
    result.history.records.push_back(std::move(record));
  }
  result.x_pub = Detokenize(tokens);
  return result;
}

absl::StatusOr<EncodeResult> EncodePrismStar(absl::string_view text,
                                             const WordDictionary& dict,
                                             const ConfidenceTable& confidence,
                                             const MechanismParams& params,
                                             const PosTagger& tagger) {
  if (absl::Status s = ValidateParams(params); !s.ok()) return s;
  if (dict.mode() != DictionaryMode::kPosKeyed) {
    return absl::FailedPreconditionError(
        "PRISM* needs a POS-keyed dictionary");
  }
  TaggedText tokens = tagger.Tag(Tokenize(text));
  EncodeResult result;
  result.method = Method::kPrismStar;
  result.branch = Method::kPrismStar;
  result.history.source_len = tokens.size();

  auto confidence_of = [&](const DictionaryKey& key) -> std::optional<double> {
    if (auto c = confidence.Find(key)) return c;
    if (const RankedList* list = dict.Find(key)) return list->front().score;
    return std::nullopt;
  };

  struct Candidate {
    std::size_t position;
    PosTag tag;
    double confidence;
  };
  std::vector<Candidate> candidates;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens.tokens[i].kind != TokenKind::kWord) continue;
    DictionaryKey key{ToLower(tokens.tokens[i].surface), tokens.tags[i]};
    if (auto c = confidence_of(key)) {
      candidates.push_back({i, tokens.tags[i], *c});
    }
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) {
                     return a.confidence > b.confidence;
                   });

  // Substitute pools per tag, most confident first.
  std::map<PosTag, std::vector<std::string>> pools;
  auto pool_for = [&](PosTag tag) -> const std::vector<std::string>& {
    auto it = pools.find(tag);
    if (it != pools.end()) return it->second;
    std::vector<std::pair<double, std::string>> ranked;
    for (const std::string& w : dict.WordsWithTag(tag)) {
      ranked.emplace_back(*confidence_of({w, tag}), w);
    }
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first > b.first;
      return a.second < b.second;
    });
    std::vector<std::string> words;
    for (auto& [c, w] : ranked) words.push_back(std::move(w));
    return pools.emplace(tag, std::move(words)).first->second;
  };

  const std::size_t n = tokens.WordCount();
  const std::size_t target = SubstitutionTarget(params.ratio, n);
  std::set<std::string> used;
  std::size_t k = 0;
  for (const Candidate& c : candidates) {
    if (k >= target) break;
    const std::string original = ToLower(tokens.tokens[c.position].surface);
    const std::vector<std::string>& pool = pool_for(c.tag);
    auto pick = std::find_if(pool.begin(), pool.end(), [&](const auto& u) {
      return u != original && used.count(u) == 0;
    });
    if (pick == pool.end()) continue;
    SubstitutionRecord record;
    record.tag = c.tag;
    absl::StatusOr<TaggedText> next =
        Substitute(tokens, c.position, *pick, record);
    if (!next.ok()) return next.status();
    tokens = *std::move(next);
    used.insert(*pick);
    result.history.records.push_back(std::move(record));
    ++k;
  }
  if (candidates.empty()) {
    result.warning = "no token of the text has a dictionary entry";
  } else if (k < target) {
    result.warning = absl::StrCat("only ", k, " of ", target,
                                  " substitutions possible");
  }
  result.x_pub = Detokenize(tokens);
  return result;
}

absl::StatusOr<EncodeResult> EncodeMixed(absl::string_view text,
                                         const DictionarySet& dicts,
                                         const MechanismParams& params,
                                         const PosTagger& tagger) {
  if (absl::Status s = ValidateParams(params); !s.ok()) return s;
  if (dicts.plain == nullptr || dicts.pos_keyed == nullptr) {
    return absl::FailedPreconditionError(
        "the mixed mechanism needs both a plain and a POS-keyed dictionary");
  }
  absl::StatusOr<double> epsilon_r =
      EpsilonFor(params.ratio, dicts.plain->source_vocab().size());
  if (!epsilon_r.ok()) return epsilon_r.status();

  std::mt19937_64 branch_rng(DeriveSeed(params.seed, kBranchStream));
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  const bool star = coin(branch_rng) < params.beta;

  absl::StatusOr<EncodeResult> result;
  if (star) {
    ConfidenceTable derived;
    const ConfidenceTable* conf = dicts.confidence;
    if (conf == nullptr) {
      derived = ConfidenceTable::FromDictionary(*dicts.pos_keyed);
      conf = &derived;
    }
    result = EncodePrismStar(text, *dicts.pos_keyed, *conf, params, tagger);
  } else {
    result = EncodePrismR(text, *dicts.plain, params);
  }
  if (!result.ok()) return result.status();
  result->method = Method::kMixed;
  result->mixture_beta = params.beta;
  result->mixture_epsilon_r = *epsilon_r;
  return result;
}

absl::StatusOr<EncodeResult> Encode(absl::string_view text,
                                    const DictionarySet& dicts,
                                    const MechanismParams& params,
                                    const PosTagger& tagger) {
  switch (params.method) {
    case Method::kPrismR:
      if (dicts.plain == nullptr) {
        return absl::FailedPreconditionError(
            "PRISM-R needs a plain dictionary");
      }
      return EncodePrismR(text, *dicts.plain, params);
    case Method::kPrismStar: {
      if (dicts.pos_keyed == nullptr) {
        return absl::FailedPreconditionError(
            "PRISM* needs a POS-keyed dictionary");
      }
      if (dicts.confidence != nullptr) {
        return EncodePrismStar(text, *dicts.pos_keyed, *dicts.confidence,
                               params, tagger);
      }
      return EncodePrismStar(text, *dicts.pos_keyed,
                             ConfidenceTable::FromDictionary(*dicts.pos_keyed),
                             params, tagger);
    }
    case Method::kMixed:
      return EncodeMixed(text, dicts, params, tagger);
  }
  return absl::InvalidArgumentError("unknown method");
}

absl::StatusOr<EncodeResult> EncodeWithSubstitutions(
    absl::string_view text, const std::vector<ForcedSubstitution>& subs,
    const PosTagger* tagger) {
  TaggedText tokens = Tokenize(text);
  if (tagger != nullptr) tokens = tagger->Tag(std::move(tokens));
  EncodeResult result;
  result.method = tagger != nullptr ? Method::kPrismStar : Method::kPrismR;
  result.branch = result.method;
  result.history.source_len = tokens.size();
  std::set<std::size_t> seen;
  for (const ForcedSubstitution& sub : subs) {
    if (!seen.insert(sub.position).second) {
      return absl::InvalidArgumentError(
          absl::StrCat("position ", sub.position, " substituted twice"));
    }
    SubstitutionRecord record;
    if (tagger != nullptr && sub.position < tokens.size()) {
      record.tag = tokens.tags[sub.position];
    }
    absl::StatusOr<TaggedText> next =
        Substitute(tokens, sub.position, sub.replacement, record);
    if (!next.ok()) return next.status();
    tokens = *std::move(next);
    result.history.records.push_back(std::move(record));
  }
  result.x_pub = Detokenize(tokens);
  return result;
}

absl::StatusOr<DecodeResult> Decode(absl::string_view y_pub,
                                    const SubstitutionHistory& history,
                                    const DictionarySet& dicts) {
  if (absl::Status s = ValidateHistory(history); !s.ok()) return s;
  TaggedText out = Tokenize(y_pub);
  std::vector<std::string> lowered(out.size());
  for (std::size_t j = 0; j < out.size(); ++j) {
    if (out.tokens[j].kind == TokenKind::kWord) {
      lowered[j] = ToLower(out.tokens[j].surface);
    }
  }
  std::vector<bool> consumed(out.size(), false);
  DecodeResult result;

  const double src_len =
      static_cast<double>(std::max<std::size_t>(history.source_len, 1));
  const double tgt_len = static_cast<double>(std::max<std::size_t>(out.size(), 1));

  for (const SubstitutionRecord& record : history.records) {
    const WordDictionary* dict =
        record.tag.has_value() ? dicts.pos_keyed : dicts.plain;
    auto miss = [&](std::string reason) {
      result.misses.push_back({record, std::move(reason)});
    };
    if (dict == nullptr) {
      miss(record.tag ? "no POS-keyed dictionary loaded"
                      : "no plain dictionary loaded");
      continue;
    }
    const RankedList* candidates =
        dict->Find(DictionaryKey{ToLower(record.substitute), record.tag});
    if (candidates == nullptr) {
      miss("substitute not in dictionary");
      continue;
    }
    const RankedList* restore =
        dict->Find(DictionaryKey{ToLower(record.original), record.tag});
    if (restore == nullptr) {
      miss("original not in dictionary");
      continue;
    }
    const std::string& replacement = restore->front().target_word;
    const double expected =
        (static_cast<double>(record.position) + 0.5) / src_len;

    std::optional<std::size_t> hit;
    for (const RankedEntry& candidate : *candidates) {
      const std::string v = ToLower(candidate.target_word);
      double best = 0.0;
      for (std::size_t j = 0; j < out.size(); ++j) {
        if (consumed[j] || lowered[j] != v) continue;
        const double d =
            std::abs((static_cast<double>(j) + 0.5) / tgt_len - expected);
        if (!hit || d < best) {
          hit = j;
          best = d;
        }
      }
      if (hit) break;
    }
    if (!hit) {
      miss("no candidate translation found");
      continue;
    }
    Token& t = out.tokens[*hit];
    t.surface = ApplyCaseShape(t.case_shape, replacement);
    t.case_shape = DetectCaseShape(t.surface);
    consumed[*hit] = true;
  }
  result.y_pri = Detokenize(out);
  return result;
}

}  // namespace maskmt
