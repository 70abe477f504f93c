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

#include "maskmt/synthetic_corpus.h"

#include <algorithm>
#include <random>

#include "absl/strings/str_join.h"
#include "absl/strings/str_replace.h"
#include "maskmt/fixture_lexicon.h"
#include "maskmt/seeding.h"
#include "maskmt/text.h"

namespace maskmt {
namespace {

constexpr const char* kPlaceSentences[] = {
    "In the {time} {p} went to the {place}.",
    "{p} walked to the {place} in the {time}.",
    "{p} visited the {place} in the {time}.",
};

constexpr const char* kObjectSentences[] = {
    "At the {place} {p} found a {adj} {object}.",
    "{p} found a {adj} {object} near the {place}.",
    "Then {p} bought a {adj} {object}.",
};

constexpr const char* kFoodSentences[] = {
    "{p} ate some {food} with the {animal}.",
    "Later {p} and the {animal} had some {food}.",
    "The {animal} saw {p} eat some {food}.",
};

constexpr const char* kClosingSentences[] = {
    "Then {p} gave the {object} to {q}.",
    "{q} met {p} at the {place} in the {time}.",
    "Later {p} took the {object} to {q}.",
};

// Public-corpus-only sentences, so every fixture word has a base rate.
constexpr const char* kPublicOnlySentences[] = {
    "{p} is heading to the {place}.",
    "{p} carried the {object} and it was {adj}.",
    "She liked the {food} of the {place}.",
    "Where did {q} find the {animal}?",
    "They go to the {place} to eat some {food}.",
    "He did not find it.",
    "Who was with {p} in the {time}?",
    "What was it?",
};

struct Slots {
  std::string p, q, place, object, food, animal, adj, time;
};

template <typename Rng>
const std::string& Pick(const std::vector<std::string>& words, Rng& rng) {
  std::uniform_int_distribution<std::size_t> d(0, words.size() - 1);
  return words[d(rng)];
}

template <typename Rng, std::size_t N>
const char* PickTemplate(const char* const (&templates)[N], Rng& rng) {
  std::uniform_int_distribution<std::size_t> d(0, N - 1);
  return templates[d(rng)];
}

std::string Capitalize(const std::string& word) {
  return ApplyCaseShape(CaseShape::kTitle, word);
}

std::string Fill(const char* tmpl, const Slots& s) {
  return absl::StrReplaceAll(tmpl, {{"{p}", Capitalize(s.p)},
                                    {"{q}", Capitalize(s.q)},
                                    {"{place}", s.place},
                                    {"{object}", s.object},
                                    {"{food}", s.food},
                                    {"{animal}", s.animal},
                                    {"{adj}", s.adj},
                                    {"{time}", s.time}});
}

struct Pools {
  std::vector<std::string> people = FixtureWords(FixtureCategory::kPerson);
  std::vector<std::string> places = FixtureWords(FixtureCategory::kPlace);
  std::vector<std::string> objects = FixtureWords(FixtureCategory::kObject);
  std::vector<std::string> foods = FixtureWords(FixtureCategory::kFood);
  std::vector<std::string> animals = FixtureWords(FixtureCategory::kAnimal);
  std::vector<std::string> adjectives =
      FixtureWords(FixtureCategory::kAdjective);
  std::vector<std::string> times = FixtureWords(FixtureCategory::kTime);
};

const Pools& GetPools() {
  static const Pools* pools = new Pools();
  return *pools;
}

template <typename Rng>
Slots DrawSlots(Rng& rng) {
  const Pools& pools = GetPools();
  Slots s;
  s.p = Pick(pools.people, rng);
  do {
    s.q = Pick(pools.people, rng);
  } while (s.q == s.p);
  s.place = Pick(pools.places, rng);
  s.object = Pick(pools.objects, rng);
  s.food = Pick(pools.foods, rng);
  s.animal = Pick(pools.animals, rng);
  s.adj = Pick(pools.adjectives, rng);
  s.time = Pick(pools.times, rng);
  return s;
}

template <typename Rng>
QaItem MakeItem(std::size_t doc_id, std::string question,
                const std::string& answer,
                const std::vector<std::string>& category, Rng& rng) {
  std::vector<std::string> distractors;
  for (const std::string& w : category) {
    if (w != answer) distractors.push_back(w);
  }
  std::shuffle(distractors.begin(), distractors.end(), rng);
  std::uniform_int_distribution<std::size_t> label(0, kNumChoices - 1);
  const std::size_t answer_index = label(rng);

  QaItem item;
  item.doc_id = doc_id;
  item.question = std::move(question);
  item.answer = ChoiceLabel(answer_index);
  std::size_t next = 0;
  for (std::size_t i = 0; i < kNumChoices; ++i) {
    item.choices[i] = i == answer_index ? answer : distractors[next++];
    item.probe_tokens[i] = {item.choices[i]};
  }
  return item;
}

}  // namespace

char ChoiceLabel(std::size_t index) {
  return static_cast<char>('A' + index);
}

absl::StatusOr<SyntheticCorpus> GenerateSyntheticCorpus(std::size_t size,
                                                        uint64_t seed) {
  if (size < 1) {
    return absl::InvalidArgumentError("corpus size must be at least 1");
  }
  const Pools& pools = GetPools();
  SyntheticCorpus corpus;
  for (std::size_t d = 0; d < size; ++d) {
    std::mt19937_64 rng(DeriveSeed(seed, d));
    const Slots s = DrawSlots(rng);
    std::vector<std::string> sentences = {
        Fill(PickTemplate(kPlaceSentences, rng), s),
        Fill(PickTemplate(kObjectSentences, rng), s),
        Fill(PickTemplate(kFoodSentences, rng), s),
        Fill(PickTemplate(kClosingSentences, rng), s),
    };
    corpus.documents.push_back(absl::StrJoin(sentences, " "));

    const std::string who = Capitalize(s.p);
    corpus.items.push_back(MakeItem(d, "Where did " + who + " go?", s.place,
                                    pools.places, rng));
    corpus.items.push_back(MakeItem(d, "What did " + who + " find?", s.object,
                                    pools.objects, rng));
    corpus.items.push_back(MakeItem(d, "What did " + who + " eat?", s.food,
                                    pools.foods, rng));
    corpus.items.push_back(MakeItem(d, "Which animal was with " + who + "?",
                                    s.animal, pools.animals, rng));
  }
  return corpus;
}

std::vector<std::string> GeneratePublicSentences(std::size_t count,
                                                 uint64_t seed) {
  std::vector<const char*> all;
  for (const char* t : kPlaceSentences) all.push_back(t);
  for (const char* t : kObjectSentences) all.push_back(t);
  for (const char* t : kFoodSentences) all.push_back(t);
  for (const char* t : kClosingSentences) all.push_back(t);
  for (const char* t : kPublicOnlySentences) all.push_back(t);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  std::vector<std::string> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const Slots s = DrawSlots(rng);
    out.push_back(Fill(all[pick(rng)], s));
  }
  return out;
}

}  // namespace maskmt
