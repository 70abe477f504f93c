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

// Built-in English->French word table used by the offline mock engine, the
// default POS lexicon and the synthetic QA corpus.

#ifndef MASKMT_FIXTURE_LEXICON_H_
#define MASKMT_FIXTURE_LEXICON_H_

#include <map>
#include <span>
#include <string>
#include <vector>

#include "absl/strings/string_view.h"

#include "maskmt/text.h"

namespace maskmt {

enum class FixtureCategory {
  kPerson,
  kPlace,
  kObject,
  kFood,
  kAnimal,
  kAdjective,
  kTime,
  kVerb,
  kFunction,
};

struct FixtureEntry {
  absl::string_view english;
  absl::string_view french;
  PosTag tag;
  FixtureCategory category;
};

std::span<const FixtureEntry> FixtureEntries();

std::vector<std::string> FixtureWords(FixtureCategory category);

// english -> french over every fixture entry. Injective.
std::map<std::string, std::string> FixtureTranslationTable();

// english -> tag, fixture entries plus a handful of common English words.
std::map<std::string, PosTag> FixturePosTable();

}  // namespace maskmt

#endif  // MASKMT_FIXTURE_LEXICON_H_
