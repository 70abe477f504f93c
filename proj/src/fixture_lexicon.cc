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

#include "maskmt/fixture_lexicon.h"

namespace maskmt {
namespace {

using C = FixtureCategory;
using T = PosTag;

constexpr FixtureEntry kEntries[] = {
    // People translate to themselves.
    {"alice", "alice", T::kPropn, C::kPerson},
    {"bob", "bob", T::kPropn, C::kPerson},
    {"carol", "carol", T::kPropn, C::kPerson},
    {"david", "david", T::kPropn, C::kPerson},
    {"emma", "emma", T::kPropn, C::kPerson},
    {"frank", "frank", T::kPropn, C::kPerson},
    {"grace", "grace", T::kPropn, C::kPerson},
    {"henry", "henry", T::kPropn, C::kPerson},
    {"iris", "iris", T::kPropn, C::kPerson},
    {"jack", "jack", T::kPropn, C::kPerson},
    {"kate", "kate", T::kPropn, C::kPerson},
    {"liam", "liam", T::kPropn, C::kPerson},
    {"mia", "mia", T::kPropn, C::kPerson},
    {"noah", "noah", T::kPropn, C::kPerson},
    {"olivia", "olivia", T::kPropn, C::kPerson},
    {"paul", "paul", T::kPropn, C::kPerson},

    {"hideout", "cachette", T::kNoun, C::kPlace},
    {"store", "boutique", T::kNoun, C::kPlace},
    {"park", "parc", T::kNoun, C::kPlace},
    {"school", "école", T::kNoun, C::kPlace},
    {"library", "bibliothèque", T::kNoun, C::kPlace},
    {"garden", "jardin", T::kNoun, C::kPlace},
    {"beach", "plage", T::kNoun, C::kPlace},
    {"market", "marché", T::kNoun, C::kPlace},
    {"station", "gare", T::kNoun, C::kPlace},
    {"museum", "musée", T::kNoun, C::kPlace},
    {"forest", "forêt", T::kNoun, C::kPlace},
    {"harbor", "port", T::kNoun, C::kPlace},
    {"castle", "château", T::kNoun, C::kPlace},
    {"bakery", "boulangerie", T::kNoun, C::kPlace},
    {"church", "église", T::kNoun, C::kPlace},
    {"farm", "ferme", T::kNoun, C::kPlace},

    {"key", "clé", T::kNoun, C::kObject},
    {"book", "livre", T::kNoun, C::kObject},
    {"letter", "lettre", T::kNoun, C::kObject},
    {"map", "carte", T::kNoun, C::kObject},
    {"coin", "pièce", T::kNoun, C::kObject},
    {"ring", "bague", T::kNoun, C::kObject},
    {"hat", "chapeau", T::kNoun, C::kObject},
    {"box", "boîte", T::kNoun, C::kObject},
    {"lamp", "lampe", T::kNoun, C::kObject},
    {"knife", "couteau", T::kNoun, C::kObject},
    {"bottle", "bouteille", T::kNoun, C::kObject},
    {"ticket", "billet", T::kNoun, C::kObject},
    {"watch", "montre", T::kNoun, C::kObject},
    {"bag", "sac", T::kNoun, C::kObject},
    {"phone", "téléphone", T::kNoun, C::kObject},
    {"umbrella", "parapluie", T::kNoun, C::kObject},

    {"bread", "pain", T::kNoun, C::kFood},
    {"cheese", "fromage", T::kNoun, C::kFood},
    {"apple", "pomme", T::kNoun, C::kFood},
    {"soup", "soupe", T::kNoun, C::kFood},
    {"cake", "gâteau", T::kNoun, C::kFood},
    {"fish", "poisson", T::kNoun, C::kFood},
    {"rice", "riz", T::kNoun, C::kFood},
    {"pear", "poire", T::kNoun, C::kFood},
    {"egg", "œuf", T::kNoun, C::kFood},
    {"salad", "salade", T::kNoun, C::kFood},
    {"chocolate", "chocolat", T::kNoun, C::kFood},
    {"honey", "miel", T::kNoun, C::kFood},

    {"dog", "chien", T::kNoun, C::kAnimal},
    {"cat", "chat", T::kNoun, C::kAnimal},
    {"horse", "cheval", T::kNoun, C::kAnimal},
    {"bird", "oiseau", T::kNoun, C::kAnimal},
    {"rabbit", "lapin", T::kNoun, C::kAnimal},
    {"mouse", "souris", T::kNoun, C::kAnimal},
    {"fox", "renard", T::kNoun, C::kAnimal},
    {"duck", "canard", T::kNoun, C::kAnimal},

    {"red", "rouge", T::kAdj, C::kAdjective},
    {"blue", "bleu", T::kAdj, C::kAdjective},
    {"green", "vert", T::kAdj, C::kAdjective},
    {"black", "noir", T::kAdj, C::kAdjective},
    {"white", "blanc", T::kAdj, C::kAdjective},
    {"yellow", "jaune", T::kAdj, C::kAdjective},
    {"small", "petit", T::kAdj, C::kAdjective},
    {"big", "grand", T::kAdj, C::kAdjective},
    {"old", "vieux", T::kAdj, C::kAdjective},
    {"new", "neuf", T::kAdj, C::kAdjective},
    {"strange", "étrange", T::kAdj, C::kAdjective},
    {"heavy", "lourd", T::kAdj, C::kAdjective},

    {"morning", "matin", T::kNoun, C::kTime},
    {"afternoon", "après-midi", T::kNoun, C::kTime},
    {"evening", "soir", T::kNoun, C::kTime},
    {"night", "nuit", T::kNoun, C::kTime},

    {"is", "se", T::kVerb, C::kVerb},
    {"heading", "dirige", T::kVerb, C::kVerb},
    {"walked", "marcha", T::kVerb, C::kVerb},
    {"went", "alla", T::kVerb, C::kVerb},
    {"found", "trouva", T::kVerb, C::kVerb},
    {"carried", "porta", T::kVerb, C::kVerb},
    {"met", "rencontra", T::kVerb, C::kVerb},
    {"had", "avait", T::kVerb, C::kVerb},
    {"ate", "mangea", T::kVerb, C::kVerb},
    {"gave", "donna", T::kVerb, C::kVerb},
    {"saw", "vit", T::kVerb, C::kVerb},
    {"bought", "acheta", T::kVerb, C::kVerb},
    {"was", "était", T::kVerb, C::kVerb},
    {"liked", "aimait", T::kVerb, C::kVerb},
    {"took", "prit", T::kVerb, C::kVerb},
    {"visited", "visita", T::kVerb, C::kVerb},
    {"did", "fit", T::kVerb, C::kVerb},
    {"find", "trouver", T::kVerb, C::kVerb},
    {"eat", "manger", T::kVerb, C::kVerb},
    {"go", "aller", T::kVerb, C::kVerb},

    {"the", "la", T::kDet, C::kFunction},
    {"a", "un", T::kDet, C::kFunction},
    {"some", "des", T::kDet, C::kFunction},
    {"to", "vers", T::kAdp, C::kFunction},
    {"in", "dans", T::kAdp, C::kFunction},
    {"at", "à", T::kAdp, C::kFunction},
    {"near", "près", T::kAdp, C::kFunction},
    {"with", "avec", T::kAdp, C::kFunction},
    {"of", "de", T::kAdp, C::kFunction},
    {"and", "et", T::kConj, C::kFunction},
    {"then", "puis", T::kAdv, C::kFunction},
    {"later", "ensuite", T::kAdv, C::kFunction},
    {"where", "où", T::kAdv, C::kFunction},
    {"he", "il", T::kPron, C::kFunction},
    {"she", "elle", T::kPron, C::kFunction},
    {"they", "ils", T::kPron, C::kFunction},
    {"it", "ça", T::kPron, C::kFunction},
    {"who", "qui", T::kPron, C::kFunction},
    {"what", "quoi", T::kPron, C::kFunction},
    {"which", "quel", T::kDet, C::kFunction},
    {"not", "pas", T::kAdv, C::kFunction},
    {"animal", "bête", T::kNoun, C::kFunction},
};

struct ExtraTag {
  absl::string_view word;
  PosTag tag;
};

// Tagger-only entries; the mock engine passes these through.
constexpr ExtraTag kExtraTags[] = {
    {"an", T::kDet},     {"this", T::kDet},   {"that", T::kDet},
    {"these", T::kDet},  {"those", T::kDet},  {"every", T::kDet},
    {"for", T::kAdp},    {"on", T::kAdp},     {"from", T::kAdp},
    {"by", T::kAdp},     {"into", T::kAdp},   {"about", T::kAdp},
    {"but", T::kConj},   {"or", T::kConj},    {"so", T::kConj},
    {"i", T::kPron},     {"you", T::kPron},   {"we", T::kPron},
    {"me", T::kPron},    {"him", T::kPron},   {"her", T::kPron},
    {"them", T::kPron},  {"us", T::kPron},    {"his", T::kPron},
    {"are", T::kVerb},   {"be", T::kVerb},    {"been", T::kVerb},
    {"am", T::kVerb},    {"were", T::kVerb},  {"has", T::kVerb},
    {"have", T::kVerb},  {"do", T::kVerb},    {"will", T::kVerb},
    {"not", T::kAdv},    {"very", T::kAdv},   {"now", T::kAdv},
    {"here", T::kAdv},   {"there", T::kAdv},  {"when", T::kAdv},
    {"how", T::kAdv},    {"why", T::kAdv},    {"hello", T::kOther},
    {"world", T::kNoun},
};

}  // namespace

std::span<const FixtureEntry> FixtureEntries() { return kEntries; }

std::vector<std::string> FixtureWords(FixtureCategory category) {
  std::vector<std::string> out;
  for (const FixtureEntry& e : kEntries) {
    if (e.category == category) out.emplace_back(e.english);
  }
  return out;
}

std::map<std::string, std::string> FixtureTranslationTable() {
  std::map<std::string, std::string> out;
  for (const FixtureEntry& e : kEntries) {
    out.emplace(std::string(e.english), std::string(e.french));
  }
  return out;
}

std::map<std::string, PosTag> FixturePosTable() {
  std::map<std::string, PosTag> out;
  for (const FixtureEntry& e : kEntries) out.emplace(e.english, e.tag);
  for (const ExtraTag& e : kExtraTags) out.emplace(e.word, e.tag);
  return out;
}

}  // namespace maskmt
