// Copyright 2026 The GRouge Authors.
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

#include "grouge/lexicon.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace grouge {
namespace {

using Rule = std::pair<std::string_view, std::string_view>;

constexpr Rule kNounRules[] = {{"s", ""},    {"ses", "s"},   {"xes", "x"},   {"zes", "z"},
                               {"ches", "ch"}, {"shes", "sh"}, {"men", "man"}, {"ies", "y"}};
constexpr Rule kVerbRules[] = {{"s", ""},   {"ies", "y"}, {"es", "e"},  {"es", ""},
                               {"ed", "e"}, {"ed", ""},   {"ing", "e"}, {"ing", ""}};
constexpr Rule kAdjectiveRules[] = {{"er", ""}, {"est", ""}, {"er", "e"}, {"est", "e"}};

std::span<const Rule> rules_for(Pos pos) {
  switch (pos) {
    case Pos::Noun: return kNounRules;
    case Pos::Verb: return kVerbRules;
    case Pos::Adjective: return kAdjectiveRules;
    case Pos::Adverb: return {};
  }
  return {};
}

}  // namespace

std::vector<std::string> detachment_candidates(std::string_view surface, Pos pos) {
  std::vector<std::string> out;
  for (const auto& [suffix, replacement] : rules_for(pos)) {
    if (surface.size() <= suffix.size() || !surface.ends_with(suffix)) continue;
    std::string base(surface.substr(0, surface.size() - suffix.size()));
    base += replacement;
    if (std::find(out.begin(), out.end(), base) == out.end()) out.push_back(std::move(base));
  }
  return out;
}

std::vector<RankedSense> lookup_senses(const Dictionary& dict, std::string_view surface,
                                       std::string_view stem, std::optional<Pos> pos,
                                       const LexiconOptions& options) {
  std::vector<RankedSense> out;
  for (const Pos p : kAllPos) {
    if (pos && *pos != p) continue;
    auto found = dict.ranked_senses(surface, p);
    if (found.empty() && options.morphology) {
      for (const auto& candidate : detachment_candidates(surface, p)) {
        found = dict.ranked_senses(candidate, p);
        if (!found.empty()) break;
      }
    }
    out.insert(out.end(), found.begin(), found.end());
  }
  if (out.empty() && stem != surface) out = dict.ranked_senses(stem, pos);
  return out;
}

std::vector<WordType> word_types(const SummaryText& text, const Dictionary& dict,
                                 const LexiconOptions& options) {
  std::vector<WordType> types;
  std::map<std::string, std::size_t, std::less<>> position;
  for (std::size_t s = 0; s < text.sentences.size(); ++s) {
    for (std::size_t t = 0; t < text.sentences[s].size(); ++t) {
      const auto& stem = text.sentences[s][t];
      const auto& surface = text.surfaces[s][t];
      auto it = position.find(stem);
      if (it == position.end()) {
        it = position.emplace(stem, types.size()).first;
        types.push_back({surface, stem, std::nullopt, {}});
        types.back().senses = lookup_senses(dict, surface, stem, std::nullopt, options);
        continue;
      }
      WordType& w = types[it->second];
      if (w.oov() && surface != w.surface) {
        auto senses = lookup_senses(dict, surface, stem, std::nullopt, options);
        if (!senses.empty()) {
          w.surface = surface;
          w.senses = std::move(senses);
        }
      }
    }
  }
  return types;
}

}  // namespace grouge
