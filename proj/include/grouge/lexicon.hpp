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

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grouge/dictionary.hpp"
#include "grouge/text.hpp"

namespace grouge {

// A distinct word of a text and its candidate senses. Empty senses means OOV.
struct WordType {
  std::string surface;  // lowercase, unstemmed
  std::string stem;     // the token as it appears in n-grams
  std::optional<Pos> pos;
  std::vector<RankedSense> senses;

  bool oov() const { return senses.empty(); }
};

struct LexiconOptions {
  // Try WordNet-style inflection detachment ("officers" -> "officer") before
  // falling back to the stem.
  bool morphology = true;
};

// Dictionary senses for a surface form: the surface itself, then (per part of
// speech) the first detachment candidate with senses, then `stem`.
std::vector<RankedSense> lookup_senses(const Dictionary& dict, std::string_view surface,
                                       std::string_view stem, std::optional<Pos> pos,
                                       const LexiconOptions& options = {});

// Base-form candidates for `surface` under the detachment rules of `pos`.
std::vector<std::string> detachment_candidates(std::string_view surface, Pos pos);

// One WordType per distinct token, in order of first occurrence. When a token
// has several surfaces, the first one that resolves to senses wins.
std::vector<WordType> word_types(const SummaryText& text, const Dictionary& dict,
                                 const LexiconOptions& options = {});

}  // namespace grouge
