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

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "grouge/semantic_graph.hpp"
#include "grouge/sense_id.hpp"

namespace grouge {

// A sense of a lemma together with its 1-based rank within its part of speech
// (rank 1 = most frequent).
struct RankedSense {
  std::uint32_t node = 0;
  std::uint32_t rank = 0;
  friend bool operator==(const RankedSense&, const RankedSense&) = default;
};

enum class UnknownSensePolicy { WarnAndDrop, Error };

struct DictionaryOptions {
  UnknownSensePolicy unknown_sense = UnknownSensePolicy::WarnAndDrop;
};

// Lemma -> ranked sense list, keyed by (lowercase lemma, pos).
class Dictionary {
 public:
  // Lines are "lemma[#pos] sense:count sense:count ...". File order defines
  // sense rank. Senses missing from `graph` are handled per `options`;
  // messages for dropped senses are appended to `warnings` when given.
  static Dictionary load(std::istream& in, const SemanticGraph& graph,
                         const DictionaryOptions& options = {},
                         std::vector<std::string>* warnings = nullptr);

  // Ranked senses for (lemma, pos); without pos, the concatenation over
  // noun, verb, adjective, adverb in that order. Empty if unknown.
  std::vector<SenseId> senses_of(std::string_view lemma, std::optional<Pos> pos = std::nullopt) const;
  std::vector<RankedSense> ranked_senses(std::string_view lemma,
                                         std::optional<Pos> pos = std::nullopt) const;
  bool contains(std::string_view lemma) const;

  std::size_t size() const { return entries_.size(); }

 private:
  explicit Dictionary(const SemanticGraph& graph) : graph_(&graph) {}

  const SemanticGraph* graph_;
  std::map<std::pair<std::string, Pos>, std::vector<std::uint32_t>, std::less<>> entries_;
};

}  // namespace grouge
