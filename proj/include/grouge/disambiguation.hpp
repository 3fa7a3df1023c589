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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "grouge/lexicon.hpp"
#include "grouge/ppr_engine.hpp"

namespace grouge {

struct Assignment {
  WordType word;
  std::optional<std::uint32_t> sense;  // empty for OOV words
  double support = 0.0;                // best similarity backing the choice

  bool oov() const { return !sense.has_value(); }
};

class SenseAssignment {
 public:
  SenseAssignment() = default;
  explicit SenseAssignment(std::vector<Assignment> assignments);

  const std::vector<Assignment>& assignments() const { return assignments_; }
  // Lookup by the word's stem (its n-gram token); nullptr if absent.
  const Assignment* find(std::string_view stem) const;

 private:
  std::vector<Assignment> assignments_;
  std::map<std::string, std::size_t, std::less<>> by_stem_;
};

// Alignment-based disambiguation: each word of `item` takes the sense whose
// PPR vector is most similar to any sense of any word in `context`. Ties go to
// the lower sense rank, then the lower SenseId. Without any context senses,
// every word falls back to its rank-1 sense (the lowest SenseId among rank-1
// senses) with support 0.
SenseAssignment align_disambiguate(std::span<const WordType> item,
                                   std::span<const WordType> context, PprEngine& engine);

// Model words aligned against the peer text and vice versa.
std::pair<SenseAssignment, SenseAssignment> disambiguate_pair(std::span<const WordType> model,
                                                              std::span<const WordType> peer,
                                                              PprEngine& engine);

}  // namespace grouge
