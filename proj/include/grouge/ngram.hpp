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

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "grouge/text.hpp"

namespace grouge {

// Marker standing in for the sentence start in ROUGE-SU unigram pairs. Cannot
// collide with a token, which is always alphanumeric.
inline constexpr const char* kBeginOfSentence = "<s>";

enum class NGramKind { Contiguous, Skip, UnigramOfSu };

struct NGram {
  std::vector<std::string> terms;
  NGramKind kind = NGramKind::Contiguous;

  // The real tokens of the gram (the begin-of-sentence marker excluded).
  std::vector<std::string> content_terms() const;

  friend auto operator<=>(const NGram&, const NGram&) = default;
};

// Occurrence counts of n-grams, iterated in a fixed (sorted) order.
class NGramMultiset {
 public:
  void add(NGram gram, int count = 1);
  int count(const NGram& gram) const;
  std::size_t total() const { return total_; }
  std::size_t distinct() const { return counts_.size(); }
  const std::map<NGram, int>& counts() const { return counts_; }

 private:
  std::map<NGram, int> counts_;
  std::size_t total_ = 0;
};

// Contiguous n-grams within sentences. Throws for n < 1.
NGramMultiset extract_ngrams(const SummaryText& text, std::size_t n);

// Skip bigrams with gap <= 4 plus begin-of-sentence unigram pairs, per sentence.
NGramMultiset extract_su4(const SummaryText& text);

// Per-pass consumption of peer gram occurrences, for clipped matching.
class MatchState {
 public:
  int consumed(const NGram& gram) const;
  void consume(const NGram& gram) { ++consumed_[gram]; }
  void reset() { consumed_.clear(); }

 private:
  std::map<NGram, int> consumed_;
};

// 1 and consumes one occurrence if an unconsumed occurrence of `gram` remains
// in `peer`, else 0. Over a pass, matches of a gram never exceed
// min(model count, peer count).
int count_match(const NGram& gram, const NGramMultiset& peer, MatchState& state);

}  // namespace grouge
