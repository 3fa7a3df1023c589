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

#include "grouge/ngram.hpp"

#include "grouge/error.hpp"

namespace grouge {

std::vector<std::string> NGram::content_terms() const {
  std::vector<std::string> out;
  for (const auto& t : terms) {
    if (t != kBeginOfSentence) out.push_back(t);
  }
  return out;
}

void NGramMultiset::add(NGram gram, int count) {
  if (count < 1) throw Error("n-gram count must be positive");
  counts_[std::move(gram)] += count;
  total_ += static_cast<std::size_t>(count);
}

int NGramMultiset::count(const NGram& gram) const {
  const auto it = counts_.find(gram);
  return it == counts_.end() ? 0 : it->second;
}

NGramMultiset extract_ngrams(const SummaryText& text, std::size_t n) {
  if (n < 1) throw Error("n-gram order must be >= 1");
  NGramMultiset grams;
  for (const auto& sentence : text.sentences) {
    if (sentence.size() < n) continue;
    for (std::size_t i = 0; i + n <= sentence.size(); ++i) {
      NGram g;
      g.terms.assign(sentence.begin() + static_cast<std::ptrdiff_t>(i),
                     sentence.begin() + static_cast<std::ptrdiff_t>(i + n));
      grams.add(std::move(g));
    }
  }
  return grams;
}

NGramMultiset extract_su4(const SummaryText& text) {
  constexpr std::size_t kMaxGap = 4;
  NGramMultiset grams;
  for (const auto& sentence : text.sentences) {
    for (std::size_t i = 0; i < sentence.size(); ++i) {
      grams.add({{kBeginOfSentence, sentence[i]}, NGramKind::UnigramOfSu});
      for (std::size_t j = i + 1; j < sentence.size() && j - i <= kMaxGap; ++j) {
        grams.add({{sentence[i], sentence[j]}, NGramKind::Skip});
      }
    }
  }
  return grams;
}

int MatchState::consumed(const NGram& gram) const {
  const auto it = consumed_.find(gram);
  return it == consumed_.end() ? 0 : it->second;
}

int count_match(const NGram& gram, const NGramMultiset& peer, MatchState& state) {
  if (state.consumed(gram) >= peer.count(gram)) return 0;
  state.consume(gram);
  return 1;
}

}  // namespace grouge
