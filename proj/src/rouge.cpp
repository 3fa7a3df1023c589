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

#include "grouge/rouge.hpp"

#include "grouge/error.hpp"

namespace grouge {

std::string_view variant_suffix(GramVariant v) {
  switch (v) {
    case GramVariant::N1: return "1";
    case GramVariant::N2: return "2";
    case GramVariant::SU4: return "su4";
  }
  return "?";
}

NGramMultiset extract_grams(const SummaryText& text, GramVariant variant) {
  switch (variant) {
    case GramVariant::N1: return extract_ngrams(text, 1);
    case GramVariant::N2: return extract_ngrams(text, 2);
    case GramVariant::SU4: return extract_su4(text);
  }
  throw Error("unknown gram variant");
}

double rouge_score(const SummaryText& peer, std::span<const SummaryText> models, GramVariant variant) {
  if (models.empty()) throw Error("no model summaries");
  const NGramMultiset peer_grams = extract_grams(peer, variant);
  std::size_t matched = 0;
  std::size_t total = 0;
  for (const auto& model : models) {
    MatchState state;
    const NGramMultiset model_grams = extract_grams(model, variant);
    for (const auto& [gram, count] : model_grams.counts()) {
      for (int k = 0; k < count; ++k) {
        matched += static_cast<std::size_t>(count_match(gram, peer_grams, state));
      }
      total += static_cast<std::size_t>(count);
    }
  }
  return total == 0 ? 0.0 : static_cast<double>(matched) / static_cast<double>(total);
}

}  // namespace grouge
