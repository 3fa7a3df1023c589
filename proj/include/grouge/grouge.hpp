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

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "grouge/disambiguation.hpp"
#include "grouge/ngram.hpp"
#include "grouge/ppr_engine.hpp"
#include "grouge/rouge.hpp"
#include "grouge/similarity.hpp"

namespace grouge {

// A reported metric: lexical ROUGE-N/SU4 ("r1", "r2", "rsu4") or the blended
// graph score ("g1", "g2", "gsu4").
struct Metric {
  GramVariant gram = GramVariant::N2;
  bool semantic = true;

  std::string name() const;
  // Throws Error on an unknown name.
  static Metric parse(std::string_view name);
  friend bool operator==(const Metric&, const Metric&) = default;
};

std::vector<Metric> parse_metric_list(std::string_view comma_separated);

struct GrougeConfig {
  double beta = 0.5;
  GramVariant variant = GramVariant::N2;
  bool oov_enabled = true;
  double oov_boost = kDefaultOovBoost;

  void validate() const;
};

// Lexical and semantic terms of every model-gram occurrence for one
// (peer, model) pair. The blended numerator for a given beta is
// sum_k beta * matched[k] + (1 - beta) * semantic[k].
struct GramTerms {
  std::vector<std::uint8_t> matched;
  std::vector<double> semantic;

  std::size_t total() const { return matched.size(); }
  double numerator(double beta) const;
  std::size_t matched_count() const;
};

// Disambiguation of a (peer, model) pair plus the peer's signature.
struct PreparedPair {
  std::vector<WordType> model_words;
  std::vector<WordType> peer_words;
  SenseAssignment model;
  SenseAssignment peer;
  PprHandle peer_signature;  // null when the peer has no tokens
};

class GrougeScorer {
 public:
  GrougeScorer(PprEngine& engine, const Dictionary& dictionary, LexiconOptions lexicon = {});

  PprEngine& engine() { return engine_; }

  PreparedPair prepare(const SummaryText& peer, const SummaryText& model, const GrougeConfig& config);

  // PPR over the peer's assigned senses with its OOV tokens inserted; empty
  // when the peer has no tokens at all.
  PprVector peer_signature(const SummaryText& peer, const SummaryText& model,
                           const GrougeConfig& config);

  // PPR seeded by the assigned senses of the gram's real terms, with its OOV
  // terms inserted. Empty only when every term is OOV and OOV handling is off.
  PprHandle gram_signature(const NGram& gram, const SenseAssignment& model_assignment,
                           const GrougeConfig& config);

  // beta * count_match + (1 - beta) * sim_sem(gram, peer).
  double sim_ls(const NGram& gram, const NGramMultiset& peer_grams, const PprVector& gram_sig,
                const PprVector* peer_sig, MatchState& state, double beta) const;

  // Per-occurrence terms for one pair. With `semantic` false only the lexical
  // side is computed (semantic terms are 0).
  GramTerms pair_terms(const SummaryText& peer, const SummaryText& model, const PreparedPair* prepared,
                       GramVariant variant, const GrougeConfig& config);

  // Sum over models of sim_ls over model grams / sum of model gram counts.
  double score(const SummaryText& peer, std::span<const SummaryText> models,
               const GrougeConfig& config);

 private:
  PprEngine& engine_;
  const Dictionary& dictionary_;
  LexiconOptions lexicon_;
};

double semantic_similarity(const PprVector& gram_sig, const PprVector* peer_sig);

}  // namespace grouge
