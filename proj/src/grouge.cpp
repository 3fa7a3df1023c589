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

#include "grouge/grouge.hpp"

#include <algorithm>
#include <sstream>

#include "grouge/error.hpp"

namespace grouge {

std::string Metric::name() const {
  return std::string(semantic ? "g" : "r") + std::string(variant_suffix(gram));
}

Metric Metric::parse(std::string_view name) {
  if (name.size() < 2 || (name[0] != 'g' && name[0] != 'r')) {
    throw Error("unknown metric '" + std::string(name) + "'");
  }
  Metric m;
  m.semantic = name[0] == 'g';
  const auto rest = name.substr(1);
  if (rest == "1") {
    m.gram = GramVariant::N1;
  } else if (rest == "2") {
    m.gram = GramVariant::N2;
  } else if (rest == "su4") {
    m.gram = GramVariant::SU4;
  } else {
    throw Error("unknown metric '" + std::string(name) + "'");
  }
  return m;
}

std::vector<Metric> parse_metric_list(std::string_view comma_separated) {
  std::vector<Metric> out;
  std::stringstream ss{std::string(comma_separated)};
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const Metric m = Metric::parse(item);
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
  }
  if (out.empty()) throw Error("no metrics given");
  return out;
}

void GrougeConfig::validate() const {
  if (!(beta >= 0.0 && beta <= 1.0)) throw Error("beta must lie in [0, 1]");
  if (!(oov_boost > 1.0)) throw Error("OOV boost must exceed 1");
}

double GramTerms::numerator(double beta) const {
  double sum = 0.0;
  for (std::size_t k = 0; k < matched.size(); ++k) {
    sum += beta * static_cast<double>(matched[k]) + (1.0 - beta) * semantic[k];
  }
  return sum;
}

std::size_t GramTerms::matched_count() const {
  return static_cast<std::size_t>(std::count(matched.begin(), matched.end(), std::uint8_t{1}));
}

double semantic_similarity(const PprVector& gram_sig, const PprVector* peer_sig) {
  if (!peer_sig || peer_sig->empty() || gram_sig.empty()) return 0.0;
  return sim_sem(gram_sig, *peer_sig);
}

GrougeScorer::GrougeScorer(PprEngine& engine, const Dictionary& dictionary, LexiconOptions lexicon)
    : engine_(engine), dictionary_(dictionary), lexicon_(lexicon) {}

PreparedPair GrougeScorer::prepare(const SummaryText& peer, const SummaryText& model,
                                   const GrougeConfig& config) {
  PreparedPair p;
  p.model_words = word_types(model, dictionary_, lexicon_);
  p.peer_words = word_types(peer, dictionary_, lexicon_);
  std::tie(p.model, p.peer) = disambiguate_pair(p.model_words, p.peer_words, engine_);

  if (peer.empty()) return p;
  std::vector<std::uint32_t> seeds;
  std::vector<std::string> oov;
  for (const auto& a : p.peer.assignments()) {
    if (a.sense) {
      seeds.push_back(*a.sense);
    } else {
      oov.push_back(a.word.stem);
    }
  }
  PprHandle base = seeds.empty() ? std::make_shared<const PprVector>()
                                 : engine_.for_seeds(SeedSet(std::move(seeds)));
  if (config.oov_enabled && !oov.empty()) {
    base = std::make_shared<const PprVector>(insert_oov(*base, oov, config.oov_boost));
  }
  p.peer_signature = std::move(base);
  return p;
}

PprVector GrougeScorer::peer_signature(const SummaryText& peer, const SummaryText& model,
                                       const GrougeConfig& config) {
  const auto p = prepare(peer, model, config);
  return p.peer_signature ? *p.peer_signature : PprVector{};
}

PprHandle GrougeScorer::gram_signature(const NGram& gram, const SenseAssignment& model_assignment,
                                       const GrougeConfig& config) {
  std::vector<std::uint32_t> seeds;
  std::vector<std::string> oov;
  for (const auto& term : gram.content_terms()) {
    const Assignment* a = model_assignment.find(term);
    if (a && a->sense) {
      seeds.push_back(*a->sense);
    } else {
      oov.push_back(term);
    }
  }
  PprHandle base = seeds.empty() ? std::make_shared<const PprVector>()
                                 : engine_.for_seeds(SeedSet(std::move(seeds)));
  if (config.oov_enabled && !oov.empty()) {
    return std::make_shared<const PprVector>(insert_oov(*base, oov, config.oov_boost));
  }
  return base;
}

double GrougeScorer::sim_ls(const NGram& gram, const NGramMultiset& peer_grams,
                            const PprVector& gram_sig, const PprVector* peer_sig, MatchState& state,
                            double beta) const {
  const int matched = count_match(gram, peer_grams, state);
  return beta * static_cast<double>(matched) +
         (1.0 - beta) * semantic_similarity(gram_sig, peer_sig);
}

GramTerms GrougeScorer::pair_terms(const SummaryText& peer, const SummaryText& model,
                                   const PreparedPair* prepared, GramVariant variant,
                                   const GrougeConfig& config) {
  const NGramMultiset peer_grams = extract_grams(peer, variant);
  const NGramMultiset model_grams = extract_grams(model, variant);
  GramTerms terms;
  terms.matched.reserve(model_grams.total());
  terms.semantic.reserve(model_grams.total());
  MatchState state;
  // Grams with identical content terms share one signature.
  std::map<std::vector<std::string>, double> similarity_of;
  if (prepared && prepared->peer_signature) {
    std::vector<SeedSet> seeds;
    for (const auto& [gram, count] : model_grams.counts()) {
      std::vector<std::uint32_t> nodes;
      for (const auto& term : gram.content_terms()) {
        const Assignment* a = prepared->model.find(term);
        if (a && a->sense) nodes.push_back(*a->sense);
      }
      if (!nodes.empty()) seeds.emplace_back(std::move(nodes));
    }
    engine_.prefetch(seeds);
  }
  for (const auto& [gram, count] : model_grams.counts()) {
    double sim = 0.0;
    if (prepared && prepared->peer_signature) {
      const auto content = gram.content_terms();
      auto it = similarity_of.find(content);
      if (it == similarity_of.end()) {
        const PprHandle sig = gram_signature(gram, prepared->model, config);
        it = similarity_of.emplace(content, semantic_similarity(*sig, prepared->peer_signature.get())).first;
      }
      sim = it->second;
    }
    for (int k = 0; k < count; ++k) {
      terms.matched.push_back(static_cast<std::uint8_t>(count_match(gram, peer_grams, state)));
      terms.semantic.push_back(sim);
    }
  }
  return terms;
}

double GrougeScorer::score(const SummaryText& peer, std::span<const SummaryText> models,
                           const GrougeConfig& config) {
  config.validate();
  if (models.empty()) throw Error("no model summaries");
  double numerator = 0.0;
  std::size_t total = 0;
  for (const auto& model : models) {
    const bool semantic = config.beta < 1.0;
    PreparedPair prepared;
    if (semantic) prepared = prepare(peer, model, config);
    const GramTerms t = pair_terms(peer, model, semantic ? &prepared : nullptr, config.variant, config);
    numerator += t.numerator(config.beta);
    total += t.total();
  }
  return total == 0 ? 0.0 : numerator / static_cast<double>(total);
}

}  // namespace grouge
