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

#include "cases.hpp"

#include <algorithm>

#include "grouge/disambiguation.hpp"
#include "grouge/ppr_engine.hpp"
#include "oracles.hpp"
#include "synthetic.hpp"

namespace grouge::testing {

std::map<std::string, double> overlap_map(const PprVector& v) {
  std::map<std::string, double> m;
  for (std::size_t i = 0; i < v.nodes().size(); ++i) {
    m["s" + std::to_string(100000 + v.nodes()[i])] = v.weights()[i];
  }
  for (const auto& o : v.oov()) m["#" + o.term] = o.weight;
  return m;
}

PprVector random_sparse_vector(std::mt19937_64& rng, std::uint32_t universe, std::size_t max_size) {
  const std::size_t n = 1 + rng() % std::min<std::size_t>(max_size, universe);
  std::map<std::uint32_t, double> entries;
  while (entries.size() < n) {
    entries[static_cast<std::uint32_t>(rng() % universe)] = static_cast<double>(1 + rng() % 6);
  }
  return PprVector::from_entries({entries.begin(), entries.end()});
}

WordType toy_word(const std::string& stem, const std::vector<std::uint32_t>& nodes) {
  WordType w{stem, stem, std::nullopt, {}};
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    w.senses.push_back({nodes[i], static_cast<std::uint32_t>(i + 1)});
  }
  return w;
}

std::vector<std::optional<std::uint32_t>> brute_force_disambiguation(
    const SemanticGraph& graph, const std::vector<WordType>& item,
    const std::vector<WordType>& context) {
  std::map<std::uint32_t, std::map<std::string, double>> vectors;
  auto vec = [&](std::uint32_t n) -> const std::map<std::string, double>& {
    auto it = vectors.find(n);
    if (it == vectors.end()) {
      it = vectors.emplace(n, overlap_map(compute_ppr(graph, SeedSet({n}), {}))).first;
    }
    return it->second;
  };
  bool any_context = false;
  for (const auto& c : context) any_context = any_context || !c.senses.empty();

  std::vector<std::optional<std::uint32_t>> out;
  for (const auto& w : item) {
    if (w.senses.empty()) {
      out.push_back(std::nullopt);
      continue;
    }
    double best_score = -1.0;
    std::uint32_t best_rank = 0, best_node = 0;
    for (const auto& s : w.senses) {
      double score = 0.0;
      if (any_context) {
        for (const auto& c : context) {
          for (const auto& cs : c.senses) {
            // Identical senses have similarity exactly 1.
            const double sim =
                s.node == cs.node ? 1.0 : oracle::weighted_overlap(vec(s.node), vec(cs.node));
            score = std::max(score, sim);
          }
        }
      }
      const bool better =
          score > best_score ||
          (score == best_score && (s.rank < best_rank || (s.rank == best_rank && s.node < best_node)));
      if (better) {
        best_score = score;
        best_rank = s.rank;
        best_node = s.node;
      }
    }
    out.push_back(best_node);
  }
  return out;
}

ToyCase random_toy_case(std::mt19937_64& rng, std::uint64_t graph_seed) {
  const std::size_t n = 4 + rng() % 17;
  const auto rg = random_graph(n, 0.25, graph_seed);
  auto words = [&](std::size_t count, const std::string& prefix) {
    std::vector<WordType> out;
    for (std::size_t i = 0; i < count; ++i) {
      std::vector<std::uint32_t> nodes;
      const std::size_t k = rng() % 4;  // 0 = OOV
      while (nodes.size() < k) {
        const auto c = static_cast<std::uint32_t>(rng() % n);
        if (std::find(nodes.begin(), nodes.end(), c) == nodes.end()) nodes.push_back(c);
      }
      out.push_back(toy_word(prefix + std::to_string(i), nodes));
    }
    return out;
  };
  auto item = words(1 + rng() % 3, "m");
  auto context = words(rng() % 4, "p");
  return {SemanticGraph::from_edges(rg.edges), std::move(item), std::move(context)};
}

int disambiguation_agreement(int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  int agree = 0;
  for (int trial = 0; trial < trials; ++trial) {
    const auto c = random_toy_case(rng, 1000 + static_cast<std::uint64_t>(trial));
    PprEngine engine(c.graph);
    const auto got = align_disambiguate(c.item, c.context, engine);
    const auto expected = brute_force_disambiguation(c.graph, c.item, c.context);
    bool same = got.assignments().size() == expected.size();
    for (std::size_t i = 0; same && i < expected.size(); ++i) {
      same = got.assignments()[i].sense == expected[i];
    }
    agree += same;
  }
  return agree;
}

}  // namespace grouge::testing
