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

#include "grouge/ppr.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include <boost/sort/spreadsort/integer_sort.hpp>

#include "grouge/error.hpp"

namespace grouge {

void PprConfig::validate() const {
  if (!(alpha > 0.0 && alpha < 1.0)) throw Error("alpha must lie in (0, 1)");
  if (iterations < 1) throw Error("iterations must be >= 1");
  if (truncation && *truncation < 1) throw Error("truncation must be >= 1");
  if (tolerance && !(*tolerance > 0.0)) throw Error("tolerance must be positive");
}

PprConfig PprConfig::performance_preset() {
  PprConfig c;
  c.truncation = 5000;
  return c;
}

SeedSet::SeedSet(std::vector<std::uint32_t> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.empty()) throw Error("empty seed set");
  std::sort(nodes_.begin(), nodes_.end());
  nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
}

SeedSet::SeedSet(const SemanticGraph& graph, std::span<const SenseId> senses) {
  if (senses.empty()) throw Error("empty seed set");
  std::vector<std::uint32_t> nodes;
  nodes.reserve(senses.size());
  for (const auto& s : senses) {
    const auto idx = graph.index_of(s);
    if (!idx) throw Error("seed sense " + s.str() + " is not in the graph");
    nodes.push_back(*idx);
  }
  *this = SeedSet(std::move(nodes));
}

namespace {

// Orders (node, weight) pairs by rank: descending weight, then ascending node.
bool rank_before(const std::pair<std::uint32_t, double>& a,
                 const std::pair<std::uint32_t, double>& b) {
  if (a.second != b.second) return a.second > b.second;
  return a.first < b.first;
}

struct RankKey {
  std::uint64_t bits;
  std::uint32_t pos;
};

}  // namespace

PprVector PprVector::from_entries(std::vector<std::pair<std::uint32_t, double>> entries) {
  std::sort(entries.begin(), entries.end(), rank_before);
  for (const auto& e : entries) {
    if (!(e.second > 0.0)) throw Error("PPR weights must be positive");
  }
  std::vector<std::uint32_t> order(entries.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(),
            [&](std::uint32_t a, std::uint32_t b) { return entries[a].first < entries[b].first; });
  PprVector v;
  v.nodes_.reserve(entries.size());
  v.weights_.reserve(entries.size());
  v.ranks_.reserve(entries.size());
  for (const auto pos : order) {
    if (!v.nodes_.empty() && v.nodes_.back() == entries[pos].first) {
      throw Error("duplicate PPR dimension");
    }
    v.nodes_.push_back(entries[pos].first);
    v.weights_.push_back(entries[pos].second);
    v.ranks_.push_back(pos + 1);
  }
  return v;
}

PprVector PprVector::from_dense(std::span<const double> dense,
                                std::optional<std::size_t> truncation) {
  std::vector<std::pair<std::uint32_t, double>> entries;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i] > 0.0) entries.emplace_back(static_cast<std::uint32_t>(i), dense[i]);
  }
  if (truncation && entries.size() > *truncation) {
    std::nth_element(entries.begin(), entries.begin() + static_cast<std::ptrdiff_t>(*truncation),
                     entries.end(), rank_before);
    entries.resize(*truncation);
    return from_entries(std::move(entries));
  }
  // Entries are already in node order. For positive doubles the bit pattern
  // orders like the value, so sorting ~bits descends by weight; the position
  // in the low word breaks ties by ascending node.
  std::vector<RankKey> keys(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    keys[i] = {~std::bit_cast<std::uint64_t>(entries[i].second), static_cast<std::uint32_t>(i)};
  }
  boost::sort::spreadsort::integer_sort(
      keys.begin(), keys.end(), [](const RankKey& k, unsigned shift) { return k.bits >> shift; },
      [](const RankKey& a, const RankKey& b) {
        return a.bits != b.bits ? a.bits < b.bits : a.pos < b.pos;
      });
  PprVector v;
  v.nodes_.reserve(entries.size());
  v.weights_.reserve(entries.size());
  for (const auto& [node, weight] : entries) {
    v.nodes_.push_back(node);
    v.weights_.push_back(weight);
  }
  v.ranks_.resize(entries.size());
  for (std::size_t r = 0; r < keys.size(); ++r) v.ranks_[keys[r].pos] = static_cast<std::uint32_t>(r + 1);
  return v;
}

double PprVector::max_weight() const {
  double m = 0.0;
  for (const auto w : weights_) m = std::max(m, w);
  for (const auto& o : oov_) m = std::max(m, o.weight);
  return m;
}

double PprVector::sense_weight_sum() const {
  return std::accumulate(weights_.begin(), weights_.end(), 0.0);
}

double PprVector::weight_of(std::uint32_t node) const {
  const auto it = std::lower_bound(nodes_.begin(), nodes_.end(), node);
  if (it == nodes_.end() || *it != node) return 0.0;
  return weights_[static_cast<std::size_t>(it - nodes_.begin())];
}

std::vector<RankedDimension> PprVector::ranked(std::size_t limit) const {
  std::vector<RankedDimension> out;
  const auto k = static_cast<std::uint32_t>(oov_.size());
  for (std::uint32_t i = 0; i < k && out.size() < limit; ++i) {
    out.push_back({std::nullopt, oov_[i].term, oov_[i].weight, i + 1});
  }
  std::vector<RankedDimension> senses(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    senses[ranks_[i] - 1] = {nodes_[i], {}, weights_[i], k + ranks_[i]};
  }
  for (auto& d : senses) {
    if (out.size() >= limit) break;
    out.push_back(std::move(d));
  }
  return out;
}

std::size_t PprVector::memory_bytes() const {
  std::size_t bytes = sizeof(PprVector) + nodes_.capacity() * sizeof(std::uint32_t) +
                      weights_.capacity() * sizeof(double) +
                      ranks_.capacity() * sizeof(std::uint32_t);
  for (const auto& o : oov_) bytes += sizeof(OovDimension) + o.term.capacity();
  return bytes;
}

namespace {

// Advances up to kLanes seed sets together; out[j] receives lane j.
void compute_block(const SemanticGraph& graph, std::span<const SeedSet> seeds,
                   const PprConfig& config, const IterationObserver& observer,
                   const simd::KernelTable& kernels, PprVector* out) {
  constexpr std::size_t L = simd::kLanes;
  const std::size_t n = graph.node_count();
  const std::size_t lanes = seeds.size();

  thread_local std::vector<double> x, y, z, lane;
  x.assign(n * L, 0.0);
  y.assign(n * L, 0.0);
  z.assign(n * L, 0.0);

  double seed_mass[L] = {};
  bool active[L] = {};
  for (std::size_t j = 0; j < lanes; ++j) {
    seed_mass[j] = 1.0 / static_cast<double>(seeds[j].size());
    for (const auto s : seeds[j].nodes()) x[s * L + j] = seed_mass[j];
    active[j] = true;
  }

  const auto buckets = graph.degree_buckets();
  const auto inv_degree = graph.inverse_degree();
  const auto dangling = graph.dangling();
  const double keep = 1.0 - config.alpha;

  auto extract = [&](std::size_t j) {
    lane.resize(n);
    for (std::size_t i = 0; i < n; ++i) lane[i] = x[i * L + j];
  };
  auto finish = [&](std::size_t j) {
    extract(j);
    out[j] = PprVector::from_dense(lane, config.truncation);
    active[j] = false;
  };

  for (int t = 1; t <= config.iterations; ++t) {
    kernels.lane_multiply(x.data(), inv_degree.data(), z.data(), n);
    for (const auto& b : buckets) {
      kernels.lane_gather_scale(b.rows.data(), b.cols.data(), b.rows.size(), b.degree, z.data(),
                                y.data(), keep);
    }
    bool converged[L] = {};
    for (std::size_t j = 0; j < lanes; ++j) {
      double dangling_mass = 0.0;
      for (const auto d : dangling) dangling_mass += x[d * L + j];
      const double restart = (config.alpha + keep * dangling_mass) * seed_mass[j];
      for (const auto s : seeds[j].nodes()) y[s * L + j] += restart;
      if (config.tolerance && active[j]) {
        double delta = 0.0;
        for (std::size_t i = 0; i < n; ++i) delta += std::abs(y[i * L + j] - x[i * L + j]);
        converged[j] = delta < *config.tolerance;
      }
    }
    std::swap(x, y);
    if (observer) {
      extract(0);
      observer(t, lane);
    }
    bool any_active = false;
    for (std::size_t j = 0; j < lanes; ++j) {
      if (active[j] && converged[j]) finish(j);
      any_active = any_active || active[j];
    }
    if (!any_active) return;
  }
  for (std::size_t j = 0; j < lanes; ++j) {
    if (active[j]) finish(j);
  }
}

void check_seeds(const SemanticGraph& graph, const SeedSet& seeds) {
  for (const auto s : seeds.nodes()) {
    if (s >= graph.node_count()) throw Error("seed node " + std::to_string(s) + " is not in the graph");
  }
}

}  // namespace

PprVector compute_ppr(const SemanticGraph& graph, const SeedSet& seeds, const PprConfig& config,
                      const IterationObserver& observer, const simd::KernelTable& kernels) {
  config.validate();
  check_seeds(graph, seeds);
  PprVector out;
  compute_block(graph, std::span<const SeedSet>(&seeds, 1), config, observer, kernels, &out);
  return out;
}

std::vector<PprVector> compute_ppr_batch(const SemanticGraph& graph, std::span<const SeedSet> seeds,
                                         const PprConfig& config, const simd::KernelTable& kernels) {
  config.validate();
  for (const auto& s : seeds) check_seeds(graph, s);
  std::vector<PprVector> out(seeds.size());
  for (std::size_t b = 0; b < seeds.size(); b += simd::kLanes) {
    const std::size_t count = std::min(simd::kLanes, seeds.size() - b);
    compute_block(graph, seeds.subspan(b, count), config, {}, kernels, out.data() + b);
  }
  return out;
}

}  // namespace grouge
