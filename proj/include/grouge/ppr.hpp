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
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "grouge/semantic_graph.hpp"
#include "grouge/simd/kernels.hpp"

namespace grouge {

struct PprConfig {
  double alpha = 0.15;  // restart probability
  int iterations = 30;
  // Keep only the top-K dimensions of each result (no renormalization).
  std::optional<std::size_t> truncation;
  // Stop early once the L1 change between iterates drops below this.
  std::optional<double> tolerance;

  void validate() const;

  // Trades exactness for memory on large graphs: stored vectors keep 5000 dims.
  static PprConfig performance_preset();

  friend bool operator==(const PprConfig&, const PprConfig&) = default;
};

// Non-empty, duplicate-free set of graph nodes; canonical (ascending) order.
class SeedSet {
 public:
  explicit SeedSet(std::vector<std::uint32_t> nodes);
  SeedSet(const SemanticGraph& graph, std::span<const SenseId> senses);

  std::span<const std::uint32_t> nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }
  friend bool operator==(const SeedSet&, const SeedSet&) = default;

 private:
  std::vector<std::uint32_t> nodes_;
};

struct OovDimension {
  std::string term;
  double weight = 0.0;
  friend bool operator==(const OovDimension&, const OovDimension&) = default;
};

// One dimension of a PprVector in rank order.
struct RankedDimension {
  std::optional<std::uint32_t> node;  // empty for OOV dimensions
  std::string oov_term;
  double weight = 0.0;
  std::uint32_t rank = 0;
};

// Sparse distribution over senses, plus optional OOV dimensions.
//
// Sense dimensions are stored in ascending node order together with their
// rank. Ranks follow descending weight, ties broken by ascending node (which is
// ascending SenseId). OOV dimensions always outrank every sense dimension and
// occupy ranks 1..oov().size(); a sense dimension's overall rank is therefore
// oov().size() + sense_ranks()[i].
class PprVector {
 public:
  PprVector() = default;

  // Zero entries are dropped. With `truncation` only the top-K ranks are kept.
  static PprVector from_dense(std::span<const double> dense,
                              std::optional<std::size_t> truncation = std::nullopt);
  // Entries need positive weights and distinct nodes, in any order.
  static PprVector from_entries(std::vector<std::pair<std::uint32_t, double>> entries);

  std::span<const std::uint32_t> nodes() const { return nodes_; }
  std::span<const double> weights() const { return weights_; }
  std::span<const std::uint32_t> sense_ranks() const { return ranks_; }
  const std::vector<OovDimension>& oov() const { return oov_; }

  std::size_t sense_count() const { return nodes_.size(); }
  std::size_t dimension_count() const { return nodes_.size() + oov_.size(); }
  bool empty() const { return dimension_count() == 0; }

  double max_weight() const;
  double sense_weight_sum() const;
  double weight_of(std::uint32_t node) const;

  std::vector<RankedDimension> ranked(std::size_t limit = static_cast<std::size_t>(-1)) const;
  std::size_t memory_bytes() const;

  friend bool operator==(const PprVector&, const PprVector&) = default;

 private:
  friend PprVector insert_oov(const PprVector&, std::span<const std::string>, double);

  std::vector<std::uint32_t> nodes_;
  std::vector<double> weights_;
  std::vector<std::uint32_t> ranks_;
  std::vector<OovDimension> oov_;
};

// Called after every iteration with the 1-based iteration number and iterate.
using IterationObserver = std::function<void(int, std::span<const double>)>;

// Sparse power iteration V(t) = (1-a) W V(t-1) + a V(0), with W the
// column-stochastic walk matrix of `graph` and V(0) uniform over `seeds`.
// Mass sitting on dangling nodes is returned to V(0).
PprVector compute_ppr(const SemanticGraph& graph, const SeedSet& seeds, const PprConfig& config,
                      const IterationObserver& observer = {},
                      const simd::KernelTable& kernels = simd::active_kernels());

// compute_ppr for several seed sets, advanced simd::kLanes at a time. Each
// result is bitwise identical to compute_ppr on its own.
std::vector<PprVector> compute_ppr_batch(const SemanticGraph& graph, std::span<const SeedSet> seeds,
                                         const PprConfig& config,
                                         const simd::KernelTable& kernels = simd::active_kernels());

}  // namespace grouge
