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

#include "grouge/similarity.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "grouge/error.hpp"

namespace grouge {
namespace {

// Rank sums of shared dimensions are tallied in a histogram and reduced by a
// fixed lane schedule, so the result depends only on the multiset of rank
// sums. Identical vectors then reproduce the normalizer exactly.
std::size_t sense_overlap(const PprVector& a, const PprVector& b, std::uint32_t* histogram,
                          const simd::KernelTable& kernels) {
  if (a.sense_count() == 0 || b.sense_count() == 0) return 0;
  const PprVector& s = a.sense_count() <= b.sense_count() ? a : b;
  const PprVector& g = (&s == &a) ? b : a;

  thread_local std::vector<std::uint32_t> dense;
  const std::size_t span = std::max(a.nodes().back(), b.nodes().back()) + std::size_t{1};
  if (dense.size() < span) dense.resize(span, 0);

  const auto s_off = static_cast<std::uint32_t>(s.oov().size());
  const auto s_nodes = s.nodes();
  const auto s_ranks = s.sense_ranks();
  for (std::size_t i = 0; i < s_nodes.size(); ++i) dense[s_nodes[i]] = s_ranks[i] + s_off;

  const auto count =
      kernels.overlap(g.nodes().data(), g.sense_ranks().data(), g.sense_count(),
                      static_cast<std::uint32_t>(g.oov().size()), dense.data(), histogram);
  for (const auto node : s_nodes) dense[node] = 0;
  return count;
}

std::size_t oov_overlap(const PprVector& a, const PprVector& b, std::uint32_t* histogram) {
  if (a.oov().empty() || b.oov().empty()) return 0;
  std::unordered_map<std::string_view, std::uint32_t> rank_in_a;
  for (std::uint32_t i = 0; i < a.oov().size(); ++i) rank_in_a.emplace(a.oov()[i].term, i + 1);
  std::size_t count = 0;
  for (std::uint32_t j = 0; j < b.oov().size(); ++j) {
    const auto it = rank_in_a.find(b.oov()[j].term);
    if (it == rank_in_a.end()) continue;
    ++histogram[it->second + j + 1];
    ++count;
  }
  return count;
}

// recip[k] = 1/k, padded to a multiple of the kernel lane count.
const double* reciprocals(std::size_t n) {
  thread_local std::vector<double> recip{0.0};
  while (recip.size() < n) recip.push_back(1.0 / static_cast<double>(recip.size()));
  return recip.data();
}

// The harmonic_sum kernel applied to an identity histogram (one count at
// each 2i, i = 1..shared), without building the histogram. Rank sum 2i lands
// in lane 2i mod 4, so only lanes 0 and 2 are touched.
double identity_normalizer(std::size_t shared) {
  thread_local std::vector<double> lane0{0.0}, lane2{0.0};
  while (lane0.size() <= shared) {
    const std::size_t i = lane0.size();
    const double r = 1.0 / static_cast<double>(2 * i);
    lane0.push_back(i % 2 == 0 ? lane0.back() + r : lane0.back());
    lane2.push_back(i % 2 == 1 ? lane2.back() + r : lane2.back());
  }
  return (lane0[shared] + 0.0) + (lane2[shared] + 0.0);
}

}  // namespace

double weighted_overlap(const PprVector& a, const PprVector& b, const simd::KernelTable& kernels) {
  if (a.empty() || b.empty()) throw Error("empty signature");
  const std::size_t top = a.dimension_count() + b.dimension_count();
  const std::size_t padded = (top + simd::kLanes) / simd::kLanes * simd::kLanes;
  thread_local std::vector<std::uint32_t> histogram;
  if (histogram.size() < padded) histogram.resize(padded, 0);

  const std::size_t shared =
      sense_overlap(a, b, histogram.data(), kernels) + oov_overlap(a, b, histogram.data());
  if (shared == 0) return 0.0;
  const double sum = kernels.harmonic_sum(histogram.data(), reciprocals(padded), padded);
  std::fill_n(histogram.begin(), padded, 0u);
  return std::min(1.0, sum / identity_normalizer(shared));
}

PprVector insert_oov(const PprVector& v, std::span<const std::string> terms, double boost) {
  if (!(boost > 1.0)) throw Error("OOV boost must exceed 1");
  std::vector<std::string> fresh;
  for (const auto& t : terms) {
    const bool present = std::any_of(v.oov().begin(), v.oov().end(),
                                     [&](const OovDimension& o) { return o.term == t; });
    if (!present) fresh.push_back(t);
  }
  std::sort(fresh.begin(), fresh.end());
  fresh.erase(std::unique(fresh.begin(), fresh.end()), fresh.end());
  if (fresh.empty()) return v;

  const double weight = v.empty() ? 1.0 : v.max_weight() * boost;
  PprVector out = v;
  std::vector<OovDimension> oov;
  oov.reserve(fresh.size() + v.oov().size());
  for (auto& t : fresh) oov.push_back({std::move(t), weight});
  oov.insert(oov.end(), v.oov().begin(), v.oov().end());
  out.oov_ = std::move(oov);
  return out;
}

}  // namespace grouge
