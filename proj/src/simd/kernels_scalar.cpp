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

#include "grouge/simd/kernels.hpp"

namespace grouge::simd {
namespace {

void lane_multiply(const double* x, const double* w, double* z, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < kLanes; ++j) z[i * kLanes + j] = x[i * kLanes + j] * w[i];
  }
}

void lane_gather_scale(const std::uint32_t* rows, const std::uint32_t* cols, std::size_t count,
                       std::size_t degree, const double* z, double* y, double a) {
  for (std::size_t r = 0; r < count; ++r) {
    double acc[kLanes] = {};
    for (std::size_t k = 0; k < degree; ++k) {
      const double* src = z + std::size_t{cols[r * degree + k]} * kLanes;
      for (std::size_t j = 0; j < kLanes; ++j) acc[j] += src[j];
    }
    for (std::size_t j = 0; j < kLanes; ++j) y[std::size_t{rows[r]} * kLanes + j] = a * acc[j];
  }
}

std::size_t overlap(const std::uint32_t* idx, const std::uint32_t* rank, std::size_t n,
                    std::uint32_t offset, const std::uint32_t* dense_rank, std::uint32_t* histogram) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t other = dense_rank[idx[i]];
    if (other == 0) continue;
    ++histogram[other + rank[i] + offset];
    ++count;
  }
  return count;
}

double harmonic_sum(const std::uint32_t* counts, const double* recip, std::size_t n) {
  double s[4] = {};
  for (std::size_t k = 0; k < n; k += 4) {
    for (std::size_t j = 0; j < 4; ++j) s[j] += static_cast<double>(counts[k + j]) * recip[k + j];
  }
  return (s[0] + s[1]) + (s[2] + s[3]);
}

constexpr KernelTable kScalar{"scalar", lane_multiply, lane_gather_scale, overlap, harmonic_sum};

}  // namespace

const KernelTable& scalar_kernels() { return kScalar; }

}  // namespace grouge::simd
