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
#include <string_view>

// Inner loops of the PPR power iteration and of Weighted Overlap.
//
// PPR iterates are stored lane-interleaved: element j of node i lives at
// [i * kLanes + j], so kLanes seed sets advance together. Every kernel has a
// scalar reference implementation, and each lane performs the same operations
// in the same order in every variant, so all variants are bitwise identical.
namespace grouge::simd {

inline constexpr std::size_t kLanes = 4;

struct KernelTable {
  std::string_view name;

  // z[i*kLanes + j] = x[i*kLanes + j] * w[i]
  void (*lane_multiply)(const double* x, const double* w, double* z, std::size_t n);

  // For rows that all have `degree` neighbours, listed row-major in cols:
  // y[rows[r]*kLanes + j] = a * (sum of z[cols[r*degree + k]*kLanes + j] for
  // k = 0 .. degree-1, added in that order)
  void (*lane_gather_scale)(const std::uint32_t* rows, const std::uint32_t* cols,
                            std::size_t count, std::size_t degree, const double* z, double* y,
                            double a);

  // For each i with dense_rank[idx[i]] != 0:
  //   ++histogram[dense_rank[idx[i]] + rank[i] + offset]
  // Returns the number of such i.
  std::size_t (*overlap)(const std::uint32_t* idx, const std::uint32_t* rank, std::size_t n,
                         std::uint32_t offset, const std::uint32_t* dense_rank,
                         std::uint32_t* histogram);

  // Sum of counts[k] * recip[k] over k < n, where n is a multiple of 4.
  // Partial sum j takes k = j (mod 4) in ascending order; the result is
  // (s0 + s1) + (s2 + s3).
  double (*harmonic_sum)(const std::uint32_t* counts, const double* recip, std::size_t n);
};

const KernelTable& scalar_kernels();

// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2.
const KernelTable* avx2_kernels();

// The table used by the library. Chosen once per process: AVX2 when available,
// unless the environment variable GROUGE_SIMD=scalar forces the reference path.
const KernelTable& active_kernels();

}  // namespace grouge::simd
