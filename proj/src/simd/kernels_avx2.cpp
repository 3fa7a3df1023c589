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

// Compiled with -mavx2. Only reached through avx2_kernels(), which checks the
// CPU before handing out the table.
#include <immintrin.h>

#include "grouge/simd/kernels.hpp"

namespace grouge::simd {
namespace detail {
const KernelTable& avx2_table();
}

namespace {

static_assert(kLanes == 4, "one __m256d per node");

void lane_multiply(const double* x, const double* w, double* z, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    _mm256_storeu_pd(z + i * 4, _mm256_mul_pd(_mm256_loadu_pd(x + i * 4), _mm256_set1_pd(w[i])));
  }
}

void lane_gather_scale(const std::uint32_t* rows, const std::uint32_t* cols, std::size_t count,
                       std::size_t degree, const double* z, double* y, double a) {
  const __m256d av = _mm256_set1_pd(a);
  for (std::size_t r = 0; r < count; ++r) {
    const std::uint32_t* c = cols + r * degree;
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t k = 0; k < degree; ++k) {
      acc = _mm256_add_pd(acc, _mm256_loadu_pd(z + std::size_t{c[k]} * 4));
    }
    _mm256_storeu_pd(y + std::size_t{rows[r]} * 4, _mm256_mul_pd(av, acc));
  }
}

std::size_t overlap(const std::uint32_t* idx, const std::uint32_t* rank, std::size_t n,
                    std::uint32_t offset, const std::uint32_t* dense_rank, std::uint32_t* histogram) {
  // Ranks stay far below 2^31, so signed 32-bit gathers and sums are exact.
  const __m256i zero = _mm256_setzero_si256();
  const __m256i off = _mm256_set1_epi32(static_cast<int>(offset));
  alignas(32) std::uint32_t sums[8];
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i ix = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(idx + i));
    const __m256i other =
        _mm256_i32gather_epi32(reinterpret_cast<const int*>(dense_rank), ix, 4);
    auto absent = static_cast<unsigned>(
        _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(other, zero))));
    unsigned present = ~absent & 0xffu;
    if (present == 0) continue;
    const __m256i own = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(rank + i));
    _mm256_store_si256(reinterpret_cast<__m256i*>(sums),
                       _mm256_add_epi32(_mm256_add_epi32(other, own), off));
    while (present) {
      const int lane = __builtin_ctz(present);
      ++histogram[sums[lane]];
      ++count;
      present &= present - 1;
    }
  }
  for (; i < n; ++i) {
    const std::uint32_t other = dense_rank[idx[i]];
    if (other == 0) continue;
    ++histogram[other + rank[i] + offset];
    ++count;
  }
  return count;
}

double harmonic_sum(const std::uint32_t* counts, const double* recip, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t k = 0; k < n; k += 4) {
    const __m128i c = _mm_loadu_si128(reinterpret_cast<const __m128i*>(counts + k));
    acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_cvtepi32_pd(c), _mm256_loadu_pd(recip + k)));
  }
  alignas(32) double s[4];
  _mm256_store_pd(s, acc);
  return (s[0] + s[1]) + (s[2] + s[3]);
}

constexpr KernelTable kAvx2{"avx2", lane_multiply, lane_gather_scale, overlap, harmonic_sum};

}  // namespace

const KernelTable& detail::avx2_table() { return kAvx2; }

}  // namespace grouge::simd
