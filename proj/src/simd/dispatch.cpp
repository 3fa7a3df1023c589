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

#include <cstdlib>
#include <string_view>

#include "grouge/simd/kernels.hpp"

namespace grouge::simd {

#if defined(GROUGE_HAVE_AVX2)
namespace detail {
const KernelTable& avx2_table();
}
#endif

const KernelTable* avx2_kernels() {
#if defined(GROUGE_HAVE_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2");
  if (supported) return &detail::avx2_table();
#endif
  return nullptr;
}

const KernelTable& active_kernels() {
  static const KernelTable& table = []() -> const KernelTable& {
    const char* forced = std::getenv("GROUGE_SIMD");
    if (forced && std::string_view(forced) == "scalar") return scalar_kernels();
    if (const auto* avx2 = avx2_kernels()) return *avx2;
    return scalar_kernels();
  }();
  return table;
}

}  // namespace grouge::simd
