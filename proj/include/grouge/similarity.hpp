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

#include <span>
#include <string>

#include "grouge/ppr.hpp"
#include "grouge/simd/kernels.hpp"

namespace grouge {

inline constexpr double kDefaultOovBoost = 1.01;

// Weighted Overlap of two signatures:
//   sum_{h in H} 1/(r_h(a) + r_h(b))  /  sum_{i=1..|H|} 1/(2i)
// where H is the set of shared dimensions and r_h the 1-based rank. Returns 0
// when H is empty. Exactly symmetric in its arguments; depends only on ranks.
// Throws Error("empty signature") if either vector has no dimensions.
double weighted_overlap(const PprVector& a, const PprVector& b,
                        const simd::KernelTable& kernels = simd::active_kernels());

inline double sim_sem(const PprVector& a, const PprVector& b) { return weighted_overlap(a, b); }

// Adds one dimension per distinct term not already present. Every new
// dimension gets weight max_weight() * boost (1.0 on an empty vector), so the
// new terms take the top ranks, ordered by ascending term. No renormalization.
PprVector insert_oov(const PprVector& v, std::span<const std::string> terms,
                     double boost = kDefaultOovBoost);

}  // namespace grouge
