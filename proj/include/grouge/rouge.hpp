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
#include <string_view>

#include "grouge/ngram.hpp"
#include "grouge/text.hpp"

namespace grouge {

enum class GramVariant { N1, N2, SU4 };

std::string_view variant_suffix(GramVariant v);  // "1", "2", "su4"

NGramMultiset extract_grams(const SummaryText& text, GramVariant variant);

// Recall: matched model grams / total model grams, both summed over models.
// Throws when `models` is empty; an empty peer scores 0.
double rouge_score(const SummaryText& peer, std::span<const SummaryText> models, GramVariant variant);

}  // namespace grouge
