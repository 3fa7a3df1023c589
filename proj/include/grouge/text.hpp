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
#include <filesystem>
#include <iosfwd>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace grouge {

using StopwordSet = std::set<std::string, std::less<>>;

// One word per line; blank lines and lines starting with '#' are skipped.
StopwordSet load_stopwords(std::istream& in);
StopwordSet load_stopwords(const std::filesystem::path& path);

struct TextOptions {
  bool stem = true;
  const StopwordSet* stopwords = nullptr;  // removed when set
};

// A tokenized summary. `sentences` holds the processed (stemmed unless
// disabled) tokens, `surfaces` the matching lowercase unstemmed tokens.
struct SummaryText {
  std::string raw;
  std::vector<std::vector<std::string>> sentences;
  std::vector<std::vector<std::string>> surfaces;

  std::vector<std::string> tokens() const;
  std::size_t token_count() const;
  bool empty() const { return token_count() == 0; }
};

// Splits sentences on line breaks and on '.', '!' or '?' followed by
// whitespace; tokens are maximal runs of ASCII letters and digits, lowercased.
// Stopwords, when removed, are matched against the unstemmed token.
SummaryText tokenize(std::string_view raw, const TextOptions& options = {});

}  // namespace grouge
