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

#include "grouge/text.hpp"

#include <fstream>
#include <istream>

#include "grouge/error.hpp"
#include "grouge/porter_stemmer.hpp"

namespace grouge {
namespace {

bool is_alnum(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

bool is_whitespace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

char lower(char c) { return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c; }

}  // namespace

StopwordSet load_stopwords(std::istream& in) {
  StopwordSet words;
  std::string line;
  while (std::getline(in, line)) {
    std::string word;
    for (const char c : line) {
      if (!is_whitespace(c)) word.push_back(lower(c));
    }
    if (word.empty() || word.front() == '#') continue;
    words.insert(std::move(word));
  }
  return words;
}

StopwordSet load_stopwords(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open stopword list " + path.string());
  return load_stopwords(in);
}

std::vector<std::string> SummaryText::tokens() const {
  std::vector<std::string> out;
  for (const auto& s : sentences) out.insert(out.end(), s.begin(), s.end());
  return out;
}

std::size_t SummaryText::token_count() const {
  std::size_t n = 0;
  for (const auto& s : sentences) n += s.size();
  return n;
}

SummaryText tokenize(std::string_view raw, const TextOptions& options) {
  SummaryText text;
  text.raw = std::string(raw);
  std::vector<std::string> sentence, surface;

  auto close_sentence = [&] {
    if (!sentence.empty()) {
      text.sentences.push_back(std::move(sentence));
      text.surfaces.push_back(std::move(surface));
    }
    sentence.clear();
    surface.clear();
  };

  std::size_t i = 0;
  while (i < raw.size()) {
    const char c = raw[i];
    if (is_alnum(c)) {
      std::string token;
      while (i < raw.size() && is_alnum(raw[i])) token.push_back(lower(raw[i++]));
      if (options.stopwords && options.stopwords->contains(token)) continue;
      sentence.push_back(options.stem ? porter_stem(token) : token);
      surface.push_back(std::move(token));
      continue;
    }
    if (c == '\n') {
      close_sentence();
    } else if ((c == '.' || c == '!' || c == '?') && i + 1 < raw.size() && is_whitespace(raw[i + 1])) {
      close_sentence();
    }
    ++i;
  }
  close_sentence();
  return text;
}

}  // namespace grouge
