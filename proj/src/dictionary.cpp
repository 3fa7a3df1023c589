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

#include "grouge/dictionary.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <sstream>

#include "grouge/error.hpp"

namespace grouge {
namespace {

std::string lowercase(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

Dictionary Dictionary::load(std::istream& in, const SemanticGraph& graph,
                            const DictionaryOptions& options,
                            std::vector<std::string>* warnings) {
  Dictionary dict(graph);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string lemma_field;
    if (!(fields >> lemma_field) || lemma_field.front() == '#') continue;

    std::optional<Pos> lemma_pos;
    std::string lemma = lemma_field;
    if (const auto hash = lemma_field.rfind('#'); hash != std::string::npos) {
      lemma_pos = lemma_field.size() == hash + 2 ? parse_pos(lemma_field[hash + 1]) : std::nullopt;
      if (!lemma_pos) throw ParseError(line_no, "bad pos suffix in '" + lemma_field + "'");
      lemma = lemma_field.substr(0, hash);
    }
    lemma = lowercase(lemma);

    std::string token;
    while (fields >> token) {
      const auto colon = token.find(':');
      const auto id = SenseId::parse(std::string_view(token).substr(0, colon));
      if (!id) throw ParseError(line_no, "malformed sense '" + token + "'");
      if (lemma_pos && id->pos() != *lemma_pos) {
        throw ParseError(line_no, "sense " + id->str() + " does not match pos of " + lemma_field);
      }
      const auto node = graph.index_of(*id);
      if (!node) {
        const std::string msg = "line " + std::to_string(line_no) + ": sense " + id->str() +
                                " of '" + lemma + "' is not in the graph";
        if (options.unknown_sense == UnknownSensePolicy::Error) throw Error(msg);
        if (warnings) warnings->push_back(msg + ", dropped");
        continue;
      }
      auto& list = dict.entries_[{lemma, id->pos()}];
      if (std::find(list.begin(), list.end(), *node) == list.end()) list.push_back(*node);
    }
  }
  return dict;
}

std::vector<RankedSense> Dictionary::ranked_senses(std::string_view lemma,
                                                   std::optional<Pos> pos) const {
  const std::string key = lowercase(lemma);
  std::vector<RankedSense> out;
  for (const Pos p : kAllPos) {
    if (pos && *pos != p) continue;
    const auto it = entries_.find(std::pair<std::string, Pos>{key, p});
    if (it == entries_.end()) continue;
    std::uint32_t rank = 0;
    for (const auto node : it->second) out.push_back({node, ++rank});
  }
  return out;
}

std::vector<SenseId> Dictionary::senses_of(std::string_view lemma, std::optional<Pos> pos) const {
  std::vector<SenseId> out;
  for (const auto& rs : ranked_senses(lemma, pos)) out.push_back(graph_->sense_at(rs.node));
  return out;
}

bool Dictionary::contains(std::string_view lemma) const {
  return !ranked_senses(lemma).empty();
}

}  // namespace grouge
