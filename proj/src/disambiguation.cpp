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

#include "grouge/disambiguation.hpp"

#include <algorithm>

namespace grouge {

SenseAssignment::SenseAssignment(std::vector<Assignment> assignments)
    : assignments_(std::move(assignments)) {
  for (std::size_t i = 0; i < assignments_.size(); ++i) {
    by_stem_.emplace(assignments_[i].word.stem, i);
  }
}

const Assignment* SenseAssignment::find(std::string_view stem) const {
  const auto it = by_stem_.find(stem);
  return it == by_stem_.end() ? nullptr : &assignments_[it->second];
}

namespace {

struct Candidate {
  double score;
  std::uint32_t rank;
  std::uint32_t node;
};

// True when `a` should be preferred over `b`.
bool better(const Candidate& a, const Candidate& b) {
  if (a.score != b.score) return a.score > b.score;
  if (a.rank != b.rank) return a.rank < b.rank;
  return a.node < b.node;
}

}  // namespace

SenseAssignment align_disambiguate(std::span<const WordType> item,
                                   std::span<const WordType> context, PprEngine& engine) {
  std::vector<std::uint32_t> context_senses;
  for (const auto& w : context) {
    for (const auto& s : w.senses) context_senses.push_back(s.node);
  }
  std::sort(context_senses.begin(), context_senses.end());
  context_senses.erase(std::unique(context_senses.begin(), context_senses.end()),
                       context_senses.end());

  std::vector<Assignment> out;
  out.reserve(item.size());
  for (const auto& word : item) {
    Assignment a{word, std::nullopt, 0.0};
    if (word.oov()) {
      out.push_back(std::move(a));
      continue;
    }
    std::optional<Candidate> best;
    for (const auto& s : word.senses) {
      double score = 0.0;
      for (const auto c : context_senses) score = std::max(score, engine.sense_similarity(s.node, c));
      const Candidate cand{context_senses.empty() ? 0.0 : score, s.rank, s.node};
      if (!best || better(cand, *best)) best = cand;
    }
    a.sense = best->node;
    a.support = best->score;
    out.push_back(std::move(a));
  }
  return SenseAssignment(std::move(out));
}

std::pair<SenseAssignment, SenseAssignment> disambiguate_pair(std::span<const WordType> model,
                                                              std::span<const WordType> peer,
                                                              PprEngine& engine) {
  // Every sense on one side is compared with every sense on the other.
  std::vector<std::uint32_t> nodes;
  std::size_t sides_with_senses = 0;
  for (const auto side : {model, peer}) {
    const std::size_t before = nodes.size();
    for (const auto& w : side) {
      for (const auto& s : w.senses) nodes.push_back(s.node);
    }
    if (nodes.size() > before) ++sides_with_senses;
  }
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  if (sides_with_senses == 2) engine.prefetch_nodes(nodes);
  return {align_disambiguate(model, peer, engine), align_disambiguate(peer, model, engine)};
}

}  // namespace grouge
