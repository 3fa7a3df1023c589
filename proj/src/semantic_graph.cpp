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

#include "grouge/semantic_graph.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <string>
#include <string_view>

#include "grouge/error.hpp"

namespace grouge {
namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

}  // namespace

SemanticGraph SemanticGraph::load(std::istream& relations) {
  std::vector<std::pair<SenseId, SenseId>> arcs;
  std::vector<SenseId> nodes;
  std::string line;
  std::size_t line_no = 0;
  bool any_relation = false;
  while (std::getline(relations, line)) {
    ++line_no;
    std::string_view rest(line);
    while (!rest.empty() && is_space(rest.front())) rest.remove_prefix(1);
    if (rest.empty() || rest.front() == '#') continue;

    std::optional<SenseId> u, v;
    while (!rest.empty()) {
      std::size_t end = 0;
      while (end < rest.size() && !is_space(rest[end])) ++end;
      const std::string_view token = rest.substr(0, end);
      rest.remove_prefix(end);
      while (!rest.empty() && is_space(rest.front())) rest.remove_prefix(1);

      const auto colon = token.find(':');
      if (colon == std::string_view::npos) {
        throw ParseError(line_no, "expected key:value, got '" + std::string(token) + "'");
      }
      const std::string_view key = token.substr(0, colon);
      const std::string_view value = token.substr(colon + 1);
      if (key != "u" && key != "v") continue;
      const auto id = SenseId::parse(value);
      if (!id) throw ParseError(line_no, "malformed sense id '" + std::string(value) + "'");
      (key == "u" ? u : v) = *id;
    }
    if (!u || !v) throw ParseError(line_no, "relation needs both u: and v:");
    any_relation = true;
    nodes.push_back(*u);
    nodes.push_back(*v);
    if (*u == *v) continue;
    arcs.emplace_back(*u, *v);
    arcs.emplace_back(*v, *u);
  }
  if (!any_relation) throw Error("no edges loaded");
  SemanticGraph g;
  g.build(std::move(arcs), std::move(nodes));
  return g;
}

SemanticGraph SemanticGraph::from_edges(std::span<const std::pair<SenseId, SenseId>> edges) {
  std::vector<std::pair<SenseId, SenseId>> arcs;
  std::vector<SenseId> nodes;
  for (const auto& [u, v] : edges) {
    nodes.push_back(u);
    nodes.push_back(v);
    if (u == v) continue;
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  if (nodes.empty()) throw Error("no edges loaded");
  SemanticGraph g;
  g.build(std::move(arcs), std::move(nodes));
  return g;
}

void SemanticGraph::build(std::vector<std::pair<SenseId, SenseId>> arcs,
                          std::vector<SenseId> nodes) {
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  if (nodes.size() >= std::numeric_limits<std::uint32_t>::max()) throw Error("graph too large");
  senses_ = std::move(nodes);

  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  if (arcs.size() >= std::numeric_limits<std::uint32_t>::max()) throw Error("graph too large");

  const std::size_t n = senses_.size();
  row_ptr_.assign(n + 1, 0);
  cols_.clear();
  cols_.reserve(arcs.size());
  // arcs are sorted by source, and sources are visited in index order.
  std::uint32_t src = 0;
  for (const auto& [u, v] : arcs) {
    const auto ui = static_cast<std::uint32_t>(*index_of(u));
    while (src < ui) row_ptr_[++src] = static_cast<std::uint32_t>(cols_.size());
    cols_.push_back(*index_of(v));
  }
  while (src < n) row_ptr_[++src] = static_cast<std::uint32_t>(cols_.size());

  inv_degree_.assign(n, 0.0);
  dangling_.clear();
  for (std::uint32_t i = 0; i < n; ++i) {
    const auto d = degree(i);
    if (d == 0) {
      dangling_.push_back(i);
    } else {
      inv_degree_[i] = 1.0 / static_cast<double>(d);
    }
  }

  std::map<std::uint32_t, DegreeBucket> by_degree;
  for (std::uint32_t i = 0; i < n; ++i) {
    auto& b = by_degree[degree(i)];
    b.rows.push_back(i);
    const auto nb = neighbors(i);
    b.cols.insert(b.cols.end(), nb.begin(), nb.end());
  }
  buckets_.clear();
  for (auto& [d, b] : by_degree) {
    b.degree = d;
    buckets_.push_back(std::move(b));
  }
}

std::optional<std::uint32_t> SemanticGraph::index_of(const SenseId& sense) const {
  const auto it = std::lower_bound(senses_.begin(), senses_.end(), sense);
  if (it == senses_.end() || *it != sense) return std::nullopt;
  return static_cast<std::uint32_t>(it - senses_.begin());
}

void SemanticGraph::write_edges(std::ostream& out) const {
  for (std::uint32_t i = 0; i < node_count(); ++i) {
    const auto nb = neighbors(i);
    if (nb.empty()) {
      out << "u:" << senses_[i].str() << " v:" << senses_[i].str() << '\n';
      continue;
    }
    for (const auto j : nb) {
      if (j > i) out << "u:" << senses_[i].str() << " v:" << senses_[j].str() << '\n';
    }
  }
}

bool operator==(const SemanticGraph& a, const SemanticGraph& b) {
  return a.senses_ == b.senses_ && a.row_ptr_ == b.row_ptr_ && a.cols_ == b.cols_;
}

}  // namespace grouge
