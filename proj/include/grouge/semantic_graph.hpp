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
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "grouge/sense_id.hpp"

namespace grouge {

// Undirected, unweighted sense network in CSR form.
//
// Node indices are dense and assigned in ascending SenseId order, so comparing
// two indices gives the same answer as comparing the SenseIds they denote.
// Immutable after construction.
class SemanticGraph {
 public:
  // Reads UKB-style relation lines ("u:<sense> v:<sense> [other:keys]").
  // Relations are symmetrized and deduplicated; self-loops only register the
  // node. Throws ParseError on malformed lines and Error("no edges loaded") if
  // no relation line was found.
  static SemanticGraph load(std::istream& relations);

  static SemanticGraph from_edges(std::span<const std::pair<SenseId, SenseId>> edges);

  std::size_t node_count() const { return senses_.size(); }
  std::size_t arc_count() const { return cols_.size(); }

  std::optional<std::uint32_t> index_of(const SenseId& sense) const;
  const SenseId& sense_at(std::uint32_t index) const { return senses_[index]; }

  std::span<const std::uint32_t> neighbors(std::uint32_t index) const {
    return {cols_.data() + row_ptr_[index], cols_.data() + row_ptr_[index + 1]};
  }
  std::uint32_t degree(std::uint32_t index) const {
    return row_ptr_[index + 1] - row_ptr_[index];
  }

  std::span<const std::uint32_t> row_ptr() const { return row_ptr_; }
  std::span<const std::uint32_t> cols() const { return cols_; }
  // 1/degree per node, 0 for dangling nodes.
  std::span<const double> inverse_degree() const { return inv_degree_; }
  std::span<const std::uint32_t> dangling() const { return dangling_; }

  // Rows bucketed by degree, in ascending degree and index order; cols holds
  // each row's neighbours back to back. Lets a gather loop run with a fixed
  // trip count per bucket.
  struct DegreeBucket {
    std::uint32_t degree = 0;
    std::vector<std::uint32_t> rows;
    std::vector<std::uint32_t> cols;
  };
  std::span<const DegreeBucket> degree_buckets() const { return buckets_; }

  // Canonical sorted edge list in relation-file syntax. Each undirected edge is
  // written once (u < v); isolated nodes are written as self-loops so that
  // load(write_edges(g)) reproduces g.
  void write_edges(std::ostream& out) const;

  friend bool operator==(const SemanticGraph&, const SemanticGraph&);

 private:
  void build(std::vector<std::pair<SenseId, SenseId>> arcs, std::vector<SenseId> nodes);

  std::vector<SenseId> senses_;
  std::vector<std::uint32_t> row_ptr_{0};
  std::vector<std::uint32_t> cols_;
  std::vector<double> inv_degree_;
  std::vector<std::uint32_t> dangling_;
  std::vector<DegreeBucket> buckets_;
};

}  // namespace grouge
