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

#include <array>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <list>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "grouge/ppr.hpp"

namespace grouge {

using PprHandle = std::shared_ptr<const PprVector>;

struct CacheOptions {
  std::size_t capacity = 200000;            // vectors; 0 disables the cache
  std::size_t memory_budget = std::size_t{1} << 30;  // bytes
};

struct CacheStats {
  bool enabled = true;
  std::uint64_t hits = 0;       // all lookups served from the cache
  std::uint64_t warm_hits = 0;  // subset of hits served by vectors loaded from disk
  std::uint64_t misses = 0;
  std::uint64_t evictions = 0;
  std::size_t entries = 0;
  std::size_t bytes = 0;
};

// Identifies the data a persisted cache was computed from.
struct CacheFingerprint {
  std::uint64_t graph_checksum = 0;
  std::uint64_t dict_checksum = 0;
};

// Header of a persisted cache file, readable without loading the vectors.
struct PersistedCacheInfo {
  CacheFingerprint fingerprint;
  PprConfig config;
  CacheStats stats;  // statistics of the run that wrote the file
  std::size_t stored_vectors = 0;
};

// Serves PPR vectors for senses and seed sets from a thread-safe LRU cache
// keyed by the canonical seed list. Concurrent callers may compute the same
// vector twice; both results are identical and only one is kept.
class PprEngine {
 public:
  PprEngine(const SemanticGraph& graph, PprConfig config = {}, CacheOptions cache = {});

  const SemanticGraph& graph() const { return graph_; }
  const PprConfig& config() const { return config_; }

  PprHandle for_node(std::uint32_t node);
  PprHandle for_sense(const SenseId& sense);
  PprHandle for_seeds(const SeedSet& seeds);
  PprHandle for_senses(std::span<const SenseId> senses);

  // Computes the uncached vectors among `seeds` in lane-wide batches. The
  // first later lookup of a prefetched vector counts as the miss it replaces.
  void prefetch(std::span<const SeedSet> seeds);
  void prefetch_nodes(std::span<const std::uint32_t> nodes);

  // Memoized weighted overlap of two single-sense vectors.
  double sense_similarity(std::uint32_t a, std::uint32_t b);

  CacheStats stats() const;

  // Only single-sense vectors are persisted; they are the ones reused across runs.
  void save_cache(std::ostream& out, const CacheFingerprint& fingerprint) const;
  // Returns false, loading nothing, when the file was written for other data
  // or another PPR configuration. Throws on a corrupt file.
  bool load_cache(std::istream& in, const CacheFingerprint& fingerprint);
  static PersistedCacheInfo read_cache_info(std::istream& in);

 private:
  struct Entry {
    std::vector<std::uint32_t> key;
    PprHandle vector;
    std::size_t bytes = 0;
    bool warm = false;
    bool pending = false;  // prefetched and not yet looked up
  };
  struct KeyHash {
    std::size_t operator()(const std::vector<std::uint32_t>& key) const noexcept;
  };
  struct MemoShard {
    std::mutex mutex;
    std::unordered_map<std::uint64_t, double> values;
  };

  PprHandle lookup_or_compute(const SeedSet& seeds);
  void insert_locked(std::vector<std::uint32_t> key, PprHandle vector, bool warm,
                     bool pending = false);

  const SemanticGraph& graph_;
  PprConfig config_;
  CacheOptions options_;

  mutable std::mutex mutex_;
  std::list<Entry> lru_;
  std::unordered_map<std::vector<std::uint32_t>, std::list<Entry>::iterator, KeyHash> index_;
  std::size_t bytes_ = 0;
  std::uint64_t hits_ = 0, warm_hits_ = 0, misses_ = 0, evictions_ = 0;

  std::array<MemoShard, 16> memo_;
};

}  // namespace grouge
