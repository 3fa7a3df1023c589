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

#include "grouge/ppr_engine.hpp"

#include <cstring>
#include <istream>
#include <ostream>
#include <set>

#include "grouge/error.hpp"
#include "grouge/similarity.hpp"

namespace grouge {
namespace {

constexpr char kMagic[8] = {'G', 'R', 'P', 'P', 'R', 'C', '1', '\n'};
constexpr std::size_t kMemoShardLimit = std::size_t{1} << 21;

template <typename T>
void put(std::ostream& out, const T& value) {
  out.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <typename T>
T get(std::istream& in) {
  T value{};
  if (!in.read(reinterpret_cast<char*>(&value), sizeof(T))) throw Error("truncated PPR cache file");
  return value;
}

PersistedCacheInfo read_header(std::istream& in) {
  char magic[8];
  if (!in.read(magic, sizeof(magic)) || std::memcmp(magic, kMagic, sizeof(magic)) != 0) {
    throw Error("not a PPR cache file");
  }
  PersistedCacheInfo info;
  info.fingerprint.graph_checksum = get<std::uint64_t>(in);
  info.fingerprint.dict_checksum = get<std::uint64_t>(in);
  info.config.alpha = get<double>(in);
  info.config.iterations = get<std::int32_t>(in);
  if (const auto k = get<std::uint64_t>(in)) info.config.truncation = k;
  if (const auto tol = get<double>(in); tol > 0.0) info.config.tolerance = tol;
  info.stats.enabled = get<std::uint8_t>(in) != 0;
  info.stats.hits = get<std::uint64_t>(in);
  info.stats.warm_hits = get<std::uint64_t>(in);
  info.stats.misses = get<std::uint64_t>(in);
  info.stats.evictions = get<std::uint64_t>(in);
  info.stats.entries = get<std::uint64_t>(in);
  info.stats.bytes = get<std::uint64_t>(in);
  info.stored_vectors = get<std::uint64_t>(in);
  return info;
}

}  // namespace

std::size_t PprEngine::KeyHash::operator()(const std::vector<std::uint32_t>& key) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (const auto v : key) {
    h ^= v;
    h *= 0x100000001b3ull;
  }
  return static_cast<std::size_t>(h);
}

PprEngine::PprEngine(const SemanticGraph& graph, PprConfig config, CacheOptions cache)
    : graph_(graph), config_(config), options_(cache) {
  config_.validate();
}

PprHandle PprEngine::for_node(std::uint32_t node) {
  if (node >= graph_.node_count()) throw Error("node " + std::to_string(node) + " is not in the graph");
  return lookup_or_compute(SeedSet({node}));
}

PprHandle PprEngine::for_sense(const SenseId& sense) {
  const auto node = graph_.index_of(sense);
  if (!node) throw Error("sense " + sense.str() + " is not in the graph");
  return lookup_or_compute(SeedSet({*node}));
}

PprHandle PprEngine::for_seeds(const SeedSet& seeds) { return lookup_or_compute(seeds); }

PprHandle PprEngine::for_senses(std::span<const SenseId> senses) {
  return lookup_or_compute(SeedSet(graph_, senses));
}

PprHandle PprEngine::lookup_or_compute(const SeedSet& seeds) {
  std::vector<std::uint32_t> key(seeds.nodes().begin(), seeds.nodes().end());
  if (options_.capacity == 0) {
    {
      std::lock_guard lock(mutex_);
      ++misses_;
    }
    return std::make_shared<const PprVector>(compute_ppr(graph_, seeds, config_));
  }
  {
    std::lock_guard lock(mutex_);
    if (const auto it = index_.find(key); it != index_.end()) {
      if (it->second->pending) {
        it->second->pending = false;
        ++misses_;
      } else {
        ++hits_;
        if (it->second->warm) ++warm_hits_;
      }
      lru_.splice(lru_.begin(), lru_, it->second);
      return it->second->vector;
    }
    ++misses_;
  }
  auto computed = std::make_shared<const PprVector>(compute_ppr(graph_, seeds, config_));
  std::lock_guard lock(mutex_);
  if (const auto it = index_.find(key); it != index_.end()) return it->second->vector;
  insert_locked(std::move(key), computed, false);
  return computed;
}

void PprEngine::prefetch(std::span<const SeedSet> seeds) {
  if (options_.capacity == 0) return;
  std::vector<SeedSet> missing;
  std::set<std::vector<std::uint32_t>> queued;
  {
    std::lock_guard lock(mutex_);
    for (const auto& s : seeds) {
      std::vector<std::uint32_t> key(s.nodes().begin(), s.nodes().end());
      if (index_.contains(key) || !queued.insert(std::move(key)).second) continue;
      missing.push_back(s);
    }
  }
  // Prefetching more than the cache holds would evict its own results.
  if (missing.size() < 2 || missing.size() > options_.capacity) return;
  auto vectors = compute_ppr_batch(graph_, missing, config_);
  std::lock_guard lock(mutex_);
  for (std::size_t i = 0; i < missing.size(); ++i) {
    std::vector<std::uint32_t> key(missing[i].nodes().begin(), missing[i].nodes().end());
    if (index_.contains(key)) continue;
    insert_locked(std::move(key), std::make_shared<const PprVector>(std::move(vectors[i])), false, true);
  }
}

void PprEngine::prefetch_nodes(std::span<const std::uint32_t> nodes) {
  std::vector<SeedSet> seeds;
  seeds.reserve(nodes.size());
  for (const auto node : nodes) {
    if (node >= graph_.node_count()) throw Error("node " + std::to_string(node) + " is not in the graph");
    seeds.emplace_back(std::vector<std::uint32_t>{node});
  }
  prefetch(seeds);
}

void PprEngine::insert_locked(std::vector<std::uint32_t> key, PprHandle vector, bool warm,
                              bool pending) {
  const std::size_t bytes = vector->memory_bytes() + key.size() * sizeof(std::uint32_t);
  lru_.push_front({key, std::move(vector), bytes, warm, pending});
  index_.emplace(std::move(key), lru_.begin());
  bytes_ += bytes;
  while (lru_.size() > 1 &&
         (lru_.size() > options_.capacity || bytes_ > options_.memory_budget)) {
    auto& victim = lru_.back();
    bytes_ -= victim.bytes;
    index_.erase(victim.key);
    lru_.pop_back();
    ++evictions_;
  }
}

double PprEngine::sense_similarity(std::uint32_t a, std::uint32_t b) {
  if (a > b) std::swap(a, b);
  const std::uint64_t key = (std::uint64_t{a} << 32) | b;
  auto& shard = memo_[(a * 31u + b) % memo_.size()];
  {
    std::lock_guard lock(shard.mutex);
    if (const auto it = shard.values.find(key); it != shard.values.end()) return it->second;
  }
  const double value = a == b ? 1.0 : weighted_overlap(*for_node(a), *for_node(b));
  std::lock_guard lock(shard.mutex);
  if (shard.values.size() >= kMemoShardLimit) shard.values.clear();
  shard.values.emplace(key, value);
  return value;
}

CacheStats PprEngine::stats() const {
  std::lock_guard lock(mutex_);
  CacheStats s;
  s.enabled = options_.capacity > 0;
  s.hits = hits_;
  s.warm_hits = warm_hits_;
  s.misses = misses_;
  s.evictions = evictions_;
  s.entries = lru_.size();
  s.bytes = bytes_;
  return s;
}

void PprEngine::save_cache(std::ostream& out, const CacheFingerprint& fingerprint) const {
  const CacheStats s = stats();
  std::lock_guard lock(mutex_);
  std::vector<const Entry*> singles;
  for (auto it = lru_.rbegin(); it != lru_.rend(); ++it) {
    if (it->key.size() == 1) singles.push_back(&*it);
  }
  out.write(kMagic, sizeof(kMagic));
  put(out, fingerprint.graph_checksum);
  put(out, fingerprint.dict_checksum);
  put(out, config_.alpha);
  put(out, static_cast<std::int32_t>(config_.iterations));
  put(out, static_cast<std::uint64_t>(config_.truncation.value_or(0)));
  put(out, config_.tolerance.value_or(0.0));
  put(out, static_cast<std::uint8_t>(s.enabled ? 1 : 0));
  put(out, s.hits);
  put(out, s.warm_hits);
  put(out, s.misses);
  put(out, s.evictions);
  put(out, static_cast<std::uint64_t>(s.entries));
  put(out, static_cast<std::uint64_t>(s.bytes));
  put(out, static_cast<std::uint64_t>(singles.size()));
  for (const Entry* e : singles) {
    put(out, e->key.front());
    const auto nodes = e->vector->nodes();
    const auto weights = e->vector->weights();
    put(out, static_cast<std::uint64_t>(nodes.size()));
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      put(out, nodes[i]);
      put(out, weights[i]);
    }
  }
  if (!out) throw Error("failed to write PPR cache");
}

PersistedCacheInfo PprEngine::read_cache_info(std::istream& in) { return read_header(in); }

bool PprEngine::load_cache(std::istream& in, const CacheFingerprint& fingerprint) {
  const PersistedCacheInfo info = read_header(in);
  if (info.fingerprint.graph_checksum != fingerprint.graph_checksum ||
      info.fingerprint.dict_checksum != fingerprint.dict_checksum || !(info.config == config_)) {
    return false;
  }
  if (options_.capacity == 0) return true;
  for (std::size_t v = 0; v < info.stored_vectors; ++v) {
    const auto seed = get<std::uint32_t>(in);
    const auto n = get<std::uint64_t>(in);
    if (seed >= graph_.node_count()) throw Error("PPR cache references an unknown node");
    std::vector<std::pair<std::uint32_t, double>> entries;
    entries.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
      const auto node = get<std::uint32_t>(in);
      const auto weight = get<double>(in);
      if (node >= graph_.node_count()) throw Error("PPR cache references an unknown node");
      entries.emplace_back(node, weight);
    }
    auto vec = std::make_shared<const PprVector>(PprVector::from_entries(std::move(entries)));
    std::lock_guard lock(mutex_);
    if (!index_.contains({seed})) insert_locked({seed}, std::move(vec), true);
  }
  return true;
}

}  // namespace grouge
