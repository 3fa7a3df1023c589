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

// Acceptance run: one PASS/FAIL/SKIP line per criterion, exit status 1 if any
// criterion fails.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cases.hpp"
#include "grouge/dictionary.hpp"
#include "grouge/grouge.hpp"
#include "grouge/meta_eval.hpp"
#include "grouge/ppr.hpp"
#include "grouge/ppr_engine.hpp"
#include "grouge/rouge.hpp"
#include "grouge/semantic_graph.hpp"
#include "grouge/similarity.hpp"
#include "grouge/text.hpp"
#include "oracles.hpp"
#include "synthetic.hpp"

namespace fs = std::filesystem;
using namespace grouge;

namespace {

enum class Status { Pass, Fail, Skip };

struct Outcome {
  Status status = Status::Fail;
  std::string detail;
};

Outcome pass_if(bool ok, std::string detail) {
  return {ok ? Status::Pass : Status::Fail, std::move(detail)};
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// ---------------------------------------------------------------------------

Outcome ppr_oracle() {
  std::mt19937_64 rng(20240601);
  double worst = 0.0, worst_sum = 0.0;
  for (std::uint64_t g = 0; g < 100; ++g) {
    const std::size_t n = 2 + rng() % 49;
    const auto rg = testing::random_graph(n, 0.2, 100 + g);
    const auto graph = SemanticGraph::from_edges(rg.edges);
    std::vector<std::uint32_t> seeds;
    const std::size_t k = 1 + rng() % 3;
    for (std::size_t i = 0; i < k; ++i) seeds.push_back(static_cast<std::uint32_t>(rng() % n));
    std::vector<std::size_t> dense_seeds(seeds.begin(), seeds.end());
    std::sort(dense_seeds.begin(), dense_seeds.end());
    dense_seeds.erase(std::unique(dense_seeds.begin(), dense_seeds.end()), dense_seeds.end());

    std::vector<std::vector<double>> expected;
    oracle::dense_ppr(rg.adj, dense_seeds, 0.15, 30, &expected);
    int checked = 0;
    compute_ppr(graph, SeedSet(seeds), {}, [&](int t, std::span<const double> x) {
      const auto& e = expected[static_cast<std::size_t>(t - 1)];
      double sum = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        worst = std::max(worst, std::abs(x[i] - e[i]));
        sum += x[i];
      }
      worst_sum = std::max(worst_sum, std::abs(sum - 1.0));
      ++checked;
    });
    if (checked != 30) return {Status::Fail, "expected 30 iterates"};
  }
  return pass_if(worst <= 1e-12 && worst_sum <= 1e-9,
                 "100 graphs, max |diff| " + sci(worst) + ", max |sum-1| " + sci(worst_sum));
}

Outcome two_node() {
  const std::vector<std::pair<SenseId, SenseId>> edges{
      {testing::node_sense(0), testing::node_sense(1)}};
  const auto graph = SemanticGraph::from_edges(edges);
  // Iterated to the fixed point; at the default 30 iterations the iterate is
  // still 0.4595 * 0.85^30 = 3.5e-3 away from it.
  PprConfig config;
  config.iterations = 1000;
  config.tolerance = 1e-15;
  const auto v = compute_ppr(graph, SeedSet({0}), config);
  const double a = v.weight_of(0), b = v.weight_of(1);
  const auto v30 = compute_ppr(graph, SeedSet({0}), {});
  const bool ok = std::abs(a - 0.540541) <= 1e-6 && std::abs(b - 0.459459) <= 1e-6;
  return pass_if(ok, "fixed point (" + sci(a) + ", " + sci(b) + "); after 30 iterations |A-0.540541| = " +
                         sci(std::abs(v30.weight_of(0) - 0.540541)));
}

Outcome weighted_overlap_suite() {
  const auto v = PprVector::from_entries({{1, 0.5}, {2, 0.3}, {7, 0.2}});
  const auto w = PprVector::from_entries({{3, 0.5}, {4, 0.5}});
  const auto v1 = PprVector::from_entries({{1, 0.6}, {2, 0.4}});
  const auto v2 = PprVector::from_entries({{1, 0.3}, {2, 0.7}});
  bool ok = weighted_overlap(v, v) == 1.0 && weighted_overlap(v, w) == 0.0 &&
            std::abs(weighted_overlap(v1, v2) - 8.0 / 9.0) <= 1e-12;

  std::mt19937_64 rng(31337);
  double worst = 0.0;
  int asymmetric = 0, scale_broken = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::uint32_t universe = 5 + static_cast<std::uint32_t>(rng() % 60);
    const auto a = testing::random_sparse_vector(rng, universe, 40);
    const auto b = testing::random_sparse_vector(rng, universe, 40);
    const double ab = weighted_overlap(a, b);
    asymmetric += ab != weighted_overlap(b, a);
    worst = std::max(worst, std::abs(ab - oracle::weighted_overlap(testing::overlap_map(a),
                                                                   testing::overlap_map(b))));
    std::vector<std::pair<std::uint32_t, double>> scaled;
    for (std::size_t i = 0; i < a.nodes().size(); ++i) {
      scaled.emplace_back(a.nodes()[i], a.weights()[i] * 0.37);
    }
    scale_broken += weighted_overlap(PprVector::from_entries(scaled), b) != ab;
  }
  ok = ok && worst <= 1e-12 && asymmetric == 0 && scale_broken == 0;
  return pass_if(ok, "1000 pairs, max |diff| " + sci(worst) + ", asymmetric " +
                         std::to_string(asymmetric) + ", scale-dependent " +
                         std::to_string(scale_broken));
}

// 4 topics x (2 models + 3 peers) = 20 documents.
struct SmallCorpus {
  testing::World world;
  std::unique_ptr<SemanticGraph> graph;
  std::unique_ptr<Dictionary> dict;  // refers to *graph
};

SmallCorpus small_corpus() {
  testing::WorldSpec spec;
  spec.nodes = 500;
  spec.chords = 500;
  spec.vocabulary = 150;
  spec.topics = 4;
  spec.models_per_topic = 2;
  spec.systems = 3;
  spec.seed = 4;
  auto world = testing::make_world(spec);
  std::istringstream rel(world.relations);
  auto graph = std::make_unique<SemanticGraph>(SemanticGraph::load(rel));
  std::istringstream dict_in(world.dictionary);
  auto dict = std::make_unique<Dictionary>(Dictionary::load(dict_in, *graph));
  return {std::move(world), std::move(graph), std::move(dict)};
}

// Calls fn(peer, models) for every peer of the corpus.
void for_each_peer(const testing::World& world,
                   const std::function<void(const SummaryText&, const std::vector<SummaryText>&)>& fn) {
  for (const auto& p : world.peers) {
    std::vector<SummaryText> models;
    for (const auto& m : world.models) {
      if (m.topic == p.topic) models.push_back(tokenize(m.text));
    }
    fn(tokenize(p.text), models);
  }
}

constexpr GramVariant kVariants[] = {GramVariant::N1, GramVariant::N2, GramVariant::SU4};

GrougeConfig blend(double beta, GramVariant v) {
  GrougeConfig c;
  c.beta = beta;
  c.variant = v;
  return c;
}

Outcome rouge_reduction() {
  auto c = small_corpus();
  PprEngine engine(*c.graph);
  GrougeScorer scorer(engine, *c.dict);
  double worst = 0.0;
  std::size_t rows = 0;
  for_each_peer(c.world, [&](const SummaryText& peer, const std::vector<SummaryText>& models) {
    for (const auto v : kVariants) {
      worst = std::max(worst, std::abs(scorer.score(peer, models, blend(1.0, v)) -
                                       rouge_score(peer, models, v)));
      ++rows;
    }
  });
  const std::vector<SummaryText> model{tokenize("the cat sat")};
  const double example = rouge_score(tokenize("the cat ran"), model, GramVariant::N1);
  return pass_if(worst <= 1e-12 && example == 2.0 / 3.0 && rows == 36,
                 std::to_string(c.world.models.size() + c.world.peers.size()) + " documents, " +
                     std::to_string(rows) + " rows, max |diff| " + sci(worst) +
                     "; 'the cat ran' vs 'the cat sat' = " + sci(example));
}

Outcome affine_in_beta() {
  auto c = small_corpus();
  PprEngine engine(*c.graph);
  GrougeScorer scorer(engine, *c.dict);
  double worst = 0.0;
  for_each_peer(c.world, [&](const SummaryText& peer, const std::vector<SummaryText>& models) {
    for (const auto v : kVariants) {
      const double s0 = scorer.score(peer, models, blend(0.0, v));
      const double s5 = scorer.score(peer, models, blend(0.5, v));
      const double s1 = scorer.score(peer, models, blend(1.0, v));
      worst = std::max(worst, std::abs(s5 - 0.5 * (s0 + s1)));
    }
  });
  return pass_if(worst <= 1e-12, "max |s(0.5) - (s(0) + s(1))/2| " + sci(worst));
}

Outcome paraphrase() {
  const char* dir = std::getenv("GROUGE_WORDNET_DIR");
  if (!dir || !*dir) {
    return {Status::Skip, "set GROUGE_WORDNET_DIR to a directory with graph.txt and dict.txt "
                          "converted from WordNet 3.0"};
  }
  std::ifstream rel(fs::path(dir) / "graph.txt"), dict_in(fs::path(dir) / "dict.txt");
  if (!rel || !dict_in) return {Status::Fail, std::string("cannot read graph.txt/dict.txt in ") + dir};
  const auto graph = SemanticGraph::load(rel);
  const auto dict = Dictionary::load(dict_in, graph);
  PprEngine engine(graph);
  GrougeScorer scorer(engine, dict);

  const std::vector<SummaryText> model{tokenize("They strolled around the city.")};
  const auto peer = tokenize("They took a walk to explore the town.");
  const double lexical = rouge_score(peer, model, GramVariant::N1);
  const double blended = scorer.score(peer, model, blend(0.5, GramVariant::N1));

  const auto fire = dict.senses_of("fire", Pos::Verb);
  const auto terminate = dict.senses_of("terminate", Pos::Verb);
  if (fire.size() < 4 || terminate.size() < 4) {
    return {Status::Fail, "dictionary lacks fire#v or terminate#v sense 4"};
  }
  const double sim = weighted_overlap(*engine.for_sense(fire[3]), *engine.for_sense(terminate[3]));
  return pass_if(blended > lexical && std::abs(sim - 1.0) <= 1e-12,
                 "GRouge-1 " + sci(blended) + " vs ROUGE-1 " + sci(lexical) +
                     "; Sim_sem(fire_v4, terminate_v4) = " + sci(sim));
}

Outcome disambiguation() {
  const int agree = testing::disambiguation_agreement(100, 2718);
  return pass_if(agree == 100, std::to_string(agree) + "/100 agree with exhaustive search");
}

Outcome correlation_suite() {
  std::mt19937_64 rng(8);
  int mismatches = 0, checked = 0;
  while (checked < 200) {
    const std::size_t n = 3 + rng() % 48;
    const unsigned range = 2 + static_cast<unsigned>(rng() % 15);
    std::vector<double> x(n), y(n);
    for (auto& v : x) v = static_cast<double>(rng() % range);
    for (auto& v : y) v = static_cast<double>(rng() % range);
    if (std::all_of(x.begin(), x.end(), [&](double v) { return v == x[0]; }) ||
        std::all_of(y.begin(), y.end(), [&](double v) { return v == y[0]; })) {
      continue;
    }
    mismatches += kendall(x, y) != oracle::kendall_tau_b(x, y);
    mismatches += spearman(x, y) != oracle::spearman(x, y);
    ++checked;
  }
  const double tau = kendall(std::vector<double>{1, 2, 3}, std::vector<double>{3, 1, 2});
  const auto zero = williams_test(0.6, 0.6, 0.5, 30);
  const auto w = williams_test(0.9, 0.8, 0.7, 51);
  const auto swapped = williams_test(0.8, 0.9, 0.7, 51);
  const double oracle_t = static_cast<double>(oracle::williams_t(0.9L, 0.8L, 0.7L, 51.0L));
  // Upper tail from a 50-digit evaluation of the t distribution.
  const double oracle_p = 0.01302800559745666832;
  const bool ok = mismatches == 0 && std::abs(tau + 1.0 / 3.0) <= 1e-15 && zero.t == 0.0 &&
                  swapped.t == -w.t && std::abs(w.t - oracle_t) <= 1e-9 &&
                  std::abs(w.p - oracle_p) <= 1e-9;
  return pass_if(ok, "200 vectors, " + std::to_string(mismatches) + " mismatches; tau " + sci(tau) +
                         "; williams t " + sci(w.t) + " p " + sci(w.p));
}

Outcome bootstrap_determinism() {
  std::mt19937_64 rng(51);
  std::normal_distribution<double> d(0.0, 1.0);
  JudgmentTable table;
  std::vector<double> human, metric, other;
  for (int i = 0; i < 51; ++i) {
    table.keys.push_back("sys" + std::to_string(i));
    const double h = d(rng);
    human.push_back(h);
    metric.push_back(h + 0.5 * d(rng));
    other.push_back(h + 1.0 * d(rng));
  }
  table.human.push_back({"pyramid", human});
  table.automatic.push_back({"g2", metric});
  table.automatic.push_back({"r2", other});
  CorrelateOptions options;
  options.baseline = "r2";
  options.bootstrap.seed = 42;

  std::ostringstream first, second;
  const auto rows = correlate(table, options);
  write_correlation_csv(first, rows);
  write_correlation_csv(second, correlate(table, options));
  bool contained = true;
  for (const auto& r : rows) {
    contained = contained && r.pearson_ci.lo <= r.pearson && r.pearson <= r.pearson_ci.hi &&
                r.spearman_ci.lo <= r.spearman && r.spearman <= r.spearman_ci.hi &&
                r.kendall_ci.lo <= r.kendall && r.kendall <= r.kendall_ci.hi;
  }
  const bool identical = first.str() == second.str();
  return pass_if(identical && contained,
                 std::string(identical ? "byte-identical" : "outputs differ") + ", point estimates " +
                     (contained ? "inside" : "outside") + " intervals; g2 pearson " +
                     sci(rows[0].pearson) + " in [" + sci(rows[0].pearson_ci.lo) + ", " +
                     sci(rows[0].pearson_ci.hi) + "]");
}

int run_cli(const std::string& args) {
  const int status = std::system(("'" GROUGE_CLI_PATH "' " + args).c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome end_to_end() {
  testing::WorldSpec spec;
  spec.nodes = 10000;
  spec.chords = 10000;
  spec.vocabulary = 3000;
  spec.topics = 10;
  spec.topic_vocabulary = 150;
  spec.models_per_topic = 4;
  spec.systems = 5;
  spec.sentences = 5;
  spec.min_sentence = 12;
  spec.max_sentence = 22;
  spec.seed = 10;
  const auto dir = testing::temp_dir("acceptance-e2e");
  testing::write_world(testing::make_world(spec), dir);
  const std::string common = "score --graph '" + (dir / "graph.txt").string() + "' --dict '" +
                             (dir / "dict.txt").string() + "' --peers '" +
                             (dir / "peers").string() + "' --models '" +
                             (dir / "models").string() + "' --variant g1,g2,gsu4";
  const auto parallel = dir / "jobs4.csv", serial = dir / "jobs1.csv";

  const auto start = std::chrono::steady_clock::now();
  const int code4 = run_cli(common + " --jobs 4 --out '" + parallel.string() + "'");
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const int code1 = run_cli(common + " --jobs 1 --out '" + serial.string() + "'");
  if (code4 != 0 || code1 != 0) {
    return {Status::Fail, "CLI exited with " + std::to_string(code4) + "/" + std::to_string(code1)};
  }
  const auto a = testing::read_file(parallel), b = testing::read_file(serial);
  const auto rows = static_cast<std::size_t>(std::count(a.begin(), a.end(), '\n')) - 1;
  fs::remove_all(dir);
  return pass_if(a == b && rows == 150 && seconds < 60.0,
                 "50 peers x 4 models x 3 variants (" + std::to_string(rows) + " rows), --jobs 4 in " +
                     sci(seconds) + " s; reports " + (a == b ? "byte-identical" : "differ"));
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;  // 0 = no separate limit
  Outcome (*run)();
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "PPR matches dense power iteration", 10.0, ppr_oracle},
      {2, "two-node fixed point", 1.0, two_node},
      {3, "weighted overlap", 5.0, weighted_overlap_suite},
      {4, "beta = 1 reduces to ROUGE", 0.0, rouge_reduction},
      {5, "scores affine in beta", 0.0, affine_in_beta},
      {6, "paraphrase direction on WordNet", 0.0, paraphrase},
      {7, "disambiguation matches brute force", 0.0, disambiguation},
      {8, "correlation suite", 0.0, correlation_suite},
      {9, "bootstrap determinism", 0.0, bootstrap_determinism},
      {10, "end-to-end determinism and throughput", 0.0, end_to_end},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {Status::Fail, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.status == Status::Pass && c.limit_seconds > 0.0 && seconds >= c.limit_seconds) {
      out = {Status::Fail, out.detail + "; over the " + sci(c.limit_seconds) + " s limit"};
    }
    const char* tag = out.status == Status::Pass ? "PASS" : out.status == Status::Skip ? "SKIP" : "FAIL";
    failures += out.status == Status::Fail;
    std::printf("%s  %2d  %-40s %7.2fs  %s\n", tag, c.id, c.name, seconds, out.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
