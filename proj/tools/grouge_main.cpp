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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "config_file.hpp"
#include "grouge/batch.hpp"
#include "grouge/checksum.hpp"
#include "grouge/csv.hpp"
#include "grouge/dictionary.hpp"
#include "grouge/error.hpp"
#include "grouge/grouge.hpp"
#include "grouge/meta_eval.hpp"
#include "grouge/ppr_engine.hpp"
#include "grouge/semantic_graph.hpp"
#include "grouge/text.hpp"

#ifndef GROUGE_DEFAULT_DATA_DIR
#define GROUGE_DEFAULT_DATA_DIR ""
#endif

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFatal = 1;
constexpr int kExitPartial = 2;
constexpr int kExitUsage = 64;

struct UsageError : grouge::Error {
  using grouge::Error::Error;
};

std::string env_or_empty(const char* name) {
  const char* v = std::getenv(name);
  return v ? std::string(v) : std::string();
}

// Default for a data file: $GROUGE_DATA_DIR/<name> when that file exists.
std::string data_default(const std::string& name) {
  const std::string dir = env_or_empty("GROUGE_DATA_DIR");
  if (dir.empty()) return {};
  const fs::path p = fs::path(dir) / name;
  std::error_code ec;
  return fs::exists(p, ec) ? p.string() : std::string();
}

fs::path state_dir() {
  if (auto d = env_or_empty("GROUGE_STATE_DIR"); !d.empty()) return d;
  if (auto h = env_or_empty("HOME"); !h.empty()) return fs::path(h) / ".cache" / "grouge";
  return {};
}

void remember_last_cache(const fs::path& cache) {
  const fs::path dir = state_dir();
  if (dir.empty()) return;
  std::error_code ec;
  fs::create_directories(dir, ec);
  std::ofstream out(dir / "last-cache");
  if (out) out << fs::absolute(cache, ec).string() << '\n';
}

std::string version_text() {
  std::ostringstream out;
  out << "grouge " << GROUGE_VERSION << '\n';
  std::string cache;
  if (const fs::path dir = state_dir(); !dir.empty()) {
    std::ifstream in(dir / "last-cache");
    std::getline(in, cache);
  }
  std::ifstream in(cache, std::ios::binary);
  if (cache.empty() || !in) {
    out << "last cache: none\n";
    return out.str();
  }
  try {
    const auto info = grouge::PprEngine::read_cache_info(in);
    out << "last cache: " << cache << '\n'
        << "graph checksum: " << grouge::hex64(info.fingerprint.graph_checksum) << '\n'
        << "dict checksum: " << grouge::hex64(info.fingerprint.dict_checksum) << '\n';
  } catch (const grouge::Error& e) {
    out << "last cache: " << cache << " (" << e.what() << ")\n";
  }
  return out.str();
}

void require_file(const std::string& flag, const std::string& path) {
  if (path.empty()) throw UsageError(flag + " is required (or set GROUGE_DATA_DIR)");
  std::error_code ec;
  if (!fs::is_regular_file(path, ec)) throw UsageError(flag + ": no such file: " + path);
}

void require_dir(const std::string& flag, const std::string& path) {
  std::error_code ec;
  if (!fs::is_directory(path, ec)) throw UsageError(flag + ": no such directory: " + path);
}

// Writes to `path` through a temporary file, or to stdout for "-".
template <typename Fn>
void write_output(const std::string& path, Fn&& write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    std::cout.flush();
    return;
  }
  const fs::path tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw grouge::Error("cannot write " + path);
    write(out);
    if (!out.flush()) throw grouge::Error("failed writing " + path);
  }
  fs::rename(tmp, path);
}

// ---------------------------------------------------------------------------
// Shared scoring inputs.

struct ScoreArgs {
  std::string graph = data_default("graph.txt");
  std::string dict = data_default("dict.txt");
  std::string peers;
  std::string models;
  std::string variants = "g1,g2,gsu4";
  double beta = 0.5;
  bool no_stem = false;
  bool remove_stopwords = false;
  std::string stopwords;
  bool no_morphology = false;
  bool no_oov = false;
  double oov_boost = grouge::kDefaultOovBoost;
  double alpha = 0.15;
  int iterations = 30;
  std::size_t truncation = 0;
  double tolerance = 0.0;
  bool performance = false;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  std::string cache_persist;
  std::size_t cache_capacity = grouge::CacheOptions{}.capacity;
  std::size_t cache_memory_mb = grouge::CacheOptions{}.memory_budget >> 20;
};

void add_data_options(CLI::App* cmd, ScoreArgs& a) {
  cmd->add_option("--graph", a.graph, "Relation file (u:<sense> v:<sense> per line)");
  cmd->add_option("--dict", a.dict, "Dictionary file (lemma sense:count ...)");
  cmd->add_option("--alpha", a.alpha, "PPR restart probability")->capture_default_str();
  cmd->add_option("--iterations", a.iterations, "PPR iterations")->capture_default_str();
  cmd->add_option("--ppr-truncation", a.truncation, "Keep only the top K dimensions (0 = all)");
  cmd->add_option("--ppr-tolerance", a.tolerance, "Stop early below this L1 change (0 = never)");
  cmd->add_flag("--performance", a.performance, "Performance preset (truncate vectors to 5000)");
}

void add_score_options(CLI::App* cmd, ScoreArgs& a, bool with_beta) {
  add_data_options(cmd, a);
  cmd->add_option("--peers", a.peers, "Directory of <topic>.<system>.txt peer summaries")->required();
  cmd->add_option("--models", a.models, "Directory of <topic>.<model>.txt model summaries")->required();
  cmd->add_option("--variant", a.variants, "Comma-separated metrics: g1,g2,gsu4,r1,r2,rsu4")
      ->capture_default_str();
  if (with_beta) cmd->add_option("--beta", a.beta, "Weight of the lexical term")->capture_default_str();
  cmd->add_flag("--no-stem", a.no_stem, "Disable Porter stemming");
  cmd->add_flag("--remove-stopwords", a.remove_stopwords, "Drop stopwords before scoring");
  cmd->add_option("--stopwords", a.stopwords, "Stopword list (implies --remove-stopwords)");
  cmd->add_flag("--no-morphology", a.no_morphology, "Skip inflection detachment in lookup");
  cmd->add_flag("--no-oov", a.no_oov, "Do not insert OOV dimensions");
  cmd->add_option("--oov-boost", a.oov_boost, "OOV weight as a multiple of the maximum weight")
      ->capture_default_str();
  cmd->add_option("--jobs", a.jobs, "Worker threads (default: available CPUs)");
  cmd->add_option("--cache-persist", a.cache_persist, "Load and save the PPR cache in this file");
  cmd->add_option("--cache-capacity", a.cache_capacity, "Cached vectors (0 disables the cache)")
      ->capture_default_str();
  cmd->add_option("--cache-memory-mb", a.cache_memory_mb, "Cache memory budget in MiB")
      ->capture_default_str();
}

grouge::PprConfig ppr_config(const ScoreArgs& a) {
  grouge::PprConfig c = a.performance ? grouge::PprConfig::performance_preset() : grouge::PprConfig{};
  c.alpha = a.alpha;
  c.iterations = a.iterations;
  if (a.truncation > 0) c.truncation = a.truncation;
  if (a.tolerance > 0.0) c.tolerance = a.tolerance;
  try {
    c.validate();
  } catch (const grouge::Error& e) {
    throw UsageError(e.what());
  }
  return c;
}

struct LoadedData {
  std::unique_ptr<grouge::SemanticGraph> graph;
  std::unique_ptr<grouge::Dictionary> dict;
  grouge::CacheFingerprint fingerprint;
  std::vector<std::string> warnings;
};

LoadedData load_data(const ScoreArgs& a) {
  require_file("--graph", a.graph);
  require_file("--dict", a.dict);
  LoadedData d;
  {
    std::ifstream in(a.graph);
    if (!in) throw grouge::Error("cannot open " + a.graph);
    try {
      d.graph = std::make_unique<grouge::SemanticGraph>(grouge::SemanticGraph::load(in));
    } catch (const grouge::Error& e) {
      throw grouge::Error(a.graph + ": " + e.what());
    }
  }
  {
    std::ifstream in(a.dict);
    if (!in) throw grouge::Error("cannot open " + a.dict);
    try {
      d.dict = std::make_unique<grouge::Dictionary>(
          grouge::Dictionary::load(in, *d.graph, {}, &d.warnings));
    } catch (const grouge::Error& e) {
      throw grouge::Error(a.dict + ": " + e.what());
    }
  }
  d.fingerprint = {grouge::file_checksum(a.graph), grouge::file_checksum(a.dict)};
  return d;
}

struct ScoringSession {
  LoadedData data;
  grouge::StopwordSet stopwords;
  grouge::BatchOptions options;
  std::unique_ptr<grouge::PprEngine> engine;
  std::unique_ptr<grouge::GrougeScorer> scorer;
  std::vector<std::string> warnings;
};

std::unique_ptr<ScoringSession> open_session(const ScoreArgs& a) {
  require_dir("--peers", a.peers);
  require_dir("--models", a.models);
  if (a.jobs == 0) throw UsageError("--jobs must be >= 1");

  auto s = std::make_unique<ScoringSession>();
  grouge::PprConfig ppr;
  try {
    s->options.metrics = grouge::parse_metric_list(a.variants);
    s->options.config.beta = a.beta;
    s->options.config.oov_enabled = !a.no_oov;
    s->options.config.oov_boost = a.oov_boost;
    s->options.config.validate();
    ppr = ppr_config(a);
  } catch (const grouge::Error& e) {
    throw UsageError(e.what());
  }
  s->options.text.stem = !a.no_stem;
  s->options.jobs = a.jobs;
  if (a.remove_stopwords || !a.stopwords.empty()) {
    std::string path = a.stopwords;
    if (path.empty()) path = data_default("stopwords.txt");
    if (path.empty()) path = (fs::path(GROUGE_DEFAULT_DATA_DIR) / "stopwords.txt").string();
    require_file("--stopwords", path);
    s->stopwords = grouge::load_stopwords(fs::path(path));
    s->options.text.stopwords = &s->stopwords;
  }

  s->data = load_data(a);
  s->warnings = s->data.warnings;
  grouge::CacheOptions cache;
  cache.capacity = a.cache_capacity;
  cache.memory_budget = a.cache_memory_mb << 20;
  s->engine = std::make_unique<grouge::PprEngine>(*s->data.graph, ppr, cache);
  if (!a.cache_persist.empty() && fs::exists(a.cache_persist)) {
    std::ifstream in(a.cache_persist, std::ios::binary);
    try {
      if (!s->engine->load_cache(in, s->data.fingerprint)) {
        s->warnings.push_back("cache " + a.cache_persist +
                              " was built from other data or settings; starting cold");
      }
    } catch (const grouge::Error& e) {
      s->warnings.push_back("cache " + a.cache_persist + " unreadable (" + e.what() + "); starting cold");
    }
  }
  grouge::LexiconOptions lexicon;
  lexicon.morphology = !a.no_morphology;
  s->scorer = std::make_unique<grouge::GrougeScorer>(*s->engine, *s->data.dict, lexicon);
  return s;
}

void save_session_cache(const ScoreArgs& a, const ScoringSession& s) {
  if (a.cache_persist.empty()) return;
  write_output(a.cache_persist, [&](std::ostream& out) { s.engine->save_cache(out, s.data.fingerprint); });
  remember_last_cache(a.cache_persist);
}

void write_provenance(std::ostream& out, const ScoreArgs& a, const ScoringSession& s) {
  out << "# grouge " << GROUGE_VERSION << '\n'
      << "graph = " << a.graph << " (" << grouge::hex64(s.data.fingerprint.graph_checksum) << ")\n"
      << "dict = " << a.dict << " (" << grouge::hex64(s.data.fingerprint.dict_checksum) << ")\n"
      << "peers = " << a.peers << '\n'
      << "models = " << a.models << '\n'
      << "variant = " << a.variants << '\n'
      << "beta = " << grouge::format_number(a.beta) << '\n'
      << "stem = " << (a.no_stem ? "false" : "true") << '\n'
      << "remove-stopwords = " << (s.options.text.stopwords ? "true" : "false") << '\n'
      << "morphology = " << (a.no_morphology ? "false" : "true") << '\n'
      << "oov = " << (a.no_oov ? "false" : "true") << '\n'
      << "alpha = " << grouge::format_number(s.engine->config().alpha) << '\n'
      << "iterations = " << s.engine->config().iterations << '\n'
      << "ppr-truncation = " << s.engine->config().truncation.value_or(0) << '\n';
}

void write_messages(std::ostream& out, const std::vector<std::string>& warnings,
                    const std::vector<std::string>& errors) {
  for (const auto& w : warnings) out << "warning: " << w << '\n';
  for (const auto& e : errors) out << "error: " << e << '\n';
}

// Sidecar "<out>.log" with provenance and every warning and error.
void write_sidecar(const std::string& out_path, const ScoreArgs& a, const ScoringSession& s,
                   const std::vector<std::string>& warnings, const std::vector<std::string>& errors) {
  if (out_path.empty() || out_path == "-") return;
  std::ofstream log(out_path + ".log");
  if (!log) throw grouge::Error("cannot write " + out_path + ".log");
  write_provenance(log, a, s);
  write_messages(log, warnings, errors);
}

void print_debug_senses(const ScoreArgs& a, ScoringSession& s) {
  const auto layout = grouge::scan_corpus(a.peers, a.models);
  auto print = [&](const grouge::SenseAssignment& sa) {
    for (const auto& as : sa.assignments()) {
      std::cerr << as.word.surface << '\t'
                << (as.sense ? s.data.graph->sense_at(*as.sense).str() : std::string("OOV")) << '\t'
                << grouge::format_number(as.support) << '\n';
    }
  };
  for (const auto& [topic, systems] : layout.peers) {
    const auto models = layout.models.find(topic);
    if (models == layout.models.end()) continue;
    for (const auto& [system, peer_file] : systems) {
      grouge::SummaryText peer;
      try {
        peer = grouge::tokenize(grouge::read_text_file(peer_file.path), s.options.text);
      } catch (const grouge::Error&) {
        continue;
      }
      for (const auto& model_file : models->second) {
        grouge::SummaryText model;
        try {
          model = grouge::tokenize(grouge::read_text_file(model_file.path), s.options.text);
        } catch (const grouge::Error&) {
          continue;
        }
        const auto pair = s.scorer->prepare(peer, model, s.options.config);
        std::cerr << "# " << topic << " system " << system << " model " << model_file.id << ": model side\n";
        print(pair.model);
        std::cerr << "# " << topic << " system " << system << " model " << model_file.id << ": peer side\n";
        print(pair.peer);
      }
    }
  }
}

int run_score(const ScoreArgs& a, const std::string& out_path, bool debug_senses) {
  auto s = open_session(a);
  const auto layout = grouge::scan_corpus(a.peers, a.models);
  const auto terms = grouge::compute_batch_terms(layout, *s->scorer, s->options);
  const auto report = terms.report(a.beta);
  write_output(out_path, [&](std::ostream& out) { grouge::write_score_csv(out, report); });

  std::vector<std::string> warnings = s->warnings;
  warnings.insert(warnings.end(), report.warnings.begin(), report.warnings.end());
  write_messages(std::cerr, warnings, report.errors);
  write_sidecar(out_path, a, *s, warnings, report.errors);
  if (debug_senses) print_debug_senses(a, *s);
  save_session_cache(a, *s);
  return report.partial() ? kExitPartial : kExitOk;
}

// ---------------------------------------------------------------------------
// Meta-evaluation.

struct MetaArgs {
  std::string human;
  std::string join = "system";
  std::string baseline;
  double alpha = 0.05;
  std::uint64_t seed = 42;
  std::size_t resamples = 1000;
  double confidence = 0.95;
  std::string kendall = "tau-b";
};

void add_meta_options(CLI::App* cmd, MetaArgs& m, const std::string& alpha_flag) {
  cmd->add_option("--human", m.human, "Judgments CSV: key column(s) then numeric columns")->required();
  cmd->add_option("--join", m.join, "Key columns shared with the scores (system or topic,system)")
      ->capture_default_str();
  cmd->add_option("--baseline", m.baseline, "Metric to test others against (Williams test)");
  cmd->add_option(alpha_flag, m.alpha, "Significance level")->capture_default_str();
  cmd->add_option("--seed", m.seed, "Bootstrap seed")->capture_default_str();
  cmd->add_option("--resamples", m.resamples, "Bootstrap resamples")->capture_default_str();
  cmd->add_option("--confidence", m.confidence, "Confidence level")->capture_default_str();
  cmd->add_option("--kendall", m.kendall, "Kendall variant")
      ->check(CLI::IsMember({"tau-b", "tau-a"}))
      ->capture_default_str();
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, ',')) {
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

grouge::CorrelateOptions correlate_options(const MetaArgs& m) {
  grouge::CorrelateOptions o;
  if (!m.baseline.empty()) o.baseline = m.baseline;
  o.alpha = m.alpha;
  o.bootstrap.seed = m.seed;
  o.bootstrap.resamples = m.resamples;
  o.bootstrap.confidence = m.confidence;
  o.bootstrap.kendall_variant =
      m.kendall == "tau-a" ? grouge::KendallVariant::TauA : grouge::KendallVariant::TauB;
  return o;
}

std::vector<grouge::CorrelationRow> evaluate(const grouge::CsvTable& scores, const grouge::CsvTable& human,
                                             const MetaArgs& m, std::vector<std::string>& warnings) {
  const auto table = grouge::build_judgment_table(scores, human, split_commas(m.join), &warnings);
  return grouge::correlate(table, correlate_options(m), &warnings);
}

int run_meta_eval(const std::string& scores_path, const MetaArgs& m, const std::string& out_path) {
  require_file("--scores", scores_path);
  require_file("--human", m.human);
  const auto scores = grouge::read_csv_file(scores_path);
  const auto human = grouge::read_csv_file(m.human);
  std::vector<std::string> warnings;
  const auto rows = evaluate(scores, human, m, warnings);
  write_output(out_path, [&](std::ostream& out) { grouge::write_correlation_csv(out, rows); });
  write_messages(std::cerr, warnings, {});
  return kExitOk;
}

// ---------------------------------------------------------------------------
// Beta sweep.

std::vector<double> parse_betas(const std::string& list, const std::string& range) {
  std::vector<double> betas;
  if (!list.empty() && !range.empty()) throw UsageError("--betas and --beta-range are exclusive");
  if (!list.empty()) {
    for (const auto& t : split_commas(list)) betas.push_back(grouge::parse_number(t));
  } else {
    const std::string r = range.empty() ? "0:1:0.1" : range;
    const auto parts = [&] {
      std::vector<std::string> p;
      std::string cur;
      std::istringstream in(r);
      while (std::getline(in, cur, ':')) p.push_back(cur);
      return p;
    }();
    if (parts.size() != 3) throw UsageError("--beta-range expects start:stop:step");
    const double lo = grouge::parse_number(parts[0]);
    const double hi = grouge::parse_number(parts[1]);
    const double step = grouge::parse_number(parts[2]);
    if (!(step > 0.0) || hi < lo) throw UsageError("--beta-range needs start <= stop and step > 0");
    const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
    for (std::size_t i = 0; i < count; ++i) {
      // Round to the printed precision so 0.1 * 3 reads as 0.3.
      betas.push_back(grouge::parse_number(grouge::format_number(lo + static_cast<double>(i) * step)));
    }
  }
  for (const double b : betas) {
    if (!(b >= 0.0 && b <= 1.0)) throw UsageError("beta values must lie in [0, 1]");
  }
  return betas;
}

int run_sweep(const ScoreArgs& a, const MetaArgs& m, const std::string& betas_list,
              const std::string& beta_range, const std::string& out_path) {
  const auto betas = parse_betas(betas_list, beta_range);
  require_file("--human", m.human);
  const auto human = grouge::read_csv_file(m.human);
  auto s = open_session(a);
  const auto layout = grouge::scan_corpus(a.peers, a.models);
  const auto terms = grouge::compute_batch_terms(layout, *s->scorer, s->options);

  std::vector<std::string> warnings = s->warnings;
  warnings.insert(warnings.end(), terms.warnings.begin(), terms.warnings.end());
  std::ostringstream body;
  grouge::CsvWriter csv(body);
  bool header = true;
  for (const double beta : betas) {
    // Round-trip through the score CSV so each row equals score + meta-eval.
    std::stringstream report_csv;
    grouge::write_score_csv(report_csv, terms.report(beta));
    const auto scores = grouge::read_csv(report_csv);
    std::vector<std::string> sweep_warnings;
    const auto rows = evaluate(scores, human, m, sweep_warnings);
    if (beta == betas.front()) warnings.insert(warnings.end(), sweep_warnings.begin(), sweep_warnings.end());

    std::stringstream corr;
    grouge::write_correlation_csv(corr, rows);
    const auto table = grouge::read_csv(corr);
    if (header) {
      std::vector<std::string> h{"beta"};
      h.insert(h.end(), table.header.begin(), table.header.end());
      csv.row(h);
      header = false;
    }
    for (const auto& row : table.rows) {
      std::vector<std::string> r{grouge::format_number(beta)};
      r.insert(r.end(), row.begin(), row.end());
      csv.row(r);
    }
  }
  write_output(out_path, [&](std::ostream& out) { out << body.str(); });
  write_messages(std::cerr, warnings, terms.errors);
  write_sidecar(out_path, a, *s, warnings, terms.errors);
  save_session_cache(a, *s);
  return terms.errors.empty() ? kExitOk : kExitPartial;
}

// ---------------------------------------------------------------------------
// Diagnostics.

int run_ppr(const ScoreArgs& a, const std::string& lemma, const std::string& pos_text,
            std::size_t sense_rank, std::size_t top) {
  std::optional<grouge::Pos> pos;
  if (!pos_text.empty()) {
    if (pos_text.size() != 1) throw UsageError("--pos must be one of n, v, a, r");
    pos = grouge::parse_pos(pos_text[0]);
    if (!pos) throw UsageError("--pos must be one of n, v, a, r");
  }
  const grouge::PprConfig config = ppr_config(a);
  auto data = load_data(a);
  write_messages(std::cerr, data.warnings, {});
  const auto senses = data.dict->senses_of(lemma, pos);
  if (senses.empty()) throw grouge::Error("no senses for '" + lemma + "'");
  if (sense_rank < 1 || sense_rank > senses.size()) {
    throw UsageError("--sense must lie in 1.." + std::to_string(senses.size()));
  }
  grouge::PprEngine engine(*data.graph, config, {0, 0});
  const auto vec = engine.for_sense(senses[sense_rank - 1]);
  for (const auto& d : vec->ranked(top)) {
    std::printf("%s\t%.12g\n", data.graph->sense_at(*d.node).str().c_str(), d.weight);
  }
  return kExitOk;
}

int run_cache_stats(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw grouge::Error("cannot open " + path);
  const auto info = grouge::PprEngine::read_cache_info(in);
  if (!info.stats.enabled) {
    std::cout << "disabled\n";
    return kExitOk;
  }
  const auto& st = info.stats;
  const auto lookups = st.hits + st.misses;
  const double warm_ratio =
      lookups == 0 ? 0.0 : static_cast<double>(st.warm_hits) / static_cast<double>(lookups);
  std::cout << "graph checksum\t" << grouge::hex64(info.fingerprint.graph_checksum) << '\n'
            << "dict checksum\t" << grouge::hex64(info.fingerprint.dict_checksum) << '\n'
            << "hits\t" << st.warm_hits << '\n'
            << "misses\t" << st.misses << '\n'
            << "hit ratio\t" << grouge::format_number(warm_ratio) << '\n'
            << "session hits\t" << st.hits - st.warm_hits << '\n'
            << "evictions\t" << st.evictions << '\n'
            << "vectors\t" << st.entries << '\n'
            << "persisted vectors\t" << info.stored_vectors << '\n'
            << "memory bytes\t" << st.bytes << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Summary evaluation with ROUGE and graph-based semantic similarity."};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(0, 1);
  bool show_version = false;
  app.add_flag("--version", show_version, "Print version and the checksums of the last cache");

  ScoreArgs score_args;
  MetaArgs meta_args;
  std::string out_path = "-";
  std::string config_path;
  bool debug_senses = false;

  auto* score = app.add_subcommand("score", "Score peer summaries against model summaries");
  add_score_options(score, score_args, true);
  score->add_flag("--debug-senses", debug_senses, "Print word, assigned sense and support to stderr");
  score->add_option("--out", out_path, "Output CSV (default stdout)");
  score->add_option("--config", config_path, "File of key = value lines");

  std::string scores_path;
  auto* meta = app.add_subcommand("meta-eval", "Correlate scores with human judgments");
  meta->add_option("--scores", scores_path, "Score CSV written by 'score'")->required();
  add_meta_options(meta, meta_args, "--alpha");
  meta->add_option("--out", out_path, "Output CSV (default stdout)");
  meta->add_option("--config", config_path, "File of key = value lines");

  ScoreArgs sweep_args;
  MetaArgs sweep_meta;
  std::string betas_list, beta_range;
  auto* sweep = app.add_subcommand("sweep-beta", "Correlation with human judgments across beta");
  add_score_options(sweep, sweep_args, false);
  add_meta_options(sweep, sweep_meta, "--significance");
  sweep->add_option("--betas", betas_list, "Comma-separated beta values");
  sweep->add_option("--beta-range", beta_range, "start:stop:step (default 0:1:0.1)");
  sweep->add_option("--out", out_path, "Output CSV (default stdout)");
  sweep->add_option("--config", config_path, "File of key = value lines");

  ScoreArgs ppr_args;
  std::string lemma, pos_text;
  std::size_t sense_rank = 1, top = 10;
  auto* ppr = app.add_subcommand("ppr", "Print the top dimensions of a sense's PPR vector");
  add_data_options(ppr, ppr_args);
  ppr->add_option("--lemma", lemma, "Dictionary lemma")->required();
  ppr->add_option("--pos", pos_text, "Part of speech: n, v, a or r");
  ppr->add_option("--sense", sense_rank, "Sense rank (1 = most frequent)")->capture_default_str();
  ppr->add_option("--top", top, "Dimensions to print")->capture_default_str();
  ppr->add_option("--config", config_path, "File of key = value lines");

  std::string cache_path;
  auto* stats = app.add_subcommand("cache-stats", "Report statistics of a persisted PPR cache");
  stats->add_option("--cache", cache_path, "Cache file written with --cache-persist")->required();
  stats->add_option("--config", config_path, "File of key = value lines");

  try {
    std::vector<std::string> args(argv, argv + argc);
    args = grouge::cli::expand_config(app, std::move(args));
    std::vector<std::string> reversed(args.rbegin(), args.rend() - 1);
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (show_version) {
      std::cout << version_text();
      return kExitOk;
    }
    if (*score) return run_score(score_args, out_path, debug_senses);
    if (*meta) return run_meta_eval(scores_path, meta_args, out_path);
    if (*sweep) return run_sweep(sweep_args, sweep_meta, betas_list, beta_range, out_path);
    if (*ppr) return run_ppr(ppr_args, lemma, pos_text, sense_rank, top);
    if (*stats) return run_cache_stats(cache_path);
    std::cerr << app.help();
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFatal;
  }
}
