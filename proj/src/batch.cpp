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

#include "grouge/batch.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <optional>
#include <sstream>
#include <thread>

#include "grouge/csv.hpp"
#include "grouge/error.hpp"

namespace grouge {
namespace fs = std::filesystem;

std::string read_text_file(const fs::path& path) {
  std::error_code ec;
  if (!fs::is_regular_file(path, ec)) throw Error("cannot read " + path.string() + ": not a regular file");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error("failed reading " + path.string());
  return ss.str();
}

namespace {

std::optional<SummaryFile> parse_name(const fs::path& path) {
  const std::string name = path.filename().string();
  if (!name.ends_with(".txt")) return std::nullopt;
  const std::string base = name.substr(0, name.size() - 4);
  const auto dot = base.find('.');
  if (dot == std::string::npos || dot == 0 || dot + 1 == base.size()) return std::nullopt;
  return SummaryFile{base.substr(0, dot), base.substr(dot + 1), path};
}

std::vector<fs::path> sorted_entries(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw Error(dir.string() + " is not a directory");
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(dir)) out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

CorpusLayout scan_corpus(const fs::path& peers_dir, const fs::path& models_dir) {
  CorpusLayout layout;
  for (const auto& p : sorted_entries(models_dir)) {
    if (auto f = parse_name(p)) {
      layout.models[f->topic].push_back(std::move(*f));
    } else {
      layout.warnings.push_back("ignoring " + p.string() + ": name is not <topic>.<id>.txt");
    }
  }
  for (const auto& p : sorted_entries(peers_dir)) {
    auto f = parse_name(p);
    if (!f) {
      layout.warnings.push_back("ignoring " + p.string() + ": name is not <topic>.<id>.txt");
      continue;
    }
    layout.systems.insert(f->id);
    layout.peers[f->topic].emplace(f->id, std::move(*f));
  }
  for (const auto& [topic, systems] : layout.peers) {
    if (!layout.models.contains(topic)) {
      layout.warnings.push_back("topic " + topic + " has peers but no model summaries, skipped");
    }
  }
  return layout;
}

ScoreReport BatchTerms::report(double beta) const {
  ScoreReport r;
  r.errors = errors;
  r.warnings = warnings;
  for (const auto& cell : cells) {
    for (const auto& metric : metrics) {
      ScoreRow row{cell.topic, cell.system, metric.name(), 0.0, cell.missing};
      if (!cell.missing) {
        const double b = metric.semantic ? beta : 1.0;
        double numerator = 0.0;
        std::size_t total = 0;
        for (const auto& t : cell.terms.at(metric.gram)) {
          numerator += t.numerator(b);
          total += t.total();
        }
        row.score = total == 0 ? 0.0 : numerator / static_cast<double>(total);
      }
      r.rows.push_back(std::move(row));
    }
  }
  return r;
}

BatchTerms compute_batch_terms(const CorpusLayout& layout, GrougeScorer& scorer,
                               const BatchOptions& options) {
  options.config.validate();
  if (options.metrics.empty()) throw Error("no metrics requested");
  BatchTerms result;
  result.metrics = options.metrics;
  result.errors = layout.errors;
  result.warnings = layout.warnings;

  std::map<GramVariant, bool> variants;  // gram variant -> needs semantic terms
  for (const auto& m : options.metrics) variants[m.gram] = variants[m.gram] || m.semantic;
  const bool any_semantic =
      std::any_of(variants.begin(), variants.end(), [](const auto& v) { return v.second; });

  // Model texts, tokenized once.
  std::map<std::string, std::vector<SummaryText>> model_texts;
  for (const auto& [topic, files] : layout.models) {
    auto& texts = model_texts[topic];
    for (const auto& f : files) {
      try {
        texts.push_back(tokenize(read_text_file(f.path), options.text));
      } catch (const Error& e) {
        result.errors.push_back(e.what());
      }
    }
    if (texts.empty()) {
      result.warnings.push_back("topic " + topic + " has no readable model summaries, skipped");
      model_texts.erase(topic);
    }
  }

  for (const auto& [topic, texts] : model_texts) {
    for (const auto& system : layout.systems) {
      result.cells.push_back({topic, system, false, {}});
    }
  }

  std::vector<std::string> cell_errors(result.cells.size());
  std::vector<std::string> cell_warnings(result.cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < result.cells.size(); i = next++) {
      auto& cell = result.cells[i];
      const auto topic_peers = layout.peers.find(cell.topic);
      const SummaryFile* file = nullptr;
      if (topic_peers != layout.peers.end()) {
        const auto it = topic_peers->second.find(cell.system);
        if (it != topic_peers->second.end()) file = &it->second;
      }
      if (!file) {
        cell.missing = true;
        cell_warnings[i] = "topic " + cell.topic + ": no summary from system " + cell.system + ", scored 0";
        continue;
      }
      try {
        const SummaryText peer = tokenize(read_text_file(file->path), options.text);
        for (const auto& model : model_texts.at(cell.topic)) {
          std::optional<PreparedPair> prepared;
          if (any_semantic) prepared = scorer.prepare(peer, model, options.config);
          for (const auto& [variant, semantic] : variants) {
            cell.terms[variant].push_back(scorer.pair_terms(
                peer, model, semantic ? &*prepared : nullptr, variant, options.config));
          }
        }
      } catch (const std::exception& e) {
        cell.missing = true;
        cell.terms.clear();
        cell_errors[i] = e.what();
      }
    }
  };

  const unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  for (std::size_t i = 0; i < result.cells.size(); ++i) {
    if (!cell_errors[i].empty()) result.errors.push_back(cell_errors[i]);
    if (!cell_warnings[i].empty()) result.warnings.push_back(cell_warnings[i]);
  }
  return result;
}

ScoreReport score_batch(const fs::path& peers_dir, const fs::path& models_dir,
                        GrougeScorer& scorer, const BatchOptions& options) {
  const CorpusLayout layout = scan_corpus(peers_dir, models_dir);
  return compute_batch_terms(layout, scorer, options).report(options.config.beta);
}

void write_score_csv(std::ostream& out, const ScoreReport& report) {
  CsvWriter csv(out);
  csv.row({"topic", "system", "variant", "score"});
  for (const auto& r : report.rows) csv.row({r.topic, r.system, r.metric, format_number(r.score)});
}

}  // namespace grouge
