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
#include <filesystem>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "grouge/grouge.hpp"
#include "grouge/text.hpp"

namespace grouge {

// A summary file named "<topic>.<id>.txt". The topic is the first
// dot-separated field; the id is everything between it and ".txt".
struct SummaryFile {
  std::string topic;
  std::string id;
  std::filesystem::path path;
};

struct CorpusLayout {
  std::map<std::string, std::vector<SummaryFile>> models;                // by topic
  std::map<std::string, std::map<std::string, SummaryFile>> peers;       // topic -> system -> file
  std::set<std::string> systems;
  std::vector<std::string> errors;
  std::vector<std::string> warnings;
};

// Lists models/<topic>.<modelID>.txt and peers/<topic>.<systemID>.txt.
CorpusLayout scan_corpus(const std::filesystem::path& peers_dir,
                         const std::filesystem::path& models_dir);

struct BatchOptions {
  std::vector<Metric> metrics;
  GrougeConfig config;
  TextOptions text;
  unsigned jobs = 1;
};

struct ScoreRow {
  std::string topic;
  std::string system;
  std::string metric;
  double score = 0.0;
  bool missing = false;
};

struct ScoreReport {
  std::vector<ScoreRow> rows;
  std::vector<std::string> errors;    // per-file failures; the batch continued
  std::vector<std::string> warnings;

  bool partial() const { return !errors.empty(); }
};

// Gram terms for every (topic, system, metric) of a corpus, from which the
// report for any beta follows without rescoring.
class BatchTerms {
 public:
  struct Cell {
    std::string topic;
    std::string system;
    bool missing = false;
    std::map<GramVariant, std::vector<GramTerms>> terms;  // one entry per model
  };

  std::vector<Metric> metrics;
  std::vector<Cell> cells;  // sorted by (topic, system)
  std::vector<std::string> errors;
  std::vector<std::string> warnings;

  ScoreReport report(double beta) const;
};

BatchTerms compute_batch_terms(const CorpusLayout& layout, GrougeScorer& scorer,
                               const BatchOptions& options);

ScoreReport score_batch(const std::filesystem::path& peers_dir,
                        const std::filesystem::path& models_dir, GrougeScorer& scorer,
                        const BatchOptions& options);

// Columns: topic,system,variant,score (12 significant digits), with header.
void write_score_csv(std::ostream& out, const ScoreReport& report);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace grouge
