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
#include <string>
#include <vector>

#include "grouge/csv.hpp"

namespace grouge {

// All coefficients need equal lengths >= 3 and throw Error("zero variance")
// for a constant input.
double pearson(std::span<const double> x, std::span<const double> y);

// Pearson of average (fractional) ranks.
double spearman(std::span<const double> x, std::span<const double> y);

enum class KendallVariant { TauB, TauA };

// O(n log n) tie-aware count (Knight's algorithm); tau-b by default.
double kendall(std::span<const double> x, std::span<const double> y,
               KendallVariant variant = KendallVariant::TauB);

// 1-based ranks, ties receiving the mean of the ranks they span.
std::vector<double> average_ranks(std::span<const double> values);

enum class Coefficient { Pearson, Spearman, Kendall };

double correlation(Coefficient c, std::span<const double> x, std::span<const double> y,
                   KendallVariant kendall_variant = KendallVariant::TauB);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct BootstrapOptions {
  std::size_t resamples = 1000;
  double confidence = 0.95;
  std::uint64_t seed = 42;
  KendallVariant kendall_variant = KendallVariant::TauB;
};

// Percentile interval over row resamples (with replacement). Resample b draws
// from its own generator stream derived from (seed, b, retry), so results are
// reproducible. Resamples with a constant column are redrawn; more than
// 10 x resamples redraws in total is an error.
Interval bootstrap_ci(std::span<const double> x, std::span<const double> y, Coefficient c,
                      const BootstrapOptions& options = {});

// Linear interpolation between order statistics of sorted `values`.
double percentile(std::span<const double> sorted_values, double q);

struct WilliamsResult {
  double r12 = 0.0;  // new metric vs human
  double r13 = 0.0;  // baseline vs human
  double r23 = 0.0;  // baseline vs new metric
  std::size_t n = 0;
  double t = 0.0;
  double p = 0.0;  // one-sided, P(T > t) with n - 3 degrees of freedom
};

// Williams test for the difference of two dependent correlations sharing a
// variable.
WilliamsResult williams_test(double r12, double r13, double r23, std::size_t n);

struct NamedColumn {
  std::string name;
  std::vector<double> values;
};

// One row per system (or per join key); human and automatic columns aligned.
struct JudgmentTable {
  std::vector<std::string> keys;
  std::vector<NamedColumn> human;
  std::vector<NamedColumn> automatic;
};

// Averages `scores` (topic,system,variant,score) over all fields other than
// `join_keys`, then inner-joins with `human`, whose first join_keys.size()
// columns are the keys and remaining columns numeric. Dropped rows are
// reported in `warnings`.
JudgmentTable build_judgment_table(const CsvTable& scores, const CsvTable& human,
                                   const std::vector<std::string>& join_keys,
                                   std::vector<std::string>* warnings = nullptr);

struct CorrelationRow {
  std::string auto_metric;
  std::string human_metric;
  std::size_t n = 0;
  double pearson = 0.0, spearman = 0.0, kendall = 0.0;
  Interval pearson_ci, spearman_ci, kendall_ci;
  std::optional<WilliamsResult> williams;  // against the baseline column
  bool significant = false;
};

struct CorrelateOptions {
  std::optional<std::string> baseline;
  double alpha = 0.05;
  BootstrapOptions bootstrap;
};

// All three coefficients with bootstrap intervals for every (automatic, human)
// column pair; Williams p-values (on Pearson r) against the baseline column.
// Needs at least 4 rows.
std::vector<CorrelationRow> correlate(const JudgmentTable& table, const CorrelateOptions& options,
                                      std::vector<std::string>* warnings = nullptr);

void write_correlation_csv(std::ostream& out, const std::vector<CorrelationRow>& rows);

}  // namespace grouge
