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

#include "grouge/meta_eval.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <set>

#include "grouge/error.hpp"
#include "grouge/student_t.hpp"

namespace grouge {
namespace {

void check_pair(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw Error("correlation inputs differ in length");
  if (x.size() < 3) throw Error("correlation needs at least 3 observations");
}

double clamp_unit(double r) { return std::clamp(r, -1.0, 1.0); }

// Number of inversions; sorts `v` in place (stable merge sort).
std::uint64_t count_swaps(std::vector<double>& v, std::vector<double>& buf, std::size_t lo,
                          std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::uint64_t swaps = count_swaps(v, buf, lo, mid) + count_swaps(v, buf, mid, hi);
  std::size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (v[j] < v[i]) {
      swaps += mid - i;
      buf[k++] = v[j++];
    } else {
      buf[k++] = v[i++];
    }
  }
  while (i < mid) buf[k++] = v[i++];
  while (j < hi) buf[k++] = v[j++];
  std::copy(buf.begin() + static_cast<std::ptrdiff_t>(lo), buf.begin() + static_cast<std::ptrdiff_t>(hi),
            v.begin() + static_cast<std::ptrdiff_t>(lo));
  return swaps;
}

// Sum over runs of equal adjacent values of t(t-1)/2.
template <typename Eq>
std::uint64_t tied_pairs(std::size_t n, Eq equal) {
  std::uint64_t total = 0;
  std::size_t run = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    if (i < n && equal(i - 1, i)) {
      ++run;
    } else {
      total += static_cast<std::uint64_t>(run) * (run - 1) / 2;
      run = 1;
    }
  }
  return total;
}

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t threshold = (0 - n) % n;
  while (true) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % n;
  }
}

}  // namespace

double pearson(std::span<const double> x, std::span<const double> y) {
  check_pair(x, y);
  const auto n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0.0 || syy == 0.0) throw Error("zero variance");
  return clamp_unit(sxy / std::sqrt(sxx * syy));
}

std::vector<double> average_ranks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i + 1;
    while (j < order.size() && values[order[j]] == values[order[i]]) ++j;
    // Positions i..j-1 share the mean of ranks i+1..j.
    const double rank = static_cast<double>(i + 1 + j) / 2.0;
    for (std::size_t k = i; k < j; ++k) ranks[order[k]] = rank;
    i = j;
  }
  return ranks;
}

double spearman(std::span<const double> x, std::span<const double> y) {
  check_pair(x, y);
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  return pearson(rx, ry);
}

double kendall(std::span<const double> x, std::span<const double> y, KendallVariant variant) {
  check_pair(x, y);
  const std::size_t n = x.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return x[a] != x[b] ? x[a] < x[b] : y[a] < y[b];
  });
  const std::uint64_t n0 = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  const std::uint64_t n1 =
      tied_pairs(n, [&](std::size_t a, std::size_t b) { return x[order[a]] == x[order[b]]; });
  const std::uint64_t n3 = tied_pairs(n, [&](std::size_t a, std::size_t b) {
    return x[order[a]] == x[order[b]] && y[order[a]] == y[order[b]];
  });
  std::vector<double> ys(n), buf(n);
  for (std::size_t i = 0; i < n; ++i) ys[i] = y[order[i]];
  const std::uint64_t swaps = count_swaps(ys, buf, 0, n);
  const std::uint64_t n2 = tied_pairs(n, [&](std::size_t a, std::size_t b) { return ys[a] == ys[b]; });

  if (n1 == n0 || n2 == n0) throw Error("zero variance");
  const auto c_minus_d = static_cast<std::int64_t>(n0 - n1 - n2 + n3) - 2 * static_cast<std::int64_t>(swaps);
  if (variant == KendallVariant::TauA) {
    return static_cast<double>(c_minus_d) / static_cast<double>(n0);
  }
  return clamp_unit(static_cast<double>(c_minus_d) /
                    std::sqrt(static_cast<double>(n0 - n1) * static_cast<double>(n0 - n2)));
}

double correlation(Coefficient c, std::span<const double> x, std::span<const double> y,
                   KendallVariant kendall_variant) {
  switch (c) {
    case Coefficient::Pearson: return pearson(x, y);
    case Coefficient::Spearman: return spearman(x, y);
    case Coefficient::Kendall: return kendall(x, y, kendall_variant);
  }
  throw Error("unknown coefficient");
}

double percentile(std::span<const double> sorted_values, double q) {
  if (sorted_values.empty()) throw Error("percentile of an empty sample");
  const double h = (static_cast<double>(sorted_values.size()) - 1.0) * q;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const auto hi = static_cast<std::size_t>(std::ceil(h));
  return sorted_values[lo] + (h - static_cast<double>(lo)) * (sorted_values[hi] - sorted_values[lo]);
}

Interval bootstrap_ci(std::span<const double> x, std::span<const double> y, Coefficient c,
                      const BootstrapOptions& options) {
  check_pair(x, y);
  if (x.size() < 4) throw Error("bootstrap needs at least 4 rows");
  if (options.resamples == 0) throw Error("bootstrap needs at least one resample");
  if (!(options.confidence > 0.0 && options.confidence < 1.0)) {
    throw Error("confidence must lie in (0, 1)");
  }
  const std::size_t n = x.size();
  const std::size_t max_redraws = 10 * options.resamples;
  std::size_t redraws = 0;
  std::vector<double> stats;
  stats.reserve(options.resamples);
  std::vector<double> rx(n), ry(n);
  for (std::size_t b = 0; b < options.resamples; ++b) {
    for (std::uint32_t retry = 0;; ++retry) {
      std::seed_seq seq{static_cast<std::uint32_t>(options.seed),
                        static_cast<std::uint32_t>(options.seed >> 32),
                        static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32), retry};
      std::mt19937_64 rng(seq);
      for (std::size_t i = 0; i < n; ++i) {
        const auto k = bounded(rng, n);
        rx[i] = x[k];
        ry[i] = y[k];
      }
      try {
        stats.push_back(correlation(c, rx, ry, options.kendall_variant));
        break;
      } catch (const Error&) {
        if (++redraws > max_redraws) throw Error("bootstrap: too many degenerate resamples");
      }
    }
  }
  std::sort(stats.begin(), stats.end());
  const double tail = (1.0 - options.confidence) / 2.0;
  return {percentile(stats, tail), percentile(stats, 1.0 - tail)};
}

WilliamsResult williams_test(double r12, double r13, double r23, std::size_t n) {
  if (n < 4) throw Error("Williams test needs n >= 4");
  for (const double r : {r12, r13, r23}) {
    if (!(std::abs(r) < 1.0)) throw Error("Williams test needs correlations in (-1, 1)");
  }
  const auto nn = static_cast<double>(n);
  const double k = 1.0 - r12 * r12 - r13 * r13 - r23 * r23 + 2.0 * r12 * r13 * r23;
  const double rbar = (r12 + r13) / 2.0;
  const double denom_sq = 2.0 * k * (nn - 1.0) / (nn - 3.0) + rbar * rbar * std::pow(1.0 - r23, 3);
  if (!(denom_sq > 0.0)) throw Error("inconsistent correlation matrix");
  WilliamsResult w{r12, r13, r23, n, 0.0, 0.5};
  w.t = (r12 - r13) * std::sqrt((nn - 1.0) * (1.0 + r23)) / std::sqrt(denom_sq);
  w.p = student_t_upper_tail(w.t, nn - 3.0);
  return w;
}

JudgmentTable build_judgment_table(const CsvTable& scores, const CsvTable& human,
                                   const std::vector<std::string>& join_keys,
                                   std::vector<std::string>* warnings) {
  if (join_keys.empty()) throw Error("no join keys");
  for (const auto& key : join_keys) {
    if (key != "topic" && key != "system") throw Error("join key must be topic or system, got " + key);
  }
  const std::size_t metric_col = scores.column("variant");
  const std::size_t score_col = scores.column("score");
  std::vector<std::size_t> key_cols;
  for (const auto& key : join_keys) key_cols.push_back(scores.column(key));

  auto key_of = [&](const std::vector<std::string>& row, std::span<const std::size_t> cols) {
    std::string key;
    for (const auto c : cols) {
      if (!key.empty()) key += '/';
      key += row[c];
    }
    return key;
  };

  // metric -> key -> (sum, count)
  std::vector<std::string> metric_order;
  std::map<std::string, std::map<std::string, std::pair<double, std::size_t>>> sums;
  for (const auto& row : scores.rows) {
    const auto& metric = row[metric_col];
    if (!sums.contains(metric)) metric_order.push_back(metric);
    auto& cell = sums[metric][key_of(row, key_cols)];
    cell.first += parse_number(row[score_col]);
    ++cell.second;
  }

  if (human.header.size() <= join_keys.size()) throw Error("judgment table has no human columns");
  std::vector<std::size_t> human_keys(join_keys.size());
  std::iota(human_keys.begin(), human_keys.end(), std::size_t{0});

  JudgmentTable table;
  for (std::size_t c = join_keys.size(); c < human.header.size(); ++c) {
    table.human.push_back({human.header[c], {}});
  }
  for (const auto& m : metric_order) table.automatic.push_back({m, {}});

  std::set<std::string> seen;
  for (const auto& row : human.rows) {
    const std::string key = key_of(row, human_keys);
    if (!seen.insert(key).second) throw Error("duplicate judgment row for " + key);
    std::vector<double> values;
    bool complete = true;
    for (std::size_t c = join_keys.size(); c < row.size(); ++c) {
      if (row[c].empty()) {
        complete = false;
        break;
      }
      values.push_back(parse_number(row[c]));
    }
    std::vector<double> autos;
    for (const auto& m : metric_order) {
      const auto it = sums[m].find(key);
      if (it == sums[m].end()) {
        complete = false;
        break;
      }
      autos.push_back(it->second.first / static_cast<double>(it->second.second));
    }
    if (!complete) {
      if (warnings) warnings->push_back("dropping " + key + ": missing cells");
      continue;
    }
    table.keys.push_back(key);
    for (std::size_t c = 0; c < values.size(); ++c) table.human[c].values.push_back(values[c]);
    for (std::size_t m = 0; m < autos.size(); ++m) table.automatic[m].values.push_back(autos[m]);
  }
  if (warnings) {
    std::set<std::string> unmatched;
    for (const auto& [metric, cells] : sums) {
      for (const auto& [key, _] : cells) {
        if (!seen.contains(key)) unmatched.insert(key);
      }
    }
    for (const auto& key : unmatched) warnings->push_back("no human judgments for " + key + ", ignored");
  }
  return table;
}

std::vector<CorrelationRow> correlate(const JudgmentTable& table, const CorrelateOptions& options,
                                      std::vector<std::string>* warnings) {
  if (table.keys.size() < 4) throw Error("correlation needs at least 4 rows, got " +
                                         std::to_string(table.keys.size()));
  const NamedColumn* baseline = nullptr;
  if (options.baseline) {
    for (const auto& col : table.automatic) {
      if (col.name == *options.baseline) baseline = &col;
    }
    if (!baseline) throw Error("baseline metric '" + *options.baseline + "' not in scores");
  }
  std::vector<CorrelationRow> rows;
  for (const auto& a : table.automatic) {
    for (const auto& h : table.human) {
      CorrelationRow r;
      r.auto_metric = a.name;
      r.human_metric = h.name;
      r.n = table.keys.size();
      r.pearson = pearson(a.values, h.values);
      r.spearman = spearman(a.values, h.values);
      r.kendall = kendall(a.values, h.values, options.bootstrap.kendall_variant);
      r.pearson_ci = bootstrap_ci(a.values, h.values, Coefficient::Pearson, options.bootstrap);
      r.spearman_ci = bootstrap_ci(a.values, h.values, Coefficient::Spearman, options.bootstrap);
      r.kendall_ci = bootstrap_ci(a.values, h.values, Coefficient::Kendall, options.bootstrap);
      if (baseline && baseline != &a) {
        try {
          r.williams = williams_test(r.pearson, pearson(baseline->values, h.values),
                                     pearson(baseline->values, a.values), r.n);
          r.significant = r.williams->p < options.alpha;
        } catch (const Error& e) {
          if (warnings) {
            warnings->push_back("Williams test " + a.name + " vs " + baseline->name + " on " +
                                h.name + ": " + e.what());
          }
        }
      }
      rows.push_back(std::move(r));
    }
  }
  return rows;
}

void write_correlation_csv(std::ostream& out, const std::vector<CorrelationRow>& rows) {
  CsvWriter csv(out);
  csv.row({"auto_metric", "human_metric", "n", "pearson", "pearson_ci_lo", "pearson_ci_hi",
           "spearman", "spearman_ci_lo", "spearman_ci_hi", "kendall", "kendall_ci_lo",
           "kendall_ci_hi", "williams_t", "williams_p", "significant"});
  for (const auto& r : rows) {
    csv.row(std::vector<std::string>{
        r.auto_metric, r.human_metric, std::to_string(r.n), format_number(r.pearson),
        format_number(r.pearson_ci.lo), format_number(r.pearson_ci.hi), format_number(r.spearman),
        format_number(r.spearman_ci.lo), format_number(r.spearman_ci.hi), format_number(r.kendall),
        format_number(r.kendall_ci.lo), format_number(r.kendall_ci.hi),
        r.williams ? format_number(r.williams->t) : "", r.williams ? format_number(r.williams->p) : "",
        r.williams ? (r.significant ? "yes" : "no") : ""});
  }
}

}  // namespace grouge
