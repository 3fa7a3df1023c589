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

#include <boost/math/distributions/students_t.hpp>
#include <cmath>
#include <random>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "grouge/error.hpp"
#include "grouge/meta_eval.hpp"
#include "grouge/student_t.hpp"
#include "oracles.hpp"

using namespace grouge;

namespace {

std::vector<double> random_ints(std::size_t n, int range, std::mt19937_64& rng) {
  std::vector<double> v(n);
  for (auto& x : v) x = static_cast<double>(rng() % static_cast<unsigned>(range));
  return v;
}

bool constant(const std::vector<double>& v) {
  for (const double x : v) {
    if (x != v.front()) return false;
  }
  return true;
}

// Rows with y = x + noise, so the correlation is strong but not perfect.
void correlated(std::size_t n, double noise, std::uint64_t seed, std::vector<double>& x,
                std::vector<double>& y) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> d(0.0, 1.0);
  x.resize(n);
  y.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = d(rng);
    y[i] = x[i] + noise * d(rng);
  }
}

CsvTable parse(const std::string& text) {
  std::istringstream in(text);
  return read_csv(in);
}

}  // namespace

TEST_SUITE("meta_eval") {
  TEST_CASE("pearson examples") {
    const std::vector<double> x{1, 2, 3, 5, 8};
    std::vector<double> neg;
    for (const double v : x) neg.push_back(-v);
    CHECK(pearson(x, x) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(pearson(x, neg) == doctest::Approx(-1.0).epsilon(1e-15));
    // 50-digit reference value.
    const std::vector<double> a{1, 2, 3}, b{2, 4, 7};
    CHECK(std::abs(pearson(a, b) - 0.9933992677987828549) <= 1e-12);
  }

  TEST_CASE("spearman and kendall examples") {
    const std::vector<double> x{1, 2, 3}, y{3, 1, 2}, rev{3, 2, 1}, tie{1, 1, 2};
    CHECK(spearman(x, y) == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(spearman(x, rev) == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(kendall(x, y) == doctest::Approx(-1.0 / 3.0).epsilon(1e-15));
    CHECK(kendall(x, x) == 1.0);
    CHECK(kendall(x, tie) == doctest::Approx(2.0 / std::sqrt(6.0)).epsilon(1e-15));
    CHECK(kendall(x, tie, KendallVariant::TauA) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));

    std::vector<double> cubed;
    for (const double v : x) cubed.push_back(std::exp(v) + v * v * v);
    CHECK(spearman(x, cubed) == 1.0);
  }

  TEST_CASE("average ranks share ties") {
    const std::vector<double> v{10, 20, 10, 30, 20, 10};
    const auto r = average_ranks(v);
    CHECK(r == std::vector<double>{2, 4.5, 2, 6, 4.5, 2});
  }

  TEST_CASE("preconditions") {
    const std::vector<double> c{1, 1, 1, 1}, x{1, 2, 3, 4}, short_x{1, 2};
    for (const auto coef : {Coefficient::Pearson, Coefficient::Spearman, Coefficient::Kendall}) {
      CHECK_THROWS_WITH_AS(correlation(coef, c, x), "zero variance", Error);
      CHECK_THROWS_WITH_AS(correlation(coef, x, c), "zero variance", Error);
      CHECK_THROWS_AS(correlation(coef, short_x, short_x), Error);
      CHECK_THROWS_AS(correlation(coef, x, std::vector<double>{1, 2, 3}), Error);
    }
  }

  TEST_CASE("kendall and spearman match the pairwise and rank oracles exactly") {
    std::mt19937_64 rng(2024);
    int checked = 0;
    while (checked < 200) {
      const std::size_t n = 3 + rng() % 48;
      const int range = 2 + static_cast<int>(rng() % 20);
      const auto x = random_ints(n, range, rng);
      const auto y = random_ints(n, range, rng);
      if (constant(x) || constant(y)) continue;
      CHECK(kendall(x, y) == oracle::kendall_tau_b(x, y));
      CHECK(spearman(x, y) == oracle::spearman(x, y));
      CHECK(average_ranks(x) == oracle::mid_ranks(x));
      ++checked;
    }
  }

  TEST_CASE("invariance under affine and monotone transforms") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<double> x, y;
      correlated(5 + rng() % 40, 0.7, rng(), x, y);
      std::vector<double> affine, monotone;
      for (const double v : x) {
        affine.push_back(3.5 * v + 2.0);
        monotone.push_back(std::exp(v) + v);
      }
      CHECK(std::abs(pearson(affine, y) - pearson(x, y)) <= 1e-12);
      CHECK(spearman(monotone, y) == spearman(x, y));
      CHECK(kendall(monotone, y) == kendall(x, y));
      CHECK(kendall(monotone, y, KendallVariant::TauA) == kendall(x, y, KendallVariant::TauA));
    }
  }

  TEST_CASE("student t tail agrees with Boost.Math") {
    for (const double dof : {1.0, 2.0, 3.0, 7.0, 10.0, 48.0, 200.0}) {
      const boost::math::students_t dist(dof);
      for (const double t : {-6.0, -2.5, -1.0, -0.1, 0.0, 0.3, 1.0, 1.96, 3.7, 12.0}) {
        const double expected = boost::math::cdf(boost::math::complement(dist, t));
        CHECK(std::abs(student_t_upper_tail(t, dof) - expected) <= 1e-10);
      }
    }
  }

  TEST_CASE("student t tail against 50-digit references") {
    struct Case {
      double t, dof, p;
    };
    for (const auto& c : {Case{0.5, 1, 0.35241638234956672582}, Case{1.5, 3, 0.11529193262241152614},
                          Case{2.0, 10, 0.036694017385370182809},
                          Case{-1.2, 7, 0.86541403158639676911},
                          Case{3.7, 48, 0.00027737141945057545924},
                          Case{10.0, 2, 0.0049262285116628454234}}) {
      CHECK(std::abs(student_t_upper_tail(c.t, c.dof) - c.p) <= 1e-12);
    }
  }

  TEST_CASE("williams test") {
    const auto zero = williams_test(0.7, 0.7, 0.4, 30);
    CHECK(zero.t == 0.0);
    CHECK(zero.p == 0.5);

    const auto a = williams_test(0.9, 0.8, 0.7, 51);
    const auto b = williams_test(0.8, 0.9, 0.7, 51);
    CHECK(a.t == -b.t);
    CHECK(std::abs(a.p + b.p - 1.0) <= 1e-12);

    struct Case {
      double r12, r13, r23;
      std::size_t n;
      double t, p;
    };
    for (const auto& c :
         {Case{0.9, 0.8, 0.7, 51, 2.2964751280029317069, 0.01302800559745666832},
          Case{0.6, 0.55, 0.3, 20, 0.23594353818026116393, 0.40814781328954916103},
          Case{0.5, 0.7, 0.4, 8, -0.58594333890962192063, 0.70831805099562397676}}) {
      const auto w = williams_test(c.r12, c.r13, c.r23, c.n);
      CHECK(std::abs(w.t - c.t) <= 1e-9);
      CHECK(std::abs(w.p - c.p) <= 1e-9);
      CHECK(std::abs(w.t - static_cast<double>(oracle::williams_t(c.r12, c.r13, c.r23,
                                                                  static_cast<long double>(c.n)))) <=
            1e-12);
      CHECK(w.n == c.n);
    }

    CHECK_THROWS_AS(williams_test(0.9, 0.8, 0.7, 3), Error);
    CHECK_THROWS_AS(williams_test(1.0, 0.8, 0.7, 20), Error);
    CHECK_THROWS_AS(williams_test(0.9, -1.0, 0.7, 20), Error);
    CHECK_THROWS_AS(williams_test(0.9, 0.8, 1.2, 20), Error);
  }

  TEST_CASE("percentile interpolates order statistics") {
    const std::vector<double> v{1, 2, 3, 4, 5};
    CHECK(percentile(v, 0.0) == 1.0);
    CHECK(percentile(v, 1.0) == 5.0);
    CHECK(percentile(v, 0.5) == 3.0);
    CHECK(percentile(v, 0.1) == doctest::Approx(1.4).epsilon(1e-15));
    CHECK(percentile(v, 0.975) == doctest::Approx(4.9).epsilon(1e-15));
  }

  TEST_CASE("bootstrap interval") {
    std::vector<double> x, y;
    correlated(30, 0.45, 17, x, y);
    for (const auto coef : {Coefficient::Pearson, Coefficient::Spearman, Coefficient::Kendall}) {
      const auto first = bootstrap_ci(x, y, coef);
      const auto second = bootstrap_ci(x, y, coef);
      CHECK(first == second);
      const double point = correlation(coef, x, y);
      CHECK(first.lo <= point);
      CHECK(point <= first.hi);
      CHECK(first.lo < first.hi);

      BootstrapOptions other;
      other.seed = 43;
      CHECK_FALSE(bootstrap_ci(x, y, coef, other) == first);
    }

    std::vector<double> scaled;
    for (const double v : x) scaled.push_back(2.0 * v + 1.0);
    for (const auto coef : {Coefficient::Spearman, Coefficient::Kendall}) {
      const auto ci = bootstrap_ci(x, scaled, coef);
      CHECK(ci.lo == 1.0);
      CHECK(ci.hi == 1.0);
    }
    const auto ci = bootstrap_ci(x, scaled, Coefficient::Pearson);
    CHECK(ci.lo == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(ci.hi == doctest::Approx(1.0).epsilon(1e-14));

    const std::vector<double> three{1, 2, 3};
    CHECK_THROWS_AS(bootstrap_ci(three, three, Coefficient::Pearson), Error);
  }

  TEST_CASE("bootstrap gives up when no resample can vary") {
    const std::vector<double> x(40, 1.0);
    std::vector<double> y(40);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = static_cast<double>(i);
    BootstrapOptions options;
    options.resamples = 50;
    CHECK_THROWS_WITH_AS(bootstrap_ci(x, y, Coefficient::Pearson, options),
                         "bootstrap: too many degenerate resamples", Error);
  }

  TEST_CASE("judgment table averages over topics and joins on system") {
    const auto scores = parse(
        "topic,system,variant,score\n"
        "t1,1,g2,0.2\nt2,1,g2,0.4\n"
        "t1,2,g2,0.5\nt2,2,g2,0.7\n"
        "t1,3,g2,0.1\n"
        "t1,9,g2,0.9\n");
    const auto human = parse(
        "system,pyramid,responsiveness\n"
        "1,0.3,2.0\n2,0.6,3.5\n3,0.2,\n4,0.8,4.0\n");
    std::vector<std::string> warnings;
    const auto table = build_judgment_table(scores, human, {"system"}, &warnings);
    CHECK(table.keys == std::vector<std::string>{"1", "2"});
    REQUIRE(table.automatic.size() == 1);
    CHECK(table.automatic[0].name == "g2");
    CHECK(table.automatic[0].values[0] == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(table.automatic[0].values[1] == doctest::Approx(0.6).epsilon(1e-15));
    REQUIRE(table.human.size() == 2);
    CHECK(table.human[0].name == "pyramid");
    CHECK(table.human[1].values == std::vector<double>{2.0, 3.5});
    // system 3 lacks a cell, system 4 has no scores, system 9 no judgments.
    CHECK(warnings.size() >= 2);

    const auto duplicated = parse("system,pyramid\n1,0.3\n1,0.4\n");
    CHECK_THROWS_AS(build_judgment_table(scores, duplicated, {"system"}), Error);
    CHECK_THROWS_AS(build_judgment_table(scores, human, {"variant"}), Error);

    const auto per_topic = parse("topic,system,pyramid\nt1,1,0.1\nt2,1,0.2\nt1,2,0.3\n");
    const auto joined = build_judgment_table(scores, per_topic, {"topic", "system"});
    CHECK(joined.keys.size() == 3);
  }

  TEST_CASE("correlate") {
    JudgmentTable table;
    std::vector<double> x, y;
    correlated(12, 0.3, 9, x, y);
    for (std::size_t i = 0; i < x.size(); ++i) table.keys.push_back(std::to_string(i));
    table.human.push_back({"pyramid", x});
    table.automatic.push_back({"copy", x});
    table.automatic.push_back({"noisy", y});

    CorrelateOptions options;
    options.baseline = "noisy";
    std::vector<std::string> warnings;
    const auto rows = correlate(table, options, &warnings);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].auto_metric == "copy");
    CHECK(rows[0].n == 12);
    CHECK(rows[0].pearson == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(rows[0].spearman == 1.0);
    CHECK(rows[0].kendall == 1.0);
    CHECK(rows[0].kendall_ci == Interval{1.0, 1.0});
    CHECK_FALSE(rows[1].williams.has_value());

    table.automatic[0].values = y;
    for (std::size_t i = 0; i < y.size(); ++i) table.automatic[0].values[i] += 0.2 * x[i];
    const auto better = correlate(table, options);
    REQUIRE(better[0].williams.has_value());
    const auto& w = *better[0].williams;
    CHECK(w.r12 == better[0].pearson);
    CHECK(w.r13 == better[1].pearson);
    CHECK(w.r23 == doctest::Approx(pearson(table.automatic[1].values, table.automatic[0].values)));
    CHECK(better[0].significant == (w.p < 0.05));

    std::ostringstream first, second;
    write_correlation_csv(first, better);
    write_correlation_csv(second, correlate(table, options));
    CHECK(first.str() == second.str());
    CHECK(first.str().rfind("auto_metric,human_metric,n,pearson,", 0) == 0);

    options.baseline = "missing";
    CHECK_THROWS_AS(correlate(table, options), Error);

    JudgmentTable small = table;
    small.keys.resize(3);
    for (auto& c : small.human) c.values.resize(3);
    for (auto& c : small.automatic) c.values.resize(3);
    CHECK_THROWS_AS(correlate(small, {}), Error);
  }
}
