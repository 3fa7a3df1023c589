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

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "grouge/csv.hpp"
#include "synthetic.hpp"

namespace fs = std::filesystem;
using namespace grouge;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

// Runs the CLI with `args`, capturing stdout and stderr through files.
Run cli(const fs::path& dir, const std::string& args, const std::string& env = "") {
  const fs::path out = dir / "stdout.txt", err = dir / "stderr.txt";
  const std::string cmd = env + (env.empty() ? "" : " ") + "GROUGE_STATE_DIR='" +
                          (dir / "state").string() + "' '" GROUGE_CLI_PATH "' " + args + " >'" +
                          out.string() + "' 2>'" + err.string() + "'";
  const int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = testing::read_file(out);
  r.err = testing::read_file(err);
  return r;
}

fs::path make_corpus(const std::string& name, std::size_t systems = 5) {
  testing::WorldSpec spec;
  spec.nodes = 300;
  spec.chords = 300;
  spec.vocabulary = 120;
  spec.topics = 2;
  spec.systems = systems;
  spec.sentences = 2;
  spec.seed = 77;
  const auto dir = testing::temp_dir(name);
  testing::write_world(testing::make_world(spec), dir);
  return dir;
}

std::string corpus_args(const fs::path& dir) {
  return "--graph '" + (dir / "graph.txt").string() + "' --dict '" + (dir / "dict.txt").string() +
         "' --peers '" + (dir / "peers").string() + "' --models '" + (dir / "models").string() + "'";
}

CsvTable parse(const std::string& text) {
  std::istringstream in(text);
  return read_csv(in);
}

// Human judgments for systems 1..n that loosely track the system number.
void write_judgments(const fs::path& path, std::size_t systems) {
  std::ostringstream out;
  out << "system,pyramid,responsiveness\n";
  for (std::size_t s = 1; s <= systems; ++s) {
    out << s << ',' << 0.1 * static_cast<double>(s % 3 + s) << ',' << (s * 7) % 5 + 1 << '\n';
  }
  testing::write_file(path, out.str());
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("version and help") {
    const auto dir = testing::temp_dir("cli-version");
    const auto v = cli(dir, "--version");
    CHECK(v.code == 0);
    CHECK(v.out.rfind("grouge 1.0.0\n", 0) == 0);
    CHECK(v.out.find("last cache: none") != std::string::npos);
    CHECK(cli(dir, "--help").code == 0);
    CHECK(cli(dir, "score --help").code == 0);
  }

  TEST_CASE("score writes a CSV and a sidecar log") {
    const auto dir = make_corpus("cli-score");
    const auto out = dir / "report.csv";
    const auto r = cli(dir, "score " + corpus_args(dir) + " --out '" + out.string() + "'");
    CHECK(r.code == 0);
    const auto table = parse(testing::read_file(out));
    CHECK(table.header == std::vector<std::string>{"topic", "system", "variant", "score"});
    CHECK(table.rows.size() == 2 * 5 * 3);
    const auto log = testing::read_file(fs::path(out.string() + ".log"));
    CHECK(log.find("beta = 0.5") != std::string::npos);

    const auto to_stdout = cli(dir, "score " + corpus_args(dir));
    CHECK(to_stdout.code == 0);
    CHECK(to_stdout.out == testing::read_file(out));
  }

  TEST_CASE("usage errors exit with 64") {
    const auto dir = make_corpus("cli-usage");
    const std::string graph = (dir / "graph.txt").string(), dict = (dir / "dict.txt").string();
    CHECK(cli(dir, "score --graph '" + graph + "' --dict '" + dict + "' --peers '" +
                       (dir / "peers").string() + "'")
              .code == 64);
    CHECK(cli(dir, "score " + corpus_args(dir) + " --variant g7").code == 64);
    CHECK(cli(dir, "score " + corpus_args(dir) + " --beta 1.5").code == 64);
    CHECK(cli(dir, "bogus").code == 64);
    const auto missing = cli(dir, "score " + corpus_args(dir) + " --peers '" +
                                      (dir / "nowhere").string() + "'");
    CHECK(missing.code == 64);
    CHECK(missing.err.find("--peers") != std::string::npos);
  }

  TEST_CASE("unreadable inputs give a partial report") {
    const auto dir = make_corpus("cli-partial");
    fs::remove(dir / "peers" / "t1.2.txt");
    fs::create_directory(dir / "peers" / "t1.2.txt");
    const auto out = dir / "report.csv";
    const auto r = cli(dir, "score " + corpus_args(dir) + " --out '" + out.string() + "'");
    CHECK(r.code == 2);
    CHECK(r.err.find("error: ") != std::string::npos);
    const auto log = testing::read_file(fs::path(out.string() + ".log"));
    CHECK(log.find("error: ") != std::string::npos);
    CHECK(parse(testing::read_file(out)).rows.size() == 2 * 5 * 3);
  }

  TEST_CASE("jobs do not change the report") {
    const auto dir = make_corpus("cli-jobs");
    const auto a = cli(dir, "score " + corpus_args(dir) + " --jobs 1");
    const auto b = cli(dir, "score " + corpus_args(dir) + " --jobs 3");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }

  TEST_CASE("persistent cache statistics") {
    const auto dir = make_corpus("cli-cache");
    const std::string cache = (dir / "ppr.cache").string();
    const std::string run = "score " + corpus_args(dir) + " --cache-persist '" + cache + "'";
    REQUIRE(cli(dir, run).code == 0);

    auto field = [](const std::string& text, const std::string& key) {
      std::istringstream in(text);
      std::string line;
      while (std::getline(in, line)) {
        if (line.rfind(key + '\t', 0) == 0) return line.substr(key.size() + 1);
      }
      return std::string();
    };
    const auto first = cli(dir, "cache-stats --cache '" + cache + "'");
    CHECK(first.code == 0);
    CHECK(field(first.out, "hits") == "0");
    CHECK(std::stoul(field(first.out, "vectors")) > 0);

    const auto v = cli(dir, "--version");
    CHECK(v.out.find("last cache: " + fs::absolute(cache).string()) != std::string::npos);
    CHECK(v.out.find("graph checksum: ") != std::string::npos);

    const auto again = cli(dir, run);
    REQUIRE(again.code == 0);
    const auto second = cli(dir, "cache-stats --cache '" + cache + "'");
    CHECK(std::stoul(field(second.out, "hits")) > 0);

    const std::string off = (dir / "off.cache").string();
    REQUIRE(cli(dir, "score " + corpus_args(dir) + " --cache-capacity 0 --cache-persist '" + off +
                         "'")
                .code == 0);
    CHECK(cli(dir, "cache-stats --cache '" + off + "'").out == "disabled\n");
    CHECK(cli(dir, "cache-stats --cache '" + (dir / "absent").string() + "'").code != 0);
  }

  TEST_CASE("config files") {
    const auto dir = make_corpus("cli-config");
    const auto config = dir / "score.conf";
    testing::write_file(config, "# scoring setup\ngraph = " + (dir / "graph.txt").string() +
                                    "\ndict = \"" + (dir / "dict.txt").string() +
                                    "\"\npeers = " + (dir / "peers").string() + "\nmodels = " +
                                    (dir / "models").string() +
                                    "\nvariant = g2\nbeta = 0.3\nno-stem = true\n");
    const auto from_file = cli(dir, "score --config '" + config.string() + "'");
    CHECK(from_file.code == 0);
    const auto direct = cli(dir, "score " + corpus_args(dir) + " --variant g2 --beta 0.3 --no-stem");
    CHECK(from_file.out == direct.out);

    const auto overridden = cli(dir, "score --config '" + config.string() + "' --beta 1");
    const auto lexical = cli(dir, "score " + corpus_args(dir) + " --variant g2 --beta 1 --no-stem");
    CHECK(overridden.out == lexical.out);

    testing::write_file(config, "betta = 0.3\n");
    const auto bad = cli(dir, "score " + corpus_args(dir) + " --config '" + config.string() + "'");
    CHECK(bad.code == 64);
    CHECK(bad.err.find("betta") != std::string::npos);
  }

  TEST_CASE("meta-eval and sweep-beta agree") {
    const auto dir = make_corpus("cli-sweep", 6);
    const auto human = dir / "human.csv";
    write_judgments(human, 6);
    const std::string meta = " --human '" + human.string() + "' --resamples 200 --baseline g1";

    const auto sweep = cli(dir, "sweep-beta " + corpus_args(dir) + meta + " --betas 0,1");
    REQUIRE(sweep.code == 0);
    const auto swept = parse(sweep.out);
    CHECK(swept.header.front() == "beta");

    std::size_t row = 0;
    for (const std::string beta : {"0", "1"}) {
      const auto scores = dir / ("scores-" + beta + ".csv");
      REQUIRE(cli(dir, "score " + corpus_args(dir) + " --beta " + beta + " --out '" +
                           scores.string() + "'")
                  .code == 0);
      const auto corr =
          cli(dir, "meta-eval --scores '" + scores.string() + "'" + meta);
      REQUIRE(corr.code == 0);
      const auto single = parse(corr.out);
      CHECK(std::vector<std::string>(swept.header.begin() + 1, swept.header.end()) == single.header);
      for (const auto& r : single.rows) {
        REQUIRE(row < swept.rows.size());
        CHECK(swept.rows[row].front() == beta);
        CHECK(std::vector<std::string>(swept.rows[row].begin() + 1, swept.rows[row].end()) == r);
        ++row;
      }
    }
    CHECK(row == swept.rows.size());

    const auto grid = cli(dir, "sweep-beta " + corpus_args(dir) + meta);
    REQUIRE(grid.code == 0);
    const auto rows = parse(grid.out).rows;
    std::vector<std::string> betas;
    for (const auto& r : rows) {
      if (betas.empty() || betas.back() != r.front()) betas.push_back(r.front());
    }
    CHECK(betas.size() == 11);
    CHECK(betas.front() == "0");
    CHECK(betas[3] == "0.3");
    CHECK(betas.back() == "1");

    const auto few = dir / "few.csv";
    write_judgments(few, 3);
    CHECK(cli(dir, "meta-eval --scores '" + (dir / "scores-0.csv").string() + "' --human '" +
                       few.string() + "'")
              .code != 0);
  }

  TEST_CASE("ppr prints ranked dimensions") {
    const auto dir = make_corpus("cli-ppr");
    const auto dict = testing::read_file(dir / "dict.txt");
    const std::string lemma = dict.substr(0, dict.find(' '));
    const auto r = cli(dir, "ppr --graph '" + (dir / "graph.txt").string() + "' --dict '" +
                                (dir / "dict.txt").string() + "' --lemma " + lemma + " --top 5");
    CHECK(r.code == 0);
    std::istringstream in(r.out);
    std::string line;
    int lines = 0;
    double previous = 2.0;
    while (std::getline(in, line)) {
      const auto tab = line.find('\t');
      REQUIRE(tab != std::string::npos);
      CHECK(line.substr(0, tab).size() == 10);  // 00000001-n
      const double w = std::stod(line.substr(tab + 1));
      CHECK(w <= previous);
      previous = w;
      ++lines;
    }
    CHECK(lines == 5);
    CHECK(cli(dir, "ppr --graph '" + (dir / "graph.txt").string() + "' --dict '" +
                       (dir / "dict.txt").string() + "' --lemma zzzzqq")
              .code != 0);
  }

  TEST_CASE("data directory from the environment") {
    const auto dir = make_corpus("cli-env");
    const std::string env = "GROUGE_DATA_DIR='" + dir.string() + "'";
    const auto r = cli(dir,
                       "score --peers '" + (dir / "peers").string() + "' --models '" +
                           (dir / "models").string() + "' --variant r1 --remove-stopwords " +
                           "--stopwords '" GROUGE_DATA_DIR_PATH "/stopwords.txt'",
                       env);
    CHECK(r.code == 0);
    CHECK(parse(r.out).rows.size() == 2 * 5);
  }
}
