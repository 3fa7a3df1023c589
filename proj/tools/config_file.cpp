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

#include "config_file.hpp"

#include <fstream>

namespace grouge::cli {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string unquote(std::string v) {
  if (v.size() >= 2 && (v.front() == '"' || v.front() == '\'') && v.back() == v.front()) {
    return v.substr(1, v.size() - 2);
  }
  return v;
}

}  // namespace

std::vector<std::string> expand_config(const CLI::App& app, std::vector<std::string> args) {
  std::size_t sub_pos = 0;
  const CLI::App* sub = nullptr;
  for (std::size_t i = 1; i < args.size() && !sub; ++i) {
    for (const auto* s : app.get_subcommands({})) {
      if (s->get_name() == args[i]) {
        sub = s;
        sub_pos = i;
      }
    }
  }
  if (!sub) return args;

  std::string path;
  std::size_t erase_from = 0, erase_to = 0;
  for (std::size_t i = sub_pos + 1; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
      erase_from = i;
      erase_to = i + 2;
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      erase_from = i;
      erase_to = i + 1;
    }
  }
  if (path.empty()) return args;
  args.erase(args.begin() + static_cast<std::ptrdiff_t>(erase_from),
             args.begin() + static_cast<std::ptrdiff_t>(erase_to));

  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--config", "cannot open " + path);
  std::vector<std::string> spliced;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#' || t[0] == ';') continue;
    const auto eq = t.find('=');
    const std::string where = path + ":" + std::to_string(lineno);
    if (eq == std::string::npos) {
      throw CLI::ValidationError("--config", where + ": expected key = value");
    }
    const std::string key = trim(t.substr(0, eq));
    const std::string value = unquote(trim(t.substr(eq + 1)));
    if (key == "config") {
      throw CLI::ValidationError("--config", where + ": nested config files are not supported");
    }
    const CLI::Option* opt = sub->get_option_no_throw("--" + key);
    if (!opt) throw CLI::ValidationError("--config", where + ": unknown key '" + key + "'");
    // "--key=value" also covers flags, which take true/false, yes/no, on/off or 1/0.
    spliced.push_back("--" + key + "=" + value);
  }
  args.insert(args.begin() + static_cast<std::ptrdiff_t>(sub_pos + 1), spliced.begin(), spliced.end());
  return args;
}

}  // namespace grouge::cli
