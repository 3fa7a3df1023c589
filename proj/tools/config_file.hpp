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

#include <string>
#include <vector>

#include "CLI11.hpp"

namespace grouge::cli {

// Expands "--config FILE" for the subcommand named in `args` (args[0] is the
// program name) by splicing the file's "key = value" lines in as flags right
// after the subcommand, so flags given on the command line win. Keys are long
// option names without dashes; unknown keys throw CLI::ValidationError.
std::vector<std::string> expand_config(const CLI::App& app, std::vector<std::string> args);

}  // namespace grouge::cli
