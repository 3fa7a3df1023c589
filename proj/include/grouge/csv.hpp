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

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace grouge {

// RFC 4180 writer: fields containing commas, quotes or line breaks are quoted.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}
  void row(std::initializer_list<std::string_view> fields);
  void row(const std::vector<std::string>& fields);

 private:
  void field(std::string_view f, bool first);
  std::ostream& out_;
};

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  // Index of a header column; throws Error if absent.
  std::size_t column(std::string_view name) const;
};

// Parses RFC 4180 CSV with a header row. Throws ParseError on ragged rows or
// unterminated quotes.
CsvTable read_csv(std::istream& in);
CsvTable read_csv_file(const std::string& path);

// 12 significant digits, "%.12g".
std::string format_number(double value);
double parse_number(std::string_view text);

}  // namespace grouge
