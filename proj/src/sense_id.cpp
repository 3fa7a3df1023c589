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

#include "grouge/sense_id.hpp"

#include <cstdio>

#include "grouge/error.hpp"

namespace grouge {

std::optional<Pos> parse_pos(char c) {
  switch (c) {
    case 'n': return Pos::Noun;
    case 'v': return Pos::Verb;
    case 'a': return Pos::Adjective;
    case 'r': return Pos::Adverb;
    default: return std::nullopt;
  }
}

SenseId::SenseId(std::uint32_t offset, Pos pos) : offset_(offset), pos_(pos) {
  if (offset > 99999999u) throw Error("sense offset exceeds eight digits");
}

std::optional<SenseId> SenseId::parse(std::string_view text) {
  if (text.size() != 10 || text[8] != '-') return std::nullopt;
  std::uint32_t offset = 0;
  for (int i = 0; i < 8; ++i) {
    const char c = text[i];
    if (c < '0' || c > '9') return std::nullopt;
    offset = offset * 10 + static_cast<std::uint32_t>(c - '0');
  }
  const auto pos = parse_pos(text[9]);
  if (!pos) return std::nullopt;
  return SenseId(offset, *pos);
}

std::string SenseId::str() const {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%08u-%c", offset_, pos_char(pos_));
  return buf;
}

}  // namespace grouge
