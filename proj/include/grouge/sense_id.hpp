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

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace grouge {

enum class Pos : char { Noun = 'n', Verb = 'v', Adjective = 'a', Adverb = 'r' };

// Fixed order used whenever senses of all parts of speech are concatenated.
inline constexpr Pos kAllPos[] = {Pos::Noun, Pos::Verb, Pos::Adjective, Pos::Adverb};

std::optional<Pos> parse_pos(char c);
inline char pos_char(Pos p) { return static_cast<char>(p); }

// A WordNet synset identifier "offset-pos", e.g. "00123456-v".
//
// Ordering is the lexicographic order of the canonical text form. Since the
// offset is always eight zero-padded digits this is (offset, pos) order.
class SenseId {
 public:
  SenseId() = default;
  SenseId(std::uint32_t offset, Pos pos);

  // Returns nullopt unless `text` is exactly eight digits, '-', and a pos letter.
  static std::optional<SenseId> parse(std::string_view text);

  std::uint32_t offset() const { return offset_; }
  Pos pos() const { return pos_; }
  std::string str() const;

  friend auto operator<=>(const SenseId&, const SenseId&) = default;

 private:
  std::uint32_t offset_ = 0;
  Pos pos_ = Pos::Noun;
};

}  // namespace grouge

template <>
struct std::hash<grouge::SenseId> {
  std::size_t operator()(const grouge::SenseId& s) const noexcept {
    return std::hash<std::uint64_t>{}((std::uint64_t{s.offset()} << 8) |
                                      static_cast<unsigned char>(s.pos()));
  }
};
