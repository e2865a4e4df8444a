/*
 * Copyright 2026 The limsim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// SplitMix64 (Steele, Lea, Flood 2014). Portable reference for the random
// array contents documented in docs/formats.md.

#ifndef LIMSIM_TOOLS_SPLITMIX64_HPP
#define LIMSIM_TOOLS_SPLITMIX64_HPP

#include <cstdint>
#include <vector>

namespace limsim::tools {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// `width` bits, MSB first, taken from the top of successive outputs.
  std::vector<std::uint8_t> bits(std::size_t width) {
    std::vector<std::uint8_t> out(width);
    std::uint64_t word = 0;
    for (std::size_t i = 0; i < width; ++i) {
      if (i % 64 == 0) word = next();
      out[i] = static_cast<std::uint8_t>((word >> (63 - i % 64)) & 1U);
    }
    return out;
  }

 private:
  std::uint64_t state_;
};

}  // namespace limsim::tools

#endif  // LIMSIM_TOOLS_SPLITMIX64_HPP
