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

#ifndef LIMSIM_CORE_MODEL_HPP
#define LIMSIM_CORE_MODEL_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace limsim {

/// Error categories shared by every module and mirrored 1:1 by the C API
/// status codes.
enum class ErrorCode {
  kInvalidWidth = 1,
  kIndexOutOfRange,
  kWidthMismatch,
  kUnsupportedOperation,
  kEmptySet,
  kUncalibratedPoint,
  kNonPositiveEdp,
  kGeometryNotBlockAligned,
  kMissingPrimitive,
  kInvalidConfig,
  kInvalidArgument,
  kIoError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

enum class Bit : std::uint8_t { kZero = 0, kOne = 1 };

constexpr Bit complement(Bit b) noexcept {
  return b == Bit::kOne ? Bit::kZero : Bit::kOne;
}
constexpr Bit to_bit(bool v) noexcept { return v ? Bit::kOne : Bit::kZero; }
constexpr bool is_set(Bit b) noexcept { return b == Bit::kOne; }
constexpr Bit operator&(Bit a, Bit b) noexcept {
  return to_bit(is_set(a) && is_set(b));
}
constexpr Bit operator|(Bit a, Bit b) noexcept {
  return to_bit(is_set(a) || is_set(b));
}

// Fixed-width bit vector, index 0 is the MSB. Shared storage for Word and
// Mask; the two are kept as distinct types so a stored value cannot be
// passed where a column selection is expected.
class BitVector {
 public:
  std::size_t width() const noexcept { return bits_.size(); }
  Bit operator[](std::size_t i) const { return bits_[i]; }
  Bit at(std::size_t i) const;
  std::span<const Bit> bits() const noexcept { return bits_; }
  std::size_t popcount() const noexcept;

  /// "1010" style rendering, MSB first.
  std::string to_string() const;

  /// Value of the bits read as an unsigned integer; width must be <= 64.
  std::uint64_t to_unsigned() const;
  /// Two's complement interpretation; width must be <= 64.
  std::int64_t to_signed() const;

  friend bool operator==(const BitVector&, const BitVector&) = default;

 protected:
  BitVector() = default;
  explicit BitVector(std::vector<Bit> bits);
  std::vector<Bit> bits_;
};

class Word : public BitVector {
 public:
  /// Throws kInvalidWidth on an empty sequence.
  explicit Word(std::vector<Bit> bits);

  /// Low `width` bits of `value`, MSB first. width in [1, 64].
  static Word from_unsigned(std::uint64_t value, std::size_t width);
  /// Parses a string of '0'/'1' characters.
  static Word parse(std::string_view text);
  static Word zeros(std::size_t width);

  friend bool operator==(const Word&, const Word&) = default;
};

/// Logical column selection: bit i set means column i participates.
class Mask : public BitVector {
 public:
  explicit Mask(std::vector<Bit> bits);
  static Mask parse(std::string_view text);
  static Mask zeros(std::size_t width);

  bool selected(std::size_t column) const { return is_set(at(column)); }

  friend bool operator==(const Mask&, const Mask&) = default;
};

Word make_word(std::span<const Bit> bits);

/// Mask with a single 1 at `position` (0 = MSB).
Mask one_hot_mask(std::size_t width, std::size_t position);

enum class CellVariant { kSram6T, kCamNor, kLimDynamic, kLimStatic, kLimSpecial };

inline constexpr CellVariant kAllVariants[] = {
    CellVariant::kSram6T, CellVariant::kCamNor, CellVariant::kLimSpecial,
    CellVariant::kLimDynamic, CellVariant::kLimStatic};

inline constexpr CellVariant kLimVariants[] = {
    CellVariant::kLimDynamic, CellVariant::kLimStatic, CellVariant::kLimSpecial};

enum class OperationKind { kRead, kWrite, kSearch, kAnd };

inline constexpr OperationKind kAllOperations[] = {
    OperationKind::kWrite, OperationKind::kRead, OperationKind::kSearch,
    OperationKind::kAnd};

constexpr bool is_lim(CellVariant v) noexcept {
  return v == CellVariant::kLimDynamic || v == CellVariant::kLimStatic ||
         v == CellVariant::kLimSpecial;
}

constexpr bool supports(CellVariant v, OperationKind op) noexcept {
  switch (op) {
    case OperationKind::kRead:
    case OperationKind::kWrite:
      return true;
    case OperationKind::kSearch:
      return v != CellVariant::kSram6T;
    case OperationKind::kAnd:
      return is_lim(v);
  }
  return false;
}

/// Throws kUnsupportedOperation when `op` is not available on `v`.
void require_support(CellVariant v, OperationKind op);

/// Machine identifiers ("lim_static", "search") used in config and data files.
std::string_view id(CellVariant v);
std::string_view id(OperationKind op);
/// Table labels ("AND ST").
std::string_view label(CellVariant v);
std::string_view label(OperationKind op);

std::optional<CellVariant> parse_variant(std::string_view text);
std::optional<OperationKind> parse_operation(std::string_view text);

struct ArrayGeometry {
  std::size_t rows = 1;
  std::size_t cols = 1;

  /// Throws kInvalidWidth when either dimension is zero.
  void validate() const;
  /// Netlist basic blocks are 32 rows/columns wide.
  bool block_aligned() const noexcept {
    return rows % 32 == 0 && cols % 32 == 0;
  }
  friend bool operator==(const ArrayGeometry&, const ArrayGeometry&) = default;
};

struct SimulationParams {
  double vdd = 1.0;
  double t_clk_ns = 4.0;

  /// Throws kInvalidArgument unless both values are positive and finite.
  void validate() const;
};

}  // namespace limsim

#endif  // LIMSIM_CORE_MODEL_HPP
