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

#include "limsim/core_model.hpp"

#include <algorithm>
#include <cmath>

namespace limsim {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidWidth: return "InvalidWidth";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kWidthMismatch: return "WidthMismatch";
    case ErrorCode::kUnsupportedOperation: return "UnsupportedOperation";
    case ErrorCode::kEmptySet: return "EmptySet";
    case ErrorCode::kUncalibratedPoint: return "UncalibratedPoint";
    case ErrorCode::kNonPositiveEdp: return "NonPositiveEdp";
    case ErrorCode::kGeometryNotBlockAligned: return "GeometryNotBlockAligned";
    case ErrorCode::kMissingPrimitive: return "MissingPrimitive";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

namespace {

std::vector<Bit> parse_bits(std::string_view text) {
  std::vector<Bit> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c == '0') {
      bits.push_back(Bit::kZero);
    } else if (c == '1') {
      bits.push_back(Bit::kOne);
    } else {
      throw Error(ErrorCode::kInvalidArgument,
                  "bit string contains '" + std::string(1, c) + "'");
    }
  }
  return bits;
}

}  // namespace

BitVector::BitVector(std::vector<Bit> bits) : bits_(std::move(bits)) {
  if (bits_.empty()) {
    throw Error(ErrorCode::kInvalidWidth, "bit vector width must be >= 1");
  }
}

Bit BitVector::at(std::size_t i) const {
  if (i >= bits_.size()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "bit index " + std::to_string(i) + " outside width " +
                    std::to_string(bits_.size()));
  }
  return bits_[i];
}

std::size_t BitVector::popcount() const noexcept {
  return static_cast<std::size_t>(
      std::count(bits_.begin(), bits_.end(), Bit::kOne));
}

std::string BitVector::to_string() const {
  std::string s;
  s.reserve(bits_.size());
  for (Bit b : bits_) s.push_back(is_set(b) ? '1' : '0');
  return s;
}

std::uint64_t BitVector::to_unsigned() const {
  if (bits_.size() > 64) {
    throw Error(ErrorCode::kInvalidWidth, "integer view needs width <= 64");
  }
  std::uint64_t v = 0;
  for (Bit b : bits_) v = (v << 1) | (is_set(b) ? 1u : 0u);
  return v;
}

std::int64_t BitVector::to_signed() const {
  const std::uint64_t u = to_unsigned();
  const std::size_t w = bits_.size();
  if (w == 64 || !is_set(bits_.front())) {
    return static_cast<std::int64_t>(u);
  }
  // Sign-extend from bit w-1.
  return static_cast<std::int64_t>(u | (~std::uint64_t{0} << w));
}

Word::Word(std::vector<Bit> bits) : BitVector(std::move(bits)) {}

Word Word::from_unsigned(std::uint64_t value, std::size_t width) {
  if (width == 0 || width > 64) {
    throw Error(ErrorCode::kInvalidWidth, "integer words need width in [1, 64]");
  }
  std::vector<Bit> bits(width);
  for (std::size_t i = 0; i < width; ++i) {
    bits[i] = to_bit((value >> (width - 1 - i)) & 1u);
  }
  return Word(std::move(bits));
}

Word Word::parse(std::string_view text) { return Word(parse_bits(text)); }

Word Word::zeros(std::size_t width) {
  return Word(std::vector<Bit>(width, Bit::kZero));
}

Mask::Mask(std::vector<Bit> bits) : BitVector(std::move(bits)) {}

Mask Mask::parse(std::string_view text) { return Mask(parse_bits(text)); }

Mask Mask::zeros(std::size_t width) {
  return Mask(std::vector<Bit>(width, Bit::kZero));
}

Word make_word(std::span<const Bit> bits) {
  return Word(std::vector<Bit>(bits.begin(), bits.end()));
}

Mask one_hot_mask(std::size_t width, std::size_t position) {
  if (width == 0) {
    throw Error(ErrorCode::kInvalidWidth, "mask width must be >= 1");
  }
  if (position >= width) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "one-hot position " + std::to_string(position) +
                    " outside width " + std::to_string(width));
  }
  std::vector<Bit> bits(width, Bit::kZero);
  bits[position] = Bit::kOne;
  return Mask(std::move(bits));
}

void require_support(CellVariant v, OperationKind op) {
  if (!supports(v, op)) {
    throw Error(ErrorCode::kUnsupportedOperation,
                std::string(id(op)) + " is not supported by " +
                    std::string(id(v)));
  }
}

std::string_view id(CellVariant v) {
  switch (v) {
    case CellVariant::kSram6T: return "sram6t";
    case CellVariant::kCamNor: return "cam_nor";
    case CellVariant::kLimDynamic: return "lim_dynamic";
    case CellVariant::kLimStatic: return "lim_static";
    case CellVariant::kLimSpecial: return "lim_special";
  }
  return "?";
}

std::string_view id(OperationKind op) {
  switch (op) {
    case OperationKind::kRead: return "read";
    case OperationKind::kWrite: return "write";
    case OperationKind::kSearch: return "search";
    case OperationKind::kAnd: return "and";
  }
  return "?";
}

std::string_view label(CellVariant v) {
  switch (v) {
    case CellVariant::kSram6T: return "SRAM";
    case CellVariant::kCamNor: return "CAM";
    case CellVariant::kLimDynamic: return "AND DYN";
    case CellVariant::kLimStatic: return "AND ST";
    case CellVariant::kLimSpecial: return "AND SP";
  }
  return "?";
}

std::string_view label(OperationKind op) {
  switch (op) {
    case OperationKind::kRead: return "Read";
    case OperationKind::kWrite: return "Write";
    case OperationKind::kSearch: return "Search";
    case OperationKind::kAnd: return "AND";
  }
  return "?";
}

std::optional<CellVariant> parse_variant(std::string_view text) {
  for (CellVariant v : kAllVariants) {
    if (text == id(v) || text == label(v)) return v;
  }
  return std::nullopt;
}

std::optional<OperationKind> parse_operation(std::string_view text) {
  for (OperationKind op : kAllOperations) {
    if (text == id(op)) return op;
  }
  return std::nullopt;
}

void ArrayGeometry::validate() const {
  if (rows == 0 || cols == 0) {
    throw Error(ErrorCode::kInvalidWidth,
                "array geometry needs rows >= 1 and cols >= 1");
  }
}

void SimulationParams::validate() const {
  if (!(vdd > 0.0) || !std::isfinite(vdd)) {
    throw Error(ErrorCode::kInvalidArgument, "vdd must be positive");
  }
  if (!(t_clk_ns > 0.0) || !std::isfinite(t_clk_ns)) {
    throw Error(ErrorCode::kInvalidArgument, "clock period must be positive");
  }
}

}  // namespace limsim
