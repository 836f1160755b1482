// Copyright 2026 The evkb Authors.
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

#ifndef EVKB_CORE_DECIMAL_HPP_
#define EVKB_CORE_DECIMAL_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace evkb {

// Exact non-binary decimal: value = mantissa * 10^-scale. Always kept in
// canonical form (no trailing zeros in the mantissa when scale > 0), so
// equality is field equality. Arithmetic throws DataError on overflow.
class Decimal {
 public:
  static constexpr int kMaxScale = 12;

  constexpr Decimal() = default;

  static Decimal from_integer(std::int64_t value);
  static Decimal from_parts(std::int64_t mantissa, int scale);

  // Accepts "1650", "1,650,000", "1.65", ".5", "-3". Comma grouping must be
  // well-formed (groups of three). Returns nullopt on anything else.
  static std::optional<Decimal> parse(std::string_view text);

  std::int64_t mantissa() const { return mantissa_; }
  int scale() const { return scale_; }

  bool is_zero() const { return mantissa_ == 0; }
  bool is_positive() const { return mantissa_ > 0; }
  bool is_integer() const { return scale_ == 0; }

  Decimal abs() const { return from_parts(mantissa_ < 0 ? -mantissa_ : mantissa_, scale_); }

  // this * 10^exponent, exponent >= 0.
  Decimal shifted(int exponent) const;

  Decimal operator+(const Decimal& other) const;
  Decimal operator-(const Decimal& other) const;
  Decimal operator*(std::int64_t factor) const;

  friend bool operator==(const Decimal&, const Decimal&) = default;
  friend std::strong_ordering operator<=>(const Decimal& a, const Decimal& b);

  // Plain decimal notation without grouping, e.g. "1650000000" or "7.038".
  std::string to_string() const;
  double to_double() const;

 private:
  constexpr Decimal(std::int64_t mantissa, int scale) : mantissa_(mantissa), scale_(scale) {}

  std::int64_t mantissa_ = 0;
  int scale_ = 0;
};

}  // namespace evkb

#endif  // EVKB_CORE_DECIMAL_HPP_
