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

#include "evkb/core/decimal.hpp"

#include <cstdlib>
#include <limits>

#include "evkb/core/error.hpp"

namespace evkb {
namespace {

using Wide = __int128;

constexpr std::int64_t kPow10[] = {1LL,
                                   10LL,
                                   100LL,
                                   1000LL,
                                   10000LL,
                                   100000LL,
                                   1000000LL,
                                   10000000LL,
                                   100000000LL,
                                   1000000000LL,
                                   10000000000LL,
                                   100000000000LL,
                                   1000000000000LL,
                                   10000000000000LL,
                                   100000000000000LL,
                                   1000000000000000LL,
                                   10000000000000000LL,
                                   100000000000000000LL,
                                   1000000000000000000LL};

std::int64_t narrow(Wide value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw DataError("decimal overflow");
  }
  return static_cast<std::int64_t>(value);
}

// Brings both operands to the larger scale.
std::pair<Wide, Wide> aligned(const Decimal& a, const Decimal& b, int* scale) {
  *scale = std::max(a.scale(), b.scale());
  Wide x = static_cast<Wide>(a.mantissa()) * kPow10[*scale - a.scale()];
  Wide y = static_cast<Wide>(b.mantissa()) * kPow10[*scale - b.scale()];
  return {x, y};
}

}  // namespace

Decimal Decimal::from_integer(std::int64_t value) { return Decimal(value, 0); }

Decimal Decimal::from_parts(std::int64_t mantissa, int scale) {
  if (scale < 0 || scale > kMaxScale) throw DataError("decimal scale out of range");
  while (scale > 0 && mantissa % 10 == 0) {
    mantissa /= 10;
    --scale;
  }
  if (mantissa == 0) scale = 0;
  return Decimal(mantissa, scale);
}

std::optional<Decimal> Decimal::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  bool negative = false;
  std::size_t pos = 0;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    pos = 1;
  }
  Wide mantissa = 0;
  int scale = 0;
  int digits = 0;
  int group_len = -1;  // digits since the last comma; -1 before any comma
  bool seen_point = false;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c >= '0' && c <= '9') {
      if (seen_point) {
        if (scale == kMaxScale) return std::nullopt;
        ++scale;
      } else if (group_len >= 0) {
        ++group_len;
        if (group_len > 3) return std::nullopt;
      }
      mantissa = mantissa * 10 + (c - '0');
      if (mantissa > std::numeric_limits<std::int64_t>::max()) return std::nullopt;
      ++digits;
    } else if (c == ',' && !seen_point) {
      if (digits == 0 || group_len == 0 || (group_len > 0 && group_len != 3)) return std::nullopt;
      if (group_len < 0 && digits > 3) return std::nullopt;
      group_len = 0;
    } else if (c == '.' && !seen_point) {
      if (group_len >= 0 && group_len != 3) return std::nullopt;
      seen_point = true;
    } else {
      return std::nullopt;
    }
  }
  if (digits == 0) return std::nullopt;
  if (!seen_point && group_len >= 0 && group_len != 3) return std::nullopt;
  if (seen_point && text.back() == '.') return std::nullopt;
  auto m = static_cast<std::int64_t>(mantissa);
  return from_parts(negative ? -m : m, scale);
}

Decimal Decimal::shifted(int exponent) const {
  if (exponent < 0) throw DataError("negative decimal shift");
  int scale = scale_;
  Wide m = mantissa_;
  while (exponent > 0 && scale > 0) {
    --scale;
    --exponent;
  }
  if (exponent > 18) throw DataError("decimal overflow");
  m *= kPow10[exponent];
  return from_parts(narrow(m), scale);
}

Decimal Decimal::operator+(const Decimal& other) const {
  int scale = 0;
  auto [x, y] = aligned(*this, other, &scale);
  return from_parts(narrow(x + y), scale);
}

Decimal Decimal::operator-(const Decimal& other) const {
  int scale = 0;
  auto [x, y] = aligned(*this, other, &scale);
  return from_parts(narrow(x - y), scale);
}

Decimal Decimal::operator*(std::int64_t factor) const {
  return from_parts(narrow(static_cast<Wide>(mantissa_) * factor), scale_);
}

std::strong_ordering operator<=>(const Decimal& a, const Decimal& b) {
  int scale = 0;
  auto [x, y] = aligned(a, b, &scale);
  if (x < y) return std::strong_ordering::less;
  if (x > y) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Decimal::to_string() const {
  const bool negative = mantissa_ < 0;
  const unsigned long long magnitude =
      negative ? 0ULL - static_cast<unsigned long long>(mantissa_)
               : static_cast<unsigned long long>(mantissa_);
  std::string digits = std::to_string(magnitude);
  if (scale_ > 0) {
    if (static_cast<int>(digits.size()) <= scale_) {
      digits.insert(0, static_cast<std::size_t>(scale_ - digits.size() + 1), '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(scale_), ".");
  }
  return negative ? "-" + digits : digits;
}

double Decimal::to_double() const {
  return static_cast<double>(mantissa_) / static_cast<double>(kPow10[scale_]);
}

}  // namespace evkb
