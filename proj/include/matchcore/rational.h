// Copyright 2026 The matchcore Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MATCHCORE_RATIONAL_H_
#define MATCHCORE_RATIONAL_H_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace matchcore {

// Exact rational number, always held in lowest terms with a positive
// denominator. Every weight, LP coefficient and profit in the library is a
// Rational; there is no floating point anywhere on the analysis path.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(runtime/explicit)
  Rational(std::int64_t numerator, std::int64_t denominator);

  // Accepts "[-]digits", "[-]digits.digits" and "[-]digits/digits".
  // Throws std::invalid_argument on malformed text or a zero denominator.
  static Rational Parse(std::string_view text);

  // Canonical form: "p/q", or "p" when the denominator is 1.
  std::string ToString() const;

  std::string NumeratorString() const;
  std::string DenominatorString() const;

  int Sign() const { return sgn(value_); }
  bool IsZero() const { return Sign() == 0; }
  bool IsInteger() const;

  // Integer value when it is one and fits in 64 bits.
  std::optional<std::int64_t> ToInt64() const;
  std::int64_t DenominatorInt64() const;  // Throws std::overflow_error.

  Rational Inverse() const;  // Throws std::domain_error on zero.

  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a);

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational Min(const Rational& a, const Rational& b) {
  return b < a ? b : a;
}
inline Rational Max(const Rational& a, const Rational& b) {
  return a < b ? b : a;
}

}  // namespace matchcore

#endif  // MATCHCORE_RATIONAL_H_
