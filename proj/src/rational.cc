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

#include "matchcore/rational.h"

#include <cctype>
#include <stdexcept>
#include <string>

namespace matchcore {
namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void Malformed(std::string_view text) {
  throw std::invalid_argument("malformed number: '" + std::string(text) + "'");
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(std::to_string(value)) {}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::invalid_argument("zero denominator");
  value_ = mpq_class(mpz_class(std::to_string(numerator)),
                     mpz_class(std::to_string(denominator)));
  value_.canonicalize();
}

Rational Rational::Parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  mpz_class numerator;
  mpz_class denominator = 1;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const auto num = body.substr(0, slash);
    const auto den = body.substr(slash + 1);
    if (!AllDigits(num) || !AllDigits(den)) Malformed(text);
    numerator = mpz_class(std::string(num), 10);
    denominator = mpz_class(std::string(den), 10);
    if (denominator == 0) throw std::invalid_argument("zero denominator");
  } else if (const auto dot = body.find('.'); dot != std::string_view::npos) {
    const auto whole = body.substr(0, dot);
    const auto frac = body.substr(dot + 1);
    if (!AllDigits(whole) || !AllDigits(frac)) Malformed(text);
    numerator = mpz_class(std::string(whole) + std::string(frac), 10);
    mpz_ui_pow_ui(denominator.get_mpz_t(), 10, frac.size());
  } else {
    if (!AllDigits(body)) Malformed(text);
    numerator = mpz_class(std::string(body), 10);
  }
  if (negative) numerator = -numerator;
  mpq_class value(numerator, denominator);
  value.canonicalize();
  return Rational(std::move(value));
}

std::string Rational::ToString() const { return value_.get_str(); }

std::string Rational::NumeratorString() const {
  return value_.get_num().get_str();
}

std::string Rational::DenominatorString() const {
  return value_.get_den().get_str();
}

bool Rational::IsInteger() const { return value_.get_den() == 1; }

std::optional<std::int64_t> Rational::ToInt64() const {
  if (!IsInteger() || !value_.get_num().fits_slong_p()) return std::nullopt;
  return value_.get_num().get_si();
}

std::int64_t Rational::DenominatorInt64() const {
  if (!value_.get_den().fits_slong_p()) {
    throw std::overflow_error("denominator does not fit in 64 bits");
  }
  return value_.get_den().get_si();
}

Rational Rational::Inverse() const {
  if (IsZero()) throw std::domain_error("inverse of zero");
  return Rational(mpq_class(1) / value_);
}

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.IsZero()) throw std::domain_error("division by zero");
  value_ /= other.value_;
  return *this;
}

Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.ToString();
}

}  // namespace matchcore
