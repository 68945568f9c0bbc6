// Copyright 2026 The dirclose Authors
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

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace dirclose {

/// Exact rational number, always stored normalized (gcd 1, positive
/// denominator). Arithmetic runs in 128-bit intermediates and throws
/// std::overflow_error if a normalized result leaves the 64-bit range; the
/// probabilities this models stay far below that for every supported input.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den) { assign(num, den); }

  static Rational from_int(std::int64_t v) { return Rational(v, 1); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    using I = __int128;
    return make(static_cast<I>(a.num_) * b.den_ + static_cast<I>(b.num_) * a.den_,
                static_cast<I>(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    using I = __int128;
    return make(static_cast<I>(a.num_) * b.den_ - static_cast<I>(b.num_) * a.den_,
                static_cast<I>(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    using I = __int128;
    return make(static_cast<I>(a.num_) * b.num_, static_cast<I>(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    using I = __int128;
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return make(static_cast<I>(a.num_) * b.den_, static_cast<I>(a.den_) * b.num_);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    using I = __int128;
    return static_cast<I>(a.num_) * b.den_ < static_cast<I>(b.num_) * a.den_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return a == b || a < b; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

 private:
  static Rational make(__int128 num, __int128 den) {
    Rational r;
    r.assign128(num, den);
    return r;
  }

  void assign(std::int64_t num, std::int64_t den) { assign128(num, den); }

  void assign128(__int128 num, __int128 den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const __int128 g = gcd128(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    constexpr __int128 kMax = INT64_MAX;
    constexpr __int128 kMin = INT64_MIN;
    if (num > kMax || num < kMin || den > kMax) {
      throw std::overflow_error("rational does not fit in 64 bits after reduction");
    }
    num_ = static_cast<std::int64_t>(num);
    den_ = static_cast<std::int64_t>(den);
  }

  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) {
      const __int128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace dirclose
