// Copyright 2026 The sktholo Authors
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

#ifndef SKT_SCALAR_HPP
#define SKT_SCALAR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace skt {

/// Exact element a + b*sqrt(d) of a real quadratic field Q(sqrt(d)).
///
/// d is a squarefree integer > 1 carried by the value itself; rational values
/// (b == 0) have no radicand and combine with anything. Arithmetic between two
/// irrational values with different radicands throws std::domain_error.
///
/// The Samelson torus blocks of A2 and G2 need sqrt(3); everything else in a
/// run stays rational and takes the fast path.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : rational_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(const mpq_class& value) : rational_(value) { rational_.canonicalize(); }  // NOLINT
  Scalar(mpq_class rational, mpq_class irrational, std::int64_t radicand);

  /// Parses "p/q", "sqrt(3)", "-2/3*sqrt(3)", "1/2 + sqrt(3)/2", ...
  /// Throws std::invalid_argument on malformed input.
  static Scalar parse(std::string_view text);

  const mpq_class& rational_part() const { return rational_; }
  const mpq_class& irrational_part() const { return irrational_; }
  std::int64_t radicand() const { return radicand_; }

  bool is_zero() const { return sgn(rational_) == 0 && sgn(irrational_) == 0; }
  bool is_rational() const { return sgn(irrational_) == 0; }
  int sign() const;

  Scalar abs() const { return sign() < 0 ? -*this : *this; }
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);
  Scalar operator-() const;

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator<(const Scalar& a, const Scalar& b) { return (a - b).sign() < 0; }
  friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return !(b < a); }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return !(a < b); }

  /// Canonical text: "p/q" (or "p"), "p/q*sqrt(d)", "a+b*sqrt(d)", "a-b*sqrt(d)".
  /// parse(to_string()) reproduces the value exactly.
  std::string to_string() const;

  /// Approximate value, for diagnostics only.
  double to_double() const;

 private:
  void settle_radicand(std::int64_t other);
  void normalize();

  mpq_class rational_;
  mpq_class irrational_;
  std::int64_t radicand_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& value);

/// Splits n = s^2 * d with d squarefree; returns {s, d}. n must be positive.
std::pair<std::int64_t, std::int64_t> squarefree_split(std::int64_t n);

}  // namespace skt

#endif  // SKT_SCALAR_HPP
