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

#include "skt/scalar.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace skt {

std::pair<std::int64_t, std::int64_t> squarefree_split(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("squarefree_split: argument must be positive");
  std::int64_t square_root = 1;
  std::int64_t rest = n;
  for (std::int64_t p = 2; p * p <= rest; ++p) {
    while (rest % (p * p) == 0) {
      rest /= p * p;
      square_root *= p;
    }
  }
  return {square_root, rest};
}

Scalar::Scalar(mpq_class rational, mpq_class irrational, std::int64_t radicand)
    : rational_(std::move(rational)), irrational_(std::move(irrational)), radicand_(radicand) {
  rational_.canonicalize();
  irrational_.canonicalize();
  if (sgn(irrational_) != 0) {
    if (radicand_ <= 0) throw std::invalid_argument("Scalar: radicand must be positive");
    auto [s, d] = squarefree_split(radicand_);
    irrational_ *= s;
    radicand_ = d;
  }
  normalize();
}

void Scalar::normalize() {
  if (sgn(irrational_) == 0) {
    radicand_ = 0;
  } else if (radicand_ == 1) {
    rational_ += irrational_;
    irrational_ = 0;
    radicand_ = 0;
  }
}

void Scalar::settle_radicand(std::int64_t other) {
  if (other == 0 || other == radicand_) return;
  if (radicand_ == 0) {
    radicand_ = other;
    return;
  }
  throw std::domain_error("Scalar: mixing sqrt(" + std::to_string(radicand_) + ") and sqrt(" +
                          std::to_string(other) + ")");
}

int Scalar::sign() const {
  const int a = sgn(rational_);
  const int b = sgn(irrational_);
  if (b == 0) return a;
  if (a == 0 || a == b) return b;
  // Opposite signs: compare a^2 with b^2 d.
  const mpq_class lhs = rational_ * rational_;
  const mpq_class rhs = irrational_ * irrational_ * radicand_;
  return lhs > rhs ? a : b;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("Scalar: division by zero");
  if (is_rational()) return Scalar(mpq_class(1) / rational_);
  const mpq_class norm = rational_ * rational_ - irrational_ * irrational_ * radicand_;
  Scalar out;
  out.rational_ = rational_ / norm;
  out.irrational_ = -irrational_ / norm;
  out.radicand_ = radicand_;
  return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  rational_ += rhs.rational_;
  if (!rhs.is_rational()) {
    settle_radicand(rhs.radicand_);
    irrational_ += rhs.irrational_;
    normalize();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  rational_ -= rhs.rational_;
  if (!rhs.is_rational()) {
    settle_radicand(rhs.radicand_);
    irrational_ -= rhs.irrational_;
    normalize();
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  if (rhs.is_rational()) {
    rational_ *= rhs.rational_;
    if (!is_rational()) {
      irrational_ *= rhs.rational_;
      normalize();
    }
    return *this;
  }
  if (is_rational()) {
    irrational_ = rational_ * rhs.irrational_;
    rational_ *= rhs.rational_;
    radicand_ = rhs.radicand_;
    normalize();
    return *this;
  }
  settle_radicand(rhs.radicand_);
  mpq_class a = rational_ * rhs.rational_ + irrational_ * rhs.irrational_ * radicand_;
  mpq_class b = rational_ * rhs.irrational_ + irrational_ * rhs.rational_;
  rational_ = std::move(a);
  irrational_ = std::move(b);
  normalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (rhs.is_rational()) {
    if (sgn(rhs.rational_) == 0) throw std::domain_error("Scalar: division by zero");
    rational_ /= rhs.rational_;
    if (!is_rational()) irrational_ /= rhs.rational_;
    return *this;
  }
  return *this *= rhs.inverse();
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  out.rational_ = -out.rational_;
  out.irrational_ = -out.irrational_;
  return out;
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.rational_ == b.rational_ && a.irrational_ == b.irrational_ &&
         (a.is_rational() || a.radicand_ == b.radicand_);
}

std::string Scalar::to_string() const {
  if (is_rational()) return rational_.get_str();
  std::string radical = "sqrt(" + std::to_string(radicand_) + ")";
  std::string irr;
  if (irrational_ == 1) {
    irr = radical;
  } else if (irrational_ == -1) {
    irr = "-" + radical;
  } else {
    irr = irrational_.get_str() + "*" + radical;
  }
  if (sgn(rational_) == 0) return irr;
  std::string out = rational_.get_str();
  if (sgn(irrational_) > 0) out += "+";
  return out + irr;
}

double Scalar::to_double() const {
  double value = rational_.get_d();
  if (!is_rational()) value += irrational_.get_d() * std::sqrt(static_cast<double>(radicand_));
  return value;
}

std::ostream& operator<<(std::ostream& os, const Scalar& value) { return os << value.to_string(); }

namespace {

// expr   := term (('+' | '-') term)*
// term   := unary (('*' | '/') unary)*
// unary  := ('+' | '-') unary | primary
// primary:= integer | 'sqrt' '(' integer ')' | '(' expr ')'
class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : text_(text) {}

  Scalar parse() {
    Scalar value = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("cannot parse number '" + std::string(text_) + "': " + why);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Scalar expr() {
    Scalar value = term();
    for (;;) {
      if (accept('+')) {
        value += term();
      } else if (accept('-')) {
        value -= term();
      } else {
        return value;
      }
    }
  }

  Scalar term() {
    Scalar value = unary();
    for (;;) {
      if (accept('*')) {
        value *= unary();
      } else if (accept('/')) {
        Scalar divisor = unary();
        if (divisor.is_zero()) fail("division by zero");
        value /= divisor;
      } else {
        return value;
      }
    }
  }

  Scalar unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return primary();
  }

  mpz_class integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Scalar primary() {
    skip_space();
    if (accept('(')) {
      Scalar inner = expr();
      if (!accept(')')) fail("missing ')'");
      return inner;
    }
    if (text_.substr(pos_, 4) == "sqrt") {
      pos_ += 4;
      if (!accept('(')) fail("expected '(' after sqrt");
      const mpz_class radicand = integer();
      if (!accept(')')) fail("missing ')'");
      if (sgn(radicand) <= 0 || !radicand.fits_slong_p()) fail("sqrt argument must be a positive integer");
      auto [s, d] = squarefree_split(radicand.get_si());
      if (d == 1) return Scalar(mpq_class(s));
      return Scalar(mpq_class(0), mpq_class(s), d);
    }
    return Scalar(mpq_class(integer()));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(std::string_view text) { return ScalarParser(text).parse(); }

}  // namespace skt
