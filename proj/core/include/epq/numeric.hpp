#pragma once

// Exact integer and rational arithmetic.
//
// Integers are GMP integers (mpz_class); nothing in this library narrows them
// to fixed-width words. Rational is kept in lowest terms with a positive
// denominator at all times, so equality is plain componentwise comparison.

#include <compare>
#include <optional>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace epq {

using Integer = mpz_class;
// Nonnegative by contract; the type is shared with Integer.
using Natural = mpz_class;

/// floor(sqrt(n)) by Newton iteration. Throws DomainError for n < 0.
Natural isqrt(const Natural& n);

/// r with r*r == n when n is a nonnegative perfect square.
std::optional<Natural> perfect_square_root(const Integer& n);

Natural gcd(const Integer& a, const Integer& b);

class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(Integer value) : num_(std::move(value)), den_(1) {}  // NOLINT
  Rational(long value) : num_(value), den_(1) {}                // NOLINT

  /// Throws DomainError when den == 0.
  Rational(Integer num, Integer den);

  const Integer& numerator() const { return num_; }
  const Natural& denominator() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  int sign() const { return sgn(num_); }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

  /// "n" for integers, "n/d" otherwise.
  std::string str() const;

 private:
  void normalize();

  Integer num_;
  Natural den_;
};

Rational rational_normalize(Integer num, Integer den);
Rational square(const Rational& r);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace epq
