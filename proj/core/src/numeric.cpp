#include "epq/numeric.hpp"

#include <array>

#include "epq/errors.hpp"

namespace epq {

namespace {

// Quadratic-residue masks. A perfect square must be a residue modulo each of
// these; most non-squares are rejected without a single division of n.
template <unsigned M>
constexpr std::array<bool, M> residues() {
  std::array<bool, M> r{};
  for (unsigned i = 0; i < M; ++i) r[(i * i) % M] = true;
  return r;
}

constexpr auto kRes64 = residues<64>();
constexpr auto kRes63 = residues<63>();
constexpr auto kRes65 = residues<65>();
constexpr auto kRes11 = residues<11>();

}  // namespace

Natural isqrt(const Natural& n) {
  if (n < 0) throw DomainError("isqrt of a negative number");
  if (n < 2) return n;

  // Start above the root: 2^ceil(bits/2) > sqrt(n). Newton then decreases
  // monotonically and the first non-decreasing step lands on the floor.
  const auto bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  Natural x;
  mpz_setbit(x.get_mpz_t(), (bits + 1) / 2);
  for (;;) {
    Natural y = (x + n / x) / 2;
    if (y >= x) return x;
    x = std::move(y);
  }
}

std::optional<Natural> perfect_square_root(const Integer& n) {
  if (n < 0) return std::nullopt;
  const mpz_srcptr z = n.get_mpz_t();
  if (!kRes64[mpz_fdiv_ui(z, 64)]) return std::nullopt;
  const unsigned long r = mpz_fdiv_ui(z, 63UL * 65UL * 11UL);
  if (!kRes63[r % 63] || !kRes65[r % 65] || !kRes11[r % 11]) return std::nullopt;

  Natural root = isqrt(n);
  if (root * root != n) return std::nullopt;
  return root;
}

Natural gcd(const Integer& a, const Integer& b) {
  Natural g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Rational::Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw DomainError("rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  Natural g = gcd(num_, den_);
  if (g != 1) {
    mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  num_ = num_ * rhs.den_ - rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw DomainError("rational division by zero");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  const int c = cmp(Integer(lhs.num_ * rhs.den_), Integer(rhs.num_ * lhs.den_));
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string Rational::str() const {
  if (den_ == 1) return num_.get_str();
  return num_.get_str() + "/" + den_.get_str();
}

Rational rational_normalize(Integer num, Integer den) { return Rational(std::move(num), std::move(den)); }

Rational square(const Rational& r) { return r * r; }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace epq
