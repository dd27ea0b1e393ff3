#include "epq/curve.hpp"

#include "epq/errors.hpp"

namespace epq {

namespace {

bool probably_prime(const Natural& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

}  // namespace

Curve::Curve(Natural p, Natural q) : p_(std::move(p)), q_(std::move(q)), n_(p_ * q_) {
  if (p_ < 3 || q_ <= p_) throw DomainError("curve needs odd primes 3 <= p < q");
  if (!probably_prime(p_) || !probably_prime(q_)) throw DomainError("curve parameters must be prime");
}

std::optional<Natural> discriminant_root(const Witness& w, const Curve& curve) {
  const Natural a2 = w.a * w.a;
  const Natural b2 = w.b * w.b;
  return perfect_square_root(Integer(a2 * a2 + 4 * curve.n() * b2 * b2));
}

std::pair<RationalPoint, RationalPoint> intersect(const Witness& w, const Curve& curve) {
  if (w.b < 1) throw InvalidWitness("witness needs b >= 1");
  auto c = discriminant_root(w, curve);
  if (!c) throw InvalidWitness("a^4 + 4pqb^4 is not a perfect square for " + w.str());

  const Natural a2 = w.a * w.a;
  const Natural den = 2 * w.b * w.b;
  const Rational slope(w.a, w.b);
  Rational x1(a2 + *c, den);
  Rational x2(a2 - *c, den);
  Rational y1 = slope * x1;
  Rational y2 = slope * x2;
  return {{std::move(x1), std::move(y1)}, {std::move(x2), std::move(y2)}};
}

bool is_on_curve(const RationalPoint& pt, const Curve& curve) {
  const Rational rhs = pt.x * pt.x * pt.x - Rational(curve.n()) * pt.x;
  return square(pt.y) == rhs;
}

}  // namespace epq
