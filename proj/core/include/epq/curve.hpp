#pragma once

// E_{p,q}: y^2 = x^3 - pq x and its intersection with the line y = (a/b) x.
//
// Substituting the line gives x^3 - (a/b)^2 x^2 - pq x = 0. Besides x = 0 the
// roots are x = ((a/b)^2 +- sqrt((a/b)^4 + 4pq)) / 2, which are rational
// exactly when a^4 + 4pq b^4 = c^2 for an integer c.

#include <string>
#include <utility>

#include "epq/numeric.hpp"
#include "epq/witness.hpp"

namespace epq {

class Curve {
 public:
  /// Throws DomainError unless 3 <= p < q are (probable) odd primes.
  Curve(Natural p, Natural q);

  const Natural& p() const { return p_; }
  const Natural& q() const { return q_; }
  const Natural& n() const { return n_; }

  std::string equation() const { return "y^2 = x^3 - " + n_.get_str() + "x"; }

 private:
  Natural p_;
  Natural q_;
  Natural n_;
};

struct RationalPoint {
  Rational x;
  Rational y;

  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
  std::string str() const { return "(" + x.str() + ", " + y.str() + ")"; }
};

/// c with c^2 = a^4 + 4 pq b^4, if it exists.
std::optional<Natural> discriminant_root(const Witness& w, const Curve& curve);

/// The two points with y != 0 on the line; first.x > second.x.
/// Throws InvalidWitness when the discriminant is not a square.
std::pair<RationalPoint, RationalPoint> intersect(const Witness& w, const Curve& curve);

bool is_on_curve(const RationalPoint& pt, const Curve& curve);

}  // namespace epq
