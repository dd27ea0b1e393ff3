#include "epq/witness.hpp"

#include "epq/errors.hpp"

namespace epq {

namespace {

void check_pair(const Natural& p, const Natural& q) {
  if (p < 3 || q <= p) throw DomainError("expected odd primes 3 <= p < q");
  if (mpz_even_p(p.get_mpz_t()) || mpz_even_p(q.get_mpz_t())) throw DomainError("p and q must be odd");
}

unsigned long mod4(const Natural& n) { return mpz_fdiv_ui(n.get_mpz_t(), 4); }

std::optional<Witness> accept(const Integer& s, std::uint32_t b) {
  if (s <= 0) return std::nullopt;
  auto a = perfect_square_root(s);
  if (!a) return std::nullopt;
  if (gcd(*a, Natural(b)) != 1) return std::nullopt;
  return Witness{std::move(*a), Natural(b)};
}

std::optional<Witness> case56(const Natural& p, const Natural& q, std::uint32_t b_max) {
  // pq = (b^2 - a)(b^2 + a) with p < q prime forces p = b^2 - a, q = b^2 + a.
  auto b = perfect_square_root(Natural((p + q) / 2));
  if (!b || *b > b_max) return std::nullopt;
  Natural a = (q - p) / 2;
  if (gcd(a, *b) != 1) return std::nullopt;
  return Witness{std::move(a), std::move(*b)};
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const Witness& w) { return os << w.str(); }

std::optional<SolvableCase> solvable_case(int id) {
  for (SolvableCase c : kSolvableCases)
    if (case_id(c) == id) return c;
  return std::nullopt;
}

std::string_view condition_text(SolvableCase c) {
  switch (c) {
    case SolvableCase::Case17: return "q = a^2 + p*b^4";
    case SolvableCase::Case26: return "pq = a^2 + b^4";
    case SolvableCase::Case32: return "pq = (a^2 + 1)/b^4";
    case SolvableCase::Case40: return "p = q*b^4 - a^2";
    case SolvableCase::Case47: return "q = p*b^4 - a^2";
    case SolvableCase::Case56: return "pq = b^4 - a^2";
  }
  return {};
}

std::optional<Witness> find_witness(SolvableCase c, const Natural& p, const Natural& q,
                                    std::uint32_t b_max, Prefilter prefilter) {
  check_pair(p, q);
  if (b_max < 1 || b_max > kMaxBMax) throw DomainError("b_max must lie in [1, 65535]");

  const bool filtered = prefilter == Prefilter::Mod4;
  if (filtered && !mod4_feasible(c, p, q)) return std::nullopt;
  if (c == SolvableCase::Case56) return case56(p, q, b_max);

  bool admit_odd = true;
  bool admit_even = true;
  if (filtered) {
    admit_odd = mod4_admits(c, p, q, 1);
    admit_even = mod4_admits(c, p, q, 2);
  }

  const Natural pq = p * q;
  Integer s;
  mpz_ptr sp = s.get_mpz_t();
  for (std::uint32_t b = 1; b <= b_max; ++b) {
    const unsigned long b4 = static_cast<unsigned long>(b) * b * b * b;
    const bool admitted = (b & 1U) ? admit_odd : admit_even;
    switch (c) {
      case SolvableCase::Case17:  // decreasing in b
        mpz_mul_ui(sp, p.get_mpz_t(), b4);
        mpz_sub(sp, q.get_mpz_t(), sp);
        if (sgn(s) <= 0) return std::nullopt;
        break;
      case SolvableCase::Case26:  // decreasing in b
        mpz_sub_ui(sp, pq.get_mpz_t(), b4);
        if (sgn(s) <= 0) return std::nullopt;
        break;
      case SolvableCase::Case32:
        if (!admitted) continue;
        mpz_mul_ui(sp, pq.get_mpz_t(), b4);
        mpz_sub_ui(sp, sp, 1);
        break;
      case SolvableCase::Case40:
        if (!admitted) continue;
        mpz_mul_ui(sp, q.get_mpz_t(), b4);
        mpz_sub(sp, sp, p.get_mpz_t());
        break;
      case SolvableCase::Case47:  // increasing in b; skip until positive
        if (!admitted) continue;
        mpz_mul_ui(sp, p.get_mpz_t(), b4);
        mpz_sub(sp, sp, q.get_mpz_t());
        if (sgn(s) <= 0) continue;
        break;
      case SolvableCase::Case56: break;
    }
    if (!admitted) continue;
    if (auto w = accept(s, b)) return w;
  }
  return std::nullopt;
}

bool verify_condition(SolvableCase c, const Natural& p, const Natural& q, const Witness& w) {
  const Natural a2 = w.a * w.a;
  const Natural b2 = w.b * w.b;
  const Natural b4 = b2 * b2;
  switch (c) {
    case SolvableCase::Case17: return q == a2 + p * b4;
    case SolvableCase::Case26: return p * q == a2 + b4;
    case SolvableCase::Case32: return p * q * b4 == a2 + 1;
    case SolvableCase::Case40: return p == q * b4 - a2;
    case SolvableCase::Case47: return q == p * b4 - a2;
    case SolvableCase::Case56: return p * q == b4 - a2;
  }
  return false;
}

bool mod4_admits(SolvableCase c, const Natural& p, const Natural& q, std::uint32_t b) {
  // b odd: b^4 = 1 (mod 4) and a is even. b even: gcd forces a odd, a^2 = 1 (mod 4).
  const bool b_odd = (b & 1U) != 0;
  const unsigned long pm = mod4(p);
  const unsigned long qm = mod4(q);
  const bool same_class = pm == qm;
  const unsigned long pqm = (pm * qm) % 4;
  switch (c) {
    case SolvableCase::Case17: return b_odd ? same_class : qm == 1;
    case SolvableCase::Case26: return pqm == 1;
    case SolvableCase::Case32: return b_odd && pqm == 1;
    case SolvableCase::Case40: return b_odd ? same_class : pm == 3;
    case SolvableCase::Case47: return b_odd ? same_class : qm == 3;
    case SolvableCase::Case56: return true;
  }
  return true;
}

bool mod4_feasible(SolvableCase c, const Natural& p, const Natural& q) {
  return mod4_admits(c, p, q, 1) || mod4_admits(c, p, q, 2);
}

}  // namespace epq
