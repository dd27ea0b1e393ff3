#include "epq/primes.hpp"

#include <algorithm>
#include <string>

#include "epq/errors.hpp"

namespace epq {

PrimeTable::PrimeTable(std::uint32_t limit) : limit_(limit) {
  if (limit < 2) throw DomainError("prime table limit must be at least 2");
  composite_.assign(std::size_t{limit} + 1, false);
  composite_[0] = composite_[1] = true;
  for (std::uint64_t i = 2; i * i <= limit; ++i) {
    if (composite_[i]) continue;
    for (std::uint64_t j = i * i; j <= limit; j += i) composite_[j] = true;
  }
  for (std::uint32_t i = 2; i <= limit; ++i)
    if (!composite_[i]) primes_.push_back(i);
}

bool PrimeTable::is_prime(std::uint64_t n) const {
  if (n > limit_) throw DomainError("value " + std::to_string(n) + " exceeds prime table limit");
  return !composite_[n];
}

std::uint32_t PrimeTable::pi(std::uint64_t x) const {
  if (x > limit_) throw DomainError("value " + std::to_string(x) + " exceeds prime table limit");
  return static_cast<std::uint32_t>(std::upper_bound(primes_.begin(), primes_.end(), x) - primes_.begin());
}

std::uint32_t PrimeTable::odd_prime_index(std::uint64_t p) const {
  if (p == 2 || p > limit_ || composite_[p])
    throw DomainError(std::to_string(p) + " is not an odd prime in the table");
  return pi(p) - 2;
}

std::uint32_t PrimeTable::nth_odd_prime(std::uint32_t idx) const {
  if (idx >= odd_prime_count())
    throw DomainError("odd prime index " + std::to_string(idx) + " out of range");
  return primes_[std::size_t{idx} + 1];
}

PrimeTable sieve(std::uint32_t limit) { return PrimeTable(limit); }

}  // namespace epq
