#pragma once

// Prime table and the odd-prime index coordinate system.
//
// Matrices and images index primes by their 0-based position among the odd
// primes: 3 -> 0, 5 -> 1, 7 -> 2, ... For an odd prime p this index equals
// pi(p) - 2.

#include <cstdint>
#include <span>
#include <vector>

namespace epq {

class PrimeTable {
 public:
  /// Sieve of Eratosthenes up to and including limit. Throws DomainError for limit < 2.
  explicit PrimeTable(std::uint32_t limit);

  std::uint32_t limit() const { return limit_; }
  std::span<const std::uint32_t> primes() const { return primes_; }
  /// 3, 5, 7, ... up to limit.
  std::span<const std::uint32_t> odd_primes() const { return std::span(primes_).subspan(1); }

  bool is_prime(std::uint64_t n) const;
  /// Number of primes <= x; x must not exceed limit().
  std::uint32_t pi(std::uint64_t x) const;

  std::uint32_t odd_prime_index(std::uint64_t p) const;
  std::uint32_t nth_odd_prime(std::uint32_t idx) const;
  std::uint32_t odd_prime_count() const { return static_cast<std::uint32_t>(primes_.size() - 1); }

 private:
  std::uint32_t limit_;
  std::vector<bool> composite_;
  std::vector<std::uint32_t> primes_;
};

PrimeTable sieve(std::uint32_t limit);

}  // namespace epq
