#pragma once

// Closed-form witness search for the six solvable splitting cases.
//
// A witness (a, b) with gcd(a, b) = 1 parameterizes the line y = (a/b)x. Each
// case reduces the search to "is S(b) a positive perfect square a^2" for a
// case-specific S, scanned in ascending b. The first accepted b wins; a is the
// positive root.

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "epq/numeric.hpp"

namespace epq {

struct Witness {
  Natural a;
  Natural b;

  friend bool operator==(const Witness&, const Witness&) = default;
  std::string str() const { return "(" + a.get_str() + "," + b.get_str() + ")"; }
};

std::ostream& operator<<(std::ostream& os, const Witness& w);

enum class SolvableCase : int {
  Case17 = 17,  // q = a^2 + p b^4
  Case26 = 26,  // pq = a^2 + b^4
  Case32 = 32,  // pq = (a^2 + 1) / b^4
  Case40 = 40,  // p = q b^4 - a^2
  Case47 = 47,  // q = p b^4 - a^2
  Case56 = 56,  // pq = b^4 - a^2
};

inline constexpr std::array<SolvableCase, 6> kSolvableCases = {
    SolvableCase::Case17, SolvableCase::Case26, SolvableCase::Case32,
    SolvableCase::Case40, SolvableCase::Case47, SolvableCase::Case56,
};

inline constexpr std::uint32_t kDefaultBMax = 200;
inline constexpr std::uint32_t kMaxBMax = 65535;  // keeps b^4 inside 64 bits

constexpr int case_id(SolvableCase c) { return static_cast<int>(c); }
std::optional<SolvableCase> solvable_case(int id);
std::string_view condition_text(SolvableCase c);

enum class Prefilter { Off, Mod4 };

/// First witness in ascending b (b <= b_max), or nullopt.
///
/// Requires p < q, both odd; primality is the caller's responsibility.
/// Throws DomainError on violated preconditions or b_max outside [1, 65535].
std::optional<Witness> find_witness(SolvableCase c, const Natural& p, const Natural& q,
                                    std::uint32_t b_max = kDefaultBMax,
                                    Prefilter prefilter = Prefilter::Off);

bool verify_condition(SolvableCase c, const Natural& p, const Natural& q, const Witness& w);

/// Mod-4 necessary condition restricted to witnesses with this parity of b.
bool mod4_admits(SolvableCase c, const Natural& p, const Natural& q, std::uint32_t b);

/// False only when no (a, b) can satisfy case c modulo 4. Never a completeness claim.
bool mod4_feasible(SolvableCase c, const Natural& p, const Natural& q);

}  // namespace epq
