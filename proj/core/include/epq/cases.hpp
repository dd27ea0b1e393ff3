#pragma once

// The 60 ways to split 4pqb^4 into (c - a^2)(c + a^2), their classification,
// and a uniform brute-force oracle that re-derives witnesses for any split.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "epq/numeric.hpp"
#include "epq/witness.hpp"

namespace epq {

inline constexpr int kCaseCount = 60;

// A divisor 2^two * p^p * q^q * b^b of 4pqb^4.
struct Exponents {
  int two = 0;
  int p = 0;
  int q = 0;
  int b = 0;

  friend auto operator<=>(const Exponents&, const Exponents&) = default;
};

inline constexpr Exponents kFullExponents{2, 1, 1, 4};

Exponents complement(const Exponents& e);
/// "2pb^4", "4pq", "1", ...
std::string format_factor(const Exponents& e);
/// Inverse of format_factor. Throws DomainError on malformed input.
Exponents parse_factor(std::string_view text);

Integer factor_value(const Exponents& e, const Natural& p, const Natural& q, const Natural& b);

struct CaseSplit {
  int case_id = 0;
  Exponents low;   // c - a^2
  Exponents high;  // c + a^2
};

struct CaseRow {
  int case_id;
  std::string_view low;
  std::string_view high;
  std::string_view condition;
};

/// Table of all 60 cases in their customary numbering.
std::span<const CaseRow> case_table();

/// All divisor pairs of 4pqb^4, generated from exponents and labelled via case_table().
std::vector<CaseSplit> enumerate_splits();

/// Throws DomainError for ids outside 1..60.
const CaseSplit& split_for(int case_id);
std::string_view condition_for(int case_id);

enum class Verdict { Solvable, Unsolvable, Redundant };

// Setting b to a forced value turns the child condition into the parent's.
struct Reduction {
  std::uint32_t b;
  int parent;
};

struct CaseClassification {
  int case_id = 0;
  Verdict verdict = Verdict::Unsolvable;
  char reason = 0;  // 'a'..'f' for Unsolvable
  int parent = 0;   // for Redundant
  std::vector<Reduction> reductions;
  std::string note;
};

CaseClassification classify(int case_id);
std::string verdict_text(const CaseClassification& c);

/// (high - low)(p, q, b) == 2a^2 and gcd(a, b) == 1.
bool satisfies_split(const CaseSplit& split, const Natural& p, const Natural& q, const Witness& w);

/// Smallest-b witness of the split equation with a >= 1 and gcd(a, b) = 1.
std::optional<Witness> oracle_witness(const CaseSplit& split, const Natural& p, const Natural& q,
                                      std::uint32_t b_max);

}  // namespace epq
