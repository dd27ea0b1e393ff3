#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "epq/cases.hpp"
#include "epq/errors.hpp"
#include "support/oracles.hpp"

namespace {

using epq::Exponents;
using epq::Natural;
using epq::Verdict;

std::vector<Exponents> all_divisors() {
  std::vector<Exponents> out;
  for (int two = 0; two <= 2; ++two)
    for (int p = 0; p <= 1; ++p)
      for (int q = 0; q <= 1; ++q)
        for (int b = 0; b <= 4; ++b) out.push_back({two, p, q, b});
  return out;
}

TEST(Factors, FormatParseRoundTrip) {
  for (const Exponents& e : all_divisors()) {
    const std::string text = epq::format_factor(e);
    ASSERT_EQ(epq::parse_factor(text), e) << text;
  }
  EXPECT_EQ(epq::format_factor({0, 0, 0, 0}), "1");
  EXPECT_EQ(epq::format_factor(epq::kFullExponents), "4pqb^4");
  EXPECT_EQ(epq::format_factor({1, 1, 0, 4}), "2pb^4");
  EXPECT_EQ(epq::format_factor({0, 0, 0, 1}), "b");
}

TEST(Factors, ParseRejectsGarbage) {
  EXPECT_THROW(epq::parse_factor("3p"), epq::DomainError);
  EXPECT_THROW(epq::parse_factor("pp"), epq::DomainError);
  EXPECT_THROW(epq::parse_factor("b^5"), epq::DomainError);
  EXPECT_THROW(epq::parse_factor(""), epq::DomainError);
}

TEST(Factors, ValueIsTheProduct) {
  EXPECT_EQ(epq::factor_value({2, 1, 1, 4}, 3, 5, 2), 4 * 3 * 5 * 16);
  EXPECT_EQ(epq::factor_value({0, 0, 0, 0}, 3, 5, 2), 1);
  EXPECT_EQ(epq::factor_value({1, 0, 1, 3}, 3, 5, 7), 2 * 5 * 343);
}

TEST(Splits, SixtyDistinctCoveringEveryDivisor) {
  const auto splits = epq::enumerate_splits();
  ASSERT_EQ(splits.size(), 60u);
  std::set<Exponents> lows;
  std::set<int> ids;
  for (const auto& s : splits) {
    lows.insert(s.low);
    ids.insert(s.case_id);
    const Exponents sum{s.low.two + s.high.two, s.low.p + s.high.p, s.low.q + s.high.q, s.low.b + s.high.b};
    ASSERT_EQ(sum, epq::kFullExponents) << s.case_id;
    ASSERT_EQ(epq::complement(s.low), s.high);
  }
  EXPECT_EQ(lows.size(), 60u);
  EXPECT_EQ(ids.size(), 60u);
  const auto divisors = all_divisors();
  EXPECT_EQ(lows, std::set<Exponents>(divisors.begin(), divisors.end()));
}

TEST(Splits, SetEqualToTable) {
  std::set<std::pair<int, Exponents>> generated, table;
  for (const auto& s : epq::enumerate_splits()) generated.insert({s.case_id, s.low});
  for (const auto& row : epq::case_table()) {
    table.insert({row.case_id, epq::parse_factor(row.low)});
    ASSERT_EQ(epq::complement(epq::parse_factor(row.low)), epq::parse_factor(row.high)) << row.case_id;
  }
  EXPECT_EQ(generated, table);
}

TEST(Splits, Examples) {
  const auto& s17 = epq::split_for(17);
  EXPECT_EQ(epq::format_factor(s17.low), "2pb^4");
  EXPECT_EQ(epq::format_factor(s17.high), "2q");
  const auto& s56 = epq::split_for(56);
  EXPECT_EQ(epq::format_factor(s56.low), "2pq");
  EXPECT_EQ(epq::format_factor(s56.high), "2b^4");
  EXPECT_THROW(epq::split_for(0), epq::DomainError);
  EXPECT_THROW(epq::split_for(61), epq::DomainError);
}

TEST(Splits, MirrorRowsAreDistinct) {
  // 22 and 52 swap p and q.
  const auto& a = epq::split_for(22);
  const auto& b = epq::split_for(52);
  EXPECT_EQ(a.low.p, b.low.q);
  EXPECT_EQ(a.low.q, b.low.p);
  EXPECT_NE(a.low, b.low);
}

TEST(Classification, Examples) {
  const auto c7 = epq::classify(7);
  EXPECT_EQ(c7.verdict, Verdict::Unsolvable);
  EXPECT_EQ(c7.reason, 'c');
  const auto c8 = epq::classify(8);
  EXPECT_EQ(c8.verdict, Verdict::Redundant);
  EXPECT_EQ(c8.parent, 17);
  EXPECT_EQ(epq::classify(26).verdict, Verdict::Solvable);
  const auto c44 = epq::classify(44);
  EXPECT_EQ(c44.parent, 17);
  EXPECT_THROW(epq::classify(61), epq::DomainError);
}

TEST(Classification, ExactlySixSolvable) {
  std::set<int> solvable;
  for (int id = 1; id <= 60; ++id)
    if (epq::classify(id).verdict == Verdict::Solvable) solvable.insert(id);
  EXPECT_EQ(solvable, (std::set<int>{17, 26, 32, 40, 47, 56}));
}

TEST(Classification, NoRedundancyChains) {
  for (int id = 1; id <= 60; ++id) {
    const auto c = epq::classify(id);
    if (c.verdict != Verdict::Redundant) continue;
    ASSERT_NE(epq::classify(c.parent).verdict, Verdict::Redundant) << id;
    ASSERT_FALSE(c.reductions.empty()) << id;
    for (const auto& r : c.reductions) ASSERT_NE(epq::classify(r.parent).verdict, Verdict::Redundant) << id;
  }
}

TEST(Classification, UnsolvableCarriesReason) {
  for (int id = 1; id <= 60; ++id) {
    const auto c = epq::classify(id);
    if (c.verdict == Verdict::Unsolvable) {
      ASSERT_GE(c.reason, 'a');
      ASSERT_LE(c.reason, 'f');
    }
  }
}

TEST(Oracle, Examples) {
  EXPECT_EQ(epq::oracle_witness(epq::split_for(40), 3, 7, 200), (epq::Witness{2, 1}));
  EXPECT_FALSE(epq::oracle_witness(epq::split_for(9), 3, 5, 10));
  EXPECT_EQ(epq::oracle_witness(epq::split_for(56), 3, 5, 200), (epq::Witness{1, 2}));
}

// For every split and every witness the oracle accepts: with c = (d1 + d2)/2,
// c^2 = a^4 + 4pqb^4, c - a^2 = d1 and c + a^2 = d2.
TEST(Oracle, FactorIdentity) {
  const auto primes = oracle::odd_primes_upto(60);
  int accepted = 0;
  for (const auto& s : epq::enumerate_splits()) {
    for (std::size_t i = 0; i < primes.size(); ++i)
      for (std::size_t j = i + 1; j < primes.size(); ++j) {
        const Natural p = primes[i], q = primes[j];
        const auto w = epq::oracle_witness(s, p, q, 6);
        if (!w) continue;
        ++accepted;
        const epq::Integer d1 = epq::factor_value(s.low, p, q, w->b);
        const epq::Integer d2 = epq::factor_value(s.high, p, q, w->b);
        const epq::Integer a2 = w->a * w->a;
        ASSERT_EQ((d1 + d2) % 2, 0);
        const epq::Integer c = (d1 + d2) / 2;
        ASSERT_EQ(c * c, a2 * a2 + 4 * p * q * w->b * w->b * w->b * w->b) << s.case_id;
        ASSERT_EQ(c - a2, d1);
        ASSERT_EQ(c + a2, d2);
        ASSERT_EQ(epq::gcd(w->a, w->b), 1);
        ASSERT_TRUE(epq::satisfies_split(s, p, q, *w));
      }
  }
  EXPECT_GT(accepted, 100);
}

// The oracle is the smallest b with a positive integer a, so a hand-written
// search over (b, a) must agree with it.
TEST(Oracle, AgreesWithExhaustiveSearch) {
  const auto primes = oracle::odd_primes_upto(40);
  for (int id : {3, 8, 17, 23, 26, 29, 45, 56, 59}) {
    const auto& s = epq::split_for(id);
    for (std::size_t i = 0; i < primes.size(); ++i)
      for (std::size_t j = i + 1; j < primes.size(); ++j) {
        const Natural p = primes[i], q = primes[j];
        std::optional<epq::Witness> expected;
        for (unsigned long b = 1; b <= 5 && !expected; ++b) {
          const epq::Integer diff = epq::factor_value(s.high, p, q, b) - epq::factor_value(s.low, p, q, b);
          for (unsigned long a = 1; 2 * epq::Integer(a) * a <= diff; ++a)
            if (2 * epq::Integer(a) * a == diff && oracle::gcd(a, b) == 1) expected = epq::Witness{a, b};
        }
        ASSERT_EQ(epq::oracle_witness(s, p, q, 5), expected) << id << " " << p << " " << q;
      }
  }
}

TEST(Oracle, RedundantWitnessesMapIntoParents) {
  const auto primes = oracle::odd_primes_upto(100);
  for (int id = 1; id <= 60; ++id) {
    const auto c = epq::classify(id);
    if (c.verdict != Verdict::Redundant) continue;
    for (std::size_t i = 0; i < primes.size(); ++i)
      for (std::size_t j = i + 1; j < primes.size(); ++j) {
        const Natural p = primes[i], q = primes[j];
        const auto w = epq::oracle_witness(epq::split_for(id), p, q, 10);
        if (!w) continue;
        bool mapped = false;
        for (const auto& r : c.reductions)
          if (w->b == r.b && epq::satisfies_split(epq::split_for(r.parent), p, q, *w)) mapped = true;
        ASSERT_TRUE(mapped) << "case " << id << " p=" << p << " q=" << q << " " << w->str();
      }
  }
}

}  // namespace
