#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "epq/analysis.hpp"
#include "epq/errors.hpp"
#include "support/oracles.hpp"

namespace {

using epq::IndexPoint;
using epq::SolvableCase;
using epq::Witness;

epq::ScanReport report_of(SolvableCase c, std::uint32_t p_max) {
  epq::ScanReport r;
  r.config.case_id = c;
  r.config.p_max = p_max;
  return r;
}

// A report whose points sit at the given (idx q, idx p) cells.
epq::ScanReport report_at(SolvableCase c, const epq::PrimeTable& t, const std::vector<std::pair<int, int>>& cells,
                          unsigned b = 2) {
  auto r = report_of(c, t.limit());
  for (auto [x, y] : cells) r.solutions.push_back({t.nth_odd_prime(y), t.nth_odd_prime(x), Witness{1, b}});
  return r;
}

TEST(Case56Characterize, Examples) {
  EXPECT_EQ(epq::case56_characterize(3, 5), (Witness{1, 2}));
  EXPECT_EQ(epq::case56_characterize(7, 11), (Witness{2, 3}));
  EXPECT_FALSE(epq::case56_characterize(3, 7));
}

TEST(Case56Characterize, MatchesPerfectSquareRule) {
  const auto primes = oracle::odd_primes_upto(2000);
  for (std::size_t i = 0; i < primes.size(); ++i)
    for (std::size_t j = i + 1; j < primes.size(); ++j) {
      const auto b = oracle::exact_sqrt((primes[i] + primes[j]) / 2);
      const auto w = epq::case56_characterize(primes[i], primes[j]);
      ASSERT_EQ(w.has_value(), b.has_value());
      if (w) {
        ASSERT_EQ(w->b, *b);
        ASSERT_EQ(w->a, (primes[j] - primes[i]) / 2);
      }
    }
}

TEST(FitThroughOrigin, RecoversExactLine) {
  const std::vector<IndexPoint> pts = {{200, 19}, {400, 38}, {600, 57}, {20, 1.9}};
  const auto fit = epq::fit_through_origin(pts);
  EXPECT_NEAR(fit.slope, 0.095, 1e-15);
  EXPECT_NEAR(fit.residual, 0.0, 1e-12);
  EXPECT_EQ(fit.sample_count, 4u);
}

TEST(FitThroughOrigin, SinglePointIsTheRatio) {
  const std::vector<IndexPoint> pts = {{900, 84}};
  EXPECT_DOUBLE_EQ(epq::fit_through_origin(pts).slope, 84.0 / 900.0);
}

TEST(FitThroughOrigin, RandomCollinearInput) {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> slope(-3, 3), x(1, 1000);
  for (int k = 0; k < 200; ++k) {
    const double m = slope(rng);
    std::vector<IndexPoint> pts;
    for (int i = 0; i < 50; ++i) {
      const double xi = x(rng);
      pts.push_back({xi, m * xi});
    }
    ASSERT_NEAR(epq::fit_through_origin(pts).slope, m, 1e-12);
  }
}

TEST(FitThroughOrigin, Errors) {
  EXPECT_THROW(epq::fit_through_origin({}), epq::AnalysisError);
  const std::vector<IndexPoint> vertical = {{0, 1}, {0, 5}};
  EXPECT_THROW(epq::fit_through_origin(vertical), epq::AnalysisError);
}

TEST(FitSlope, MatchesClosedFormOnAScan) {
  const auto t = epq::sieve(3000);
  epq::ScanConfig cfg;
  cfg.case_id = SolvableCase::Case47;
  cfg.p_max = 3000;
  const auto r = epq::scan(cfg, t).report;
  long double sxy = 0, sxx = 0;
  std::size_t n = 0;
  for (const auto& s : r.solutions) {
    if (s.witness.b != 2) continue;
    const long double x = t.odd_prime_index(s.q), y = t.odd_prime_index(s.p);
    sxy += x * y;
    sxx += x * x;
    ++n;
  }
  const auto fit = epq::fit_slope(r, t, 2);
  EXPECT_EQ(fit.sample_count, n);
  EXPECT_NEAR(fit.slope, double(sxy / sxx), 1e-12);
}

TEST(FitSlope, FiltersByB) {
  const auto t = epq::sieve(1000);
  auto r = report_at(SolvableCase::Case47, t, {{100, 10}, {50, 5}});
  r.solutions.push_back({t.nth_odd_prime(1), t.nth_odd_prime(100), Witness{1, 3}});
  EXPECT_EQ(epq::fit_slope(r, t, 2).sample_count, 2u);
  EXPECT_NEAR(epq::fit_slope(r, t, 2).slope, 0.1, 1e-15);
  EXPECT_EQ(epq::fit_slope(r, t, 3).sample_count, 1u);
  EXPECT_THROW(epq::fit_slope(r, t, 4), epq::AnalysisError);
}

TEST(FitSlope, SmallAShareKeepsOnlyEdgePoints) {
  const auto t = epq::sieve(1000);
  auto r = report_of(SolvableCase::Case47, 1000);
  // q = 16p - a^2 with p = 61: a = 3 sits on the edge, a = 15 does not
  r.solutions.push_back({61, 751, Witness{15, 2}});
  r.solutions.push_back({61, 967, Witness{3, 2}});
  EXPECT_EQ(epq::fit_slope(r, t, 2).sample_count, 2u);
  EXPECT_EQ(epq::fit_slope(r, t, 2, 0.1).sample_count, 1u);
  EXPECT_THROW(epq::fit_slope(r, t, 2, 0.0), epq::DomainError);
}

TEST(FitSlope, NeedsCase47) {
  const auto t = epq::sieve(100);
  auto r = report_at(SolvableCase::Case56, t, {{10, 1}});
  EXPECT_THROW(epq::fit_slope(r, t), epq::AnalysisError);
}

TEST(Circle, PointOnTheCircleIsCaptured) {
  epq::CircleSpec spec{0, 0, 5, 0.5};
  EXPECT_TRUE(epq::in_circle_band({3, 4}, spec));
  EXPECT_FALSE(epq::in_circle_band({3, 3}, spec));
  EXPECT_TRUE(epq::in_circle_band({-1051 + 1700, -1051}, epq::CircleSpec{}));
}

TEST(Circle, EmptyReport) {
  const auto t = epq::sieve(100);
  const auto c = epq::circle_capture(report_of(SolvableCase::Case56, 100), t, epq::CircleSpec{});
  EXPECT_EQ(c.captured, 0u);
  EXPECT_EQ(c.total, 0u);
}

TEST(Circle, RejectsBadSpecAndCase) {
  const auto t = epq::sieve(100);
  EXPECT_THROW(epq::circle_capture(report_of(SolvableCase::Case56, 100), t, {0, 0, 0, 1}), epq::DomainError);
  EXPECT_THROW(epq::circle_capture(report_of(SolvableCase::Case56, 100), t, {0, 0, 1, 0}), epq::DomainError);
  EXPECT_THROW(epq::circle_capture(report_of(SolvableCase::Case47, 100), t, {}), epq::AnalysisError);
}

TEST(Circle, AgreesWithIntegerBandAndIsMonotoneInEps) {
  const auto t = epq::sieve(6997);
  epq::ScanConfig cfg;
  cfg.case_id = SolvableCase::Case56;
  cfg.p_max = 6997;
  const auto r = epq::scan(cfg, t).report;
  std::size_t prev = 0;
  for (int eps = 1; eps <= 60; ++eps) {
    const epq::CircleSpec spec{-1051, -1051, 1700, double(eps)};
    std::size_t expected = 0;
    for (const auto& s : r.solutions)
      expected += oracle::in_band(t.odd_prime_index(s.q), t.odd_prime_index(s.p), -1051, -1051, 1700, eps);
    const auto got = epq::circle_capture(r, t, spec);
    ASSERT_EQ(got.captured, expected) << eps;
    ASSERT_GE(got.captured, prev);
    ASSERT_EQ(got.total, r.solutions.size());
    prev = got.captured;
  }
}

TEST(Transform, Examples) {
  EXPECT_NEAR(epq::transform_factor(437, 6997), 0.6867, 1e-4);
  EXPECT_DOUBLE_EQ(epq::transform_factor(6997, 6997), 1.0);
  EXPECT_NEAR(epq::transform_factor(1000, 10), 3.0, 1e-12);
  EXPECT_NEAR(epq::transform_factor(7, 49), 0.5, 1e-12);
  for (double x : {3.0, 17.5, 1e6}) EXPECT_DOUBLE_EQ(epq::transform_factor(x, x), 1.0);
  EXPECT_THROW(epq::transform_factor(2, 10), epq::DomainError);
}

TEST(Density, EmptyReportIsZero) {
  const auto t = epq::sieve(100);
  const auto d = epq::density_summary(report_of(SolvableCase::Case47, 100), t);
  EXPECT_EQ(d.below + d.above + d.total, 0u);
  EXPECT_EQ(d.density_below(), 0.0);
  EXPECT_EQ(d.density_above(), 0.0);
}

TEST(Density, CountsPairsPerBand) {
  const auto t = epq::sieve(100);
  auto r = report_of(SolvableCase::Case47, 100);
  r.solutions.push_back({3, 23, Witness{5, 2}});
  const auto d = epq::density_summary(r, t, 10);
  const auto primes = oracle::odd_primes_upto(100);
  std::size_t below = 0, above = 0;
  for (std::size_t i = 0; i < primes.size(); ++i)
    (primes[i] < 10 ? below : above) += primes.size() - i - 1;
  EXPECT_EQ(d.split, 10u);
  EXPECT_EQ(d.pairs_below, below);
  EXPECT_EQ(d.pairs_above, above);
  EXPECT_EQ(d.below, 1u);
  EXPECT_EQ(d.above, 0u);
  EXPECT_EQ(epq::density_summary(r, t).split, 100u / 16);
}

}  // namespace
