#pragma once

// Quantitative checks on scan reports, all in odd-prime index coordinates
// (x = index of q, y = index of p), the same axes the rendered images use.

#include <cstdint>
#include <optional>
#include <span>

#include "epq/primes.hpp"
#include "epq/scan.hpp"
#include "epq/witness.hpp"

namespace epq {

struct CircleSpec {
  double x0 = -1051.0;
  double y0 = -1051.0;
  double radius = 1700.0;
  double eps = 5.0;  // half-width of the capture band
};

struct SlopeFit {
  double slope = 0.0;
  std::size_t sample_count = 0;
  double residual = 0.0;  // RMS of y - slope*x
};

struct IndexPoint {
  double x;
  double y;
};

/// Witness ((q-p)/2, sqrt((p+q)/2)) when (p+q)/2 is a perfect square.
std::optional<Witness> case56_characterize(const Natural& p, const Natural& q);

/// Least squares y = slope * x through the origin. Throws AnalysisError on empty input.
SlopeFit fit_through_origin(std::span<const IndexPoint> points);

/// Fit over case-47 solutions whose witness has b == b_filter.
/// With max_a2_share set, only witnesses with a^2 <= share * b^4 * p are kept,
/// i.e. points close to the q = b^4 p edge.
SlopeFit fit_slope(const ScanReport& report, const PrimeTable& table, std::uint32_t b_filter = 2,
                   std::optional<double> max_a2_share = std::nullopt);

struct CircleCapture {
  std::size_t captured = 0;
  std::size_t total = 0;
};

bool in_circle_band(const IndexPoint& pt, const CircleSpec& spec);
CircleCapture circle_capture(const ScanReport& report, const PrimeTable& table, const CircleSpec& spec);

double transform_factor(double p_max, double q_max);

struct DensitySummary {
  std::uint32_t split = 0;  // bands are p < split and p >= split
  std::size_t below = 0;
  std::size_t above = 0;
  std::size_t pairs_below = 0;  // candidate pairs p < q <= p_max in each band
  std::size_t pairs_above = 0;
  std::size_t total = 0;

  double density_below() const { return pairs_below ? double(below) / double(pairs_below) : 0.0; }
  double density_above() const { return pairs_above ? double(above) / double(pairs_above) : 0.0; }
};

/// split == 0 uses p_max / 16 (437 for p_max = 6997).
DensitySummary density_summary(const ScanReport& report, const PrimeTable& table, std::uint32_t split = 0);

}  // namespace epq
