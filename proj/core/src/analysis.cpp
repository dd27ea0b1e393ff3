#include "epq/analysis.hpp"

#include <cmath>
#include <vector>

#include "epq/errors.hpp"

namespace epq {

namespace {

IndexPoint to_index(const Solution& s, const PrimeTable& table) {
  return {static_cast<double>(table.odd_prime_index(s.q)), static_cast<double>(table.odd_prime_index(s.p))};
}

void require_case(const ScanReport& report, SolvableCase expected) {
  if (report.config.case_id != expected)
    throw AnalysisError("analysis needs a case " + std::to_string(case_id(expected)) + " report");
}

}  // namespace

std::optional<Witness> case56_characterize(const Natural& p, const Natural& q) {
  if (q <= p) throw DomainError("expected p < q");
  const Natural sum = p + q;
  if (mpz_odd_p(sum.get_mpz_t())) return std::nullopt;
  auto b = perfect_square_root(Natural(sum / 2));
  if (!b) return std::nullopt;
  return Witness{Natural((q - p) / 2), std::move(*b)};
}

SlopeFit fit_through_origin(std::span<const IndexPoint> points) {
  if (points.empty()) throw AnalysisError("no points to fit");
  double sxx = 0.0;
  double sxy = 0.0;
  for (const auto& pt : points) {
    sxx += pt.x * pt.x;
    sxy += pt.x * pt.y;
  }
  if (sxx == 0.0) throw AnalysisError("all points lie on x = 0");
  SlopeFit fit;
  fit.slope = sxy / sxx;
  fit.sample_count = points.size();
  double ss = 0.0;
  for (const auto& pt : points) {
    const double r = pt.y - fit.slope * pt.x;
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / double(points.size()));
  return fit;
}

SlopeFit fit_slope(const ScanReport& report, const PrimeTable& table, std::uint32_t b_filter,
                   std::optional<double> max_a2_share) {
  require_case(report, SolvableCase::Case47);
  if (max_a2_share && !(*max_a2_share > 0.0)) throw DomainError("a^2 share must be positive");
  std::vector<IndexPoint> pts;
  for (const Solution& s : report.solutions) {
    if (s.witness.b != b_filter) continue;
    if (max_a2_share) {
      const double a = s.witness.a.get_d();
      const double b4 = std::pow(double(b_filter), 4);
      if (a * a > *max_a2_share * b4 * double(s.p)) continue;
    }
    pts.push_back(to_index(s, table));
  }
  if (pts.empty()) throw AnalysisError("no case 47 solutions with b = " + std::to_string(b_filter));
  return fit_through_origin(pts);
}

bool in_circle_band(const IndexPoint& pt, const CircleSpec& spec) {
  const double d = std::hypot(pt.x - spec.x0, pt.y - spec.y0);
  return std::abs(d - spec.radius) <= spec.eps;
}

CircleCapture circle_capture(const ScanReport& report, const PrimeTable& table, const CircleSpec& spec) {
  require_case(report, SolvableCase::Case56);
  if (!(spec.radius > 0.0) || !(spec.eps > 0.0)) throw DomainError("circle needs R > 0 and eps > 0");
  CircleCapture out;
  out.total = report.solutions.size();
  for (const Solution& s : report.solutions)
    if (in_circle_band(to_index(s, table), spec)) ++out.captured;
  return out;
}

double transform_factor(double p_max, double q_max) {
  if (p_max < 3.0 || q_max < 3.0) throw DomainError("transform factor needs p_max, q_max >= 3");
  return std::log(p_max) / std::log(q_max);
}

DensitySummary density_summary(const ScanReport& report, const PrimeTable& table, std::uint32_t split) {
  DensitySummary out;
  const std::uint32_t p_max = report.config.p_max;
  out.split = split ? split : p_max / 16;
  out.total = report.solutions.size();
  for (const Solution& s : report.solutions) (s.p < out.split ? out.below : out.above)++;

  std::vector<std::uint32_t> axis;
  for (std::uint32_t p : table.odd_primes())
    if (p <= p_max) axis.push_back(p);
  for (std::size_t i = 0; i < axis.size(); ++i) {
    const std::size_t partners = axis.size() - i - 1;
    (axis[i] < out.split ? out.pairs_below : out.pairs_above) += partners;
  }
  return out;
}

}  // namespace epq
