#include "epq/verification.hpp"

#include <algorithm>
#include <set>

#include "epq/analysis.hpp"
#include "epq/cases.hpp"
#include "epq/primes.hpp"

namespace epq {

namespace {

RationalPoint pt(Rational x, Rational y) { return {std::move(x), std::move(y)}; }
Rational frac(long n, long d) { return Rational(Integer(n), Integer(d)); }

CheckResult check_sample(const SampleCurve& s, const WitnessFinder& finder) {
  CheckResult r{"sample curve case " + std::to_string(case_id(s.case_id)), false, {}};
  if (!verify_condition(s.case_id, s.p, s.q, s.witness)) {
    r.detail = "sample " + s.witness.str() + " does not satisfy " + std::string(condition_text(s.case_id));
    return r;
  }
  const Curve curve(s.p, s.q);
  const auto [first, second] = intersect(s.witness, curve);
  if (first != s.first || second != s.second) {
    r.detail = "points " + first.str() + ", " + second.str() + " differ from " + s.first.str() + ", " +
               s.second.str();
    return r;
  }
  if (!is_on_curve(first, curve) || !is_on_curve(second, curve)) {
    r.detail = "points not on " + curve.equation();
    return r;
  }
  const auto found = finder(s.case_id, s.p, s.q, kDefaultBMax);
  if (!found) {
    r.detail = "solver found no witness for (p,q) = (" + s.p.get_str() + "," + s.q.get_str() + ")";
    return r;
  }
  if (*found != s.first_hit || !verify_condition(s.case_id, s.p, s.q, *found)) {
    r.detail = "solver returned " + found->str() + ", expected " + s.first_hit.str();
    return r;
  }
  r.passed = true;
  r.detail = curve.equation() + ": " + first.str() + ", " + second.str();
  return r;
}

std::vector<std::uint32_t> odd_primes_up_to(std::uint32_t limit) {
  const PrimeTable table(limit);
  const auto odd = table.odd_primes();
  return {odd.begin(), odd.end()};
}

}  // namespace

const std::vector<SampleCurve>& sample_curves() {
  static const std::vector<SampleCurve> rows{
      {SolvableCase::Case17, {8, 3}, 3, 307, pt(frac(307, 9), frac(2456, 27)), pt(-27L, -72L), {8, 3}, ""},
      {SolvableCase::Case26, {7, 2}, 5, 13, pt(frac(65, 4), frac(455, 8)), pt(-4L, -14L), {8, 1}, "135200.bq1"},
      {SolvableCase::Case32, {1432, 5}, 17, 193, pt(82025L, 23491960L), pt(frac(-1, 25), frac(-1432, 125)),
       {1432, 5}, ""},
      {SolvableCase::Case40, {2, 1}, 3, 7, pt(7L, 14L), pt(-3L, -6L), {2, 1}, "14112.r1"},
      {SolvableCase::Case47, {5, 2}, 3, 23, pt(12L, 30L), pt(frac(-23, 4), frac(-115, 8)), {5, 2}, "152352.ba1"},
      {SolvableCase::Case56, {1, 2}, 3, 5, pt(4L, 2L), pt(frac(-15, 4), frac(-15, 8)), {1, 2}, "14400.cq1"},
  };
  return rows;
}

std::vector<CheckResult> run_reference_checks(const VerificationOptions& options, WitnessFinder finder) {
  if (!finder)
    finder = [](SolvableCase c, const Natural& p, const Natural& q, std::uint32_t b_max) {
      return find_witness(c, p, q, b_max);
    };

  std::vector<CheckResult> results;
  for (const SampleCurve& s : sample_curves()) results.push_back(check_sample(s, finder));

  {
    CheckResult r{"case catalog: 60 distinct splits", false, {}};
    const auto splits = enumerate_splits();
    std::set<Exponents> lows;
    std::set<int> ids;
    bool table_ok = true;
    for (const auto& s : splits) {
      lows.insert(s.low);
      ids.insert(s.case_id);
      const auto& row = case_table()[static_cast<std::size_t>(s.case_id - 1)];
      table_ok = table_ok && parse_factor(row.low) == s.low && parse_factor(row.high) == s.high;
    }
    r.passed = splits.size() == 60 && lows.size() == 60 && ids.size() == 60 && table_ok;
    r.detail = std::to_string(splits.size()) + " splits, " + std::to_string(lows.size()) + " distinct";
    results.push_back(std::move(r));
  }
  {
    CheckResult r{"case catalog: solvable set", false, {}};
    std::vector<int> solvable;
    for (int id = 1; id <= kCaseCount; ++id)
      if (classify(id).verdict == Verdict::Solvable) solvable.push_back(id);
    r.passed = solvable == std::vector<int>{17, 26, 32, 40, 47, 56};
    for (int id : solvable) r.detail += std::to_string(id) + " ";
    results.push_back(std::move(r));
  }

  const auto small = odd_primes_up_to(options.oracle_prime_limit);
  for (int id = 1; id <= kCaseCount; ++id) {
    const CaseClassification cls = classify(id);
    if (cls.verdict == Verdict::Solvable) {
      CheckResult r{"oracle case " + std::to_string(id) + " has witnesses", false, {}};
      const SolvableCase c = *solvable_case(id);
      std::size_t hits = 0;
      bool consistent = true;
      for (std::size_t i = 0; i < small.size(); ++i)
        for (std::size_t j = i + 1; j < small.size(); ++j) {
          const Natural p = small[i], q = small[j];
          auto w = oracle_witness(split_for(id), p, q, options.oracle_b_max);
          if (!w) continue;
          ++hits;
          consistent = consistent && verify_condition(c, p, q, *w);
        }
      r.passed = hits > 0 && consistent;
      r.detail = std::to_string(hits) + " pairs";
      results.push_back(std::move(r));
      continue;
    }

    const bool unsolvable = cls.verdict == Verdict::Unsolvable;
    CheckResult r{"oracle case " + std::to_string(id) + " " + verdict_text(cls), true, {}};
    std::size_t hits = 0;
    for (std::size_t i = 0; i < small.size() && r.passed; ++i)
      for (std::size_t j = i + 1; j < small.size() && r.passed; ++j) {
        const Natural p = small[i], q = small[j];
        auto w = oracle_witness(split_for(id), p, q, options.oracle_b_max);
        if (!w) continue;
        ++hits;
        if (unsolvable) {
          r.passed = false;
          r.detail = "witness " + w->str() + " at (" + p.get_str() + "," + q.get_str() + ")";
          break;
        }
        auto red = std::find_if(cls.reductions.begin(), cls.reductions.end(),
                                [&](const Reduction& x) { return w->b == x.b; });
        if (red == cls.reductions.end() || !satisfies_split(split_for(red->parent), p, q, *w)) {
          r.passed = false;
          r.detail = "witness " + w->str() + " at (" + p.get_str() + "," + q.get_str() + ") has no parent";
        }
      }
    if (r.passed) r.detail = std::to_string(hits) + " witnesses";
    results.push_back(std::move(r));
  }

  {
    CheckResult r{"case 56 characterization", true, {}};
    const auto primes = odd_primes_up_to(options.case56_prime_limit);
    std::size_t hits = 0;
    for (std::size_t i = 0; i < primes.size() && r.passed; ++i)
      for (std::size_t j = i + 1; j < primes.size(); ++j) {
        const Natural p = primes[i], q = primes[j];
        const auto direct = finder(SolvableCase::Case56, p, q, kDefaultBMax);
        const auto closed = case56_characterize(p, q);
        if (direct != closed) {
          r.passed = false;
          r.detail = "mismatch at (" + p.get_str() + "," + q.get_str() + ")";
          break;
        }
        hits += direct.has_value();
      }
    if (r.passed) r.detail = std::to_string(hits) + " pairs agree";
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace epq
