#pragma once

// Reference checks behind `epq verify-paper`: the six sample curves and their
// points, the 60-case catalog, the bounded oracle for every classification,
// and the case-56 perfect-square characterization.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "epq/curve.hpp"
#include "epq/witness.hpp"

namespace epq {

struct SampleCurve {
  SolvableCase case_id;
  Witness witness;
  Natural p;
  Natural q;
  RationalPoint first;
  RationalPoint second;
  Witness first_hit;  // canonical find_witness result at (p, q)
  const char* lmfdb_label;  // documentation only, may be empty
};

/// The six sample rows. Where only pq is fixed, p and q are its factorization.
const std::vector<SampleCurve>& sample_curves();

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

using WitnessFinder =
    std::function<std::optional<Witness>(SolvableCase, const Natural&, const Natural&, std::uint32_t)>;

struct VerificationOptions {
  std::uint32_t oracle_prime_limit = 100;
  std::uint32_t oracle_b_max = 10;
  std::uint32_t case56_prime_limit = 1000;
};

/// The finder defaults to find_witness; tests swap in faulty ones.
std::vector<CheckResult> run_reference_checks(const VerificationOptions& options = {},
                                              WitnessFinder finder = {});

}  // namespace epq
