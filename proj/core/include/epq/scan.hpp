#pragma once

// Grid scan over all odd-prime pairs p < q <= p_max for one solvable case.
//
// Rows (one per p) are evaluated independently by a pool of workers and merged
// in row order, so the report is identical for every worker count.
//
// Report files are CSV:
//
//   case,p,q,a,b
//   47,3,23,5,2
//   ...
//   # case=47 pmax=6997 bmax=200 solutions=N crc32=xxxxxxxx
//
// The trailing comment line carries the configuration and a CRC-32 of every
// byte before it; a missing or mismatching footer marks the file corrupt.

#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "epq/primes.hpp"
#include "epq/witness.hpp"

namespace epq {

struct ScanConfig {
  SolvableCase case_id = SolvableCase::Case47;
  std::uint32_t p_max = 6997;
  std::uint32_t b_max = kDefaultBMax;
  bool prefilter = true;  // not persisted: it never changes results
};

struct Solution {
  std::uint32_t p = 0;
  std::uint32_t q = 0;
  Witness witness;

  friend bool operator==(const Solution&, const Solution&) = default;
};

struct ScanReport {
  ScanConfig config;
  std::vector<Solution> solutions;  // sorted by (p, q)
  std::uint32_t checksum = 0;

  std::size_t count() const { return solutions.size(); }
};

// Upper-triangular grid over odd-prime indices (row = index of p, column =
// index of q) plus the witness behind every set cell.
class SolutionMatrix {
 public:
  SolutionMatrix() = default;
  explicit SolutionMatrix(std::vector<std::uint32_t> axis_primes);

  static SolutionMatrix from_report(const ScanReport& report, const PrimeTable& table);

  std::uint32_t side() const { return static_cast<std::uint32_t>(axis_.size()); }
  std::span<const std::uint32_t> axis_primes() const { return axis_; }
  std::uint32_t index_of(std::uint32_t prime) const;

  bool test(std::uint32_t row, std::uint32_t col) const;
  /// Throws DomainError unless p < q are both on the axis.
  void add(const Solution& s);

  const std::map<std::pair<std::uint32_t, std::uint32_t>, Witness>& witnesses() const { return witnesses_; }
  std::size_t count() const { return witnesses_.size(); }

 private:
  std::vector<std::uint32_t> axis_;
  std::vector<bool> bits_;
  std::map<std::pair<std::uint32_t, std::uint32_t>, Witness> witnesses_;
};

struct ScanResult {
  ScanReport report;
  SolutionMatrix matrix;
};

/// threads == 0 picks std::thread::hardware_concurrency().
ScanResult scan(const ScanConfig& config, const PrimeTable& table, unsigned threads = 0);

std::uint32_t report_checksum(const ScanReport& report);
std::string serialize_report(const ScanReport& report);
/// Throws CorruptReport on malformed content or checksum mismatch.
ScanReport parse_report(std::string_view text);

void save_report(const ScanReport& report, const std::filesystem::path& path);
ScanReport load_report(const std::filesystem::path& path);

}  // namespace epq
