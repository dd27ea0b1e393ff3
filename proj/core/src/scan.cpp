#include "epq/scan.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include <zlib.h>

#include "epq/errors.hpp"

namespace epq {

namespace {

constexpr std::string_view kHeader = "case,p,q,a,b\n";

std::string body_text(const ScanReport& report) {
  std::string out(kHeader);
  const std::string id = std::to_string(case_id(report.config.case_id));
  for (const Solution& s : report.solutions) {
    out += id;
    out += ',';
    out += std::to_string(s.p);
    out += ',';
    out += std::to_string(s.q);
    out += ',';
    out += s.witness.a.get_str();
    out += ',';
    out += s.witness.b.get_str();
    out += '\n';
  }
  return out;
}

std::uint32_t crc_of(std::string_view bytes) {
  uLong crc = crc32(0L, Z_NULL, 0);
  crc = crc32(crc, reinterpret_cast<const Bytef*>(bytes.data()), static_cast<uInt>(bytes.size()));
  return static_cast<std::uint32_t>(crc);
}

std::string hex32(std::uint32_t v) {
  char buf[9];
  std::snprintf(buf, sizeof buf, "%08x", v);
  return buf;
}

template <typename T>
T parse_number(std::string_view s, int base = 10) {
  T v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v, base);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw CorruptReport("bad number '" + std::string(s) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

Natural parse_natural(std::string_view s) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw CorruptReport("bad integer '" + std::string(s) + "'");
  return Natural(std::string(s));
}

}  // namespace

SolutionMatrix::SolutionMatrix(std::vector<std::uint32_t> axis_primes)
    : axis_(std::move(axis_primes)), bits_(axis_.size() * axis_.size(), false) {}

SolutionMatrix SolutionMatrix::from_report(const ScanReport& report, const PrimeTable& table) {
  if (table.limit() < report.config.p_max) throw DomainError("prime table smaller than report p_max");
  std::vector<std::uint32_t> axis;
  for (std::uint32_t p : table.odd_primes())
    if (p <= report.config.p_max) axis.push_back(p);
  SolutionMatrix m(std::move(axis));
  for (const Solution& s : report.solutions) m.add(s);
  return m;
}

std::uint32_t SolutionMatrix::index_of(std::uint32_t prime) const {
  auto it = std::lower_bound(axis_.begin(), axis_.end(), prime);
  if (it == axis_.end() || *it != prime) throw DomainError(std::to_string(prime) + " is not on the matrix axis");
  return static_cast<std::uint32_t>(it - axis_.begin());
}

bool SolutionMatrix::test(std::uint32_t row, std::uint32_t col) const {
  if (row >= side() || col >= side()) return false;
  return bits_[std::size_t{row} * side() + col];
}

void SolutionMatrix::add(const Solution& s) {
  if (s.p >= s.q) throw DomainError("solution needs p < q");
  const std::uint32_t row = index_of(s.p);
  const std::uint32_t col = index_of(s.q);
  bits_[std::size_t{row} * side() + col] = true;
  witnesses_[{s.p, s.q}] = s.witness;
}

ScanResult scan(const ScanConfig& config, const PrimeTable& table, unsigned threads) {
  if (config.p_max < 3) throw DomainError("p_max must be at least 3");
  if (config.b_max < 1 || config.b_max > kMaxBMax) throw DomainError("b_max must lie in [1, 65535]");
  if (table.limit() < config.p_max) throw DomainError("prime table smaller than p_max");

  std::vector<std::uint32_t> axis;
  for (std::uint32_t p : table.odd_primes())
    if (p <= config.p_max) axis.push_back(p);

  const Prefilter filter = config.prefilter ? Prefilter::Mod4 : Prefilter::Off;
  std::vector<std::vector<Solution>> rows(axis.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < axis.size(); i = next.fetch_add(1)) {
      const Natural p = axis[i];
      for (std::size_t j = i + 1; j < axis.size(); ++j) {
        if (auto w = find_witness(config.case_id, p, Natural(axis[j]), config.b_max, filter))
          rows[i].push_back({axis[i], axis[j], std::move(*w)});
      }
    }
  };

  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(axis.size(), 1)));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }

  ScanResult result{ScanReport{config, {}, 0}, SolutionMatrix(axis)};
  for (auto& row : rows)
    for (auto& s : row) {
      result.matrix.add(s);
      result.report.solutions.push_back(std::move(s));
    }
  result.report.checksum = report_checksum(result.report);
  return result;
}

std::uint32_t report_checksum(const ScanReport& report) { return crc_of(body_text(report)); }

std::string serialize_report(const ScanReport& report) {
  std::string out = body_text(report);
  const std::uint32_t crc = crc_of(out);
  out += "# case=" + std::to_string(case_id(report.config.case_id)) +
         " pmax=" + std::to_string(report.config.p_max) + " bmax=" + std::to_string(report.config.b_max) +
         " solutions=" + std::to_string(report.solutions.size()) + " crc32=" + hex32(crc) + "\n";
  return out;
}

ScanReport parse_report(std::string_view text) {
  if (!text.starts_with(kHeader)) throw CorruptReport("missing 'case,p,q,a,b' header");
  if (!text.ends_with('\n')) throw CorruptReport("report does not end with a newline (truncated?)");

  const std::size_t footer_pos = text.rfind('\n', text.size() - 2);
  const std::string_view footer = text.substr(footer_pos + 1, text.size() - footer_pos - 2);
  const std::string_view body = text.substr(0, footer_pos + 1);
  if (!footer.starts_with("# ")) throw CorruptReport("missing footer line (truncated?)");

  std::map<std::string, std::string_view, std::less<>> fields;
  for (std::string_view kv : split(footer.substr(2), ' ')) {
    const std::size_t eq = kv.find('=');
    if (eq == std::string_view::npos) throw CorruptReport("bad footer field '" + std::string(kv) + "'");
    fields[std::string(kv.substr(0, eq))] = kv.substr(eq + 1);
  }
  for (const char* key : {"case", "pmax", "bmax", "solutions", "crc32"})
    if (!fields.contains(key)) throw CorruptReport(std::string("footer lacks '") + key + "'");

  const std::uint32_t expected = parse_number<std::uint32_t>(fields["crc32"], 16);
  if (crc_of(body) != expected) throw CorruptReport("checksum mismatch");

  ScanReport report;
  const auto id = solvable_case(parse_number<int>(fields["case"]));
  if (!id) throw CorruptReport("footer names a case that is not solvable");
  report.config.case_id = *id;
  report.config.p_max = parse_number<std::uint32_t>(fields["pmax"]);
  report.config.b_max = parse_number<std::uint32_t>(fields["bmax"]);

  const std::string_view rows = body.substr(kHeader.size());
  std::size_t start = 0;
  while (start < rows.size()) {
    const std::size_t end = rows.find('\n', start);
    const auto cols = split(rows.substr(start, end - start), ',');
    start = end + 1;
    if (cols.size() != 5) throw CorruptReport("row does not have 5 columns");
    if (parse_number<int>(cols[0]) != case_id(*id)) throw CorruptReport("row case differs from footer");
    Solution s{parse_number<std::uint32_t>(cols[1]), parse_number<std::uint32_t>(cols[2]),
               Witness{parse_natural(cols[3]), parse_natural(cols[4])}};
    if (!report.solutions.empty()) {
      const Solution& prev = report.solutions.back();
      if (std::pair(prev.p, prev.q) >= std::pair(s.p, s.q)) throw CorruptReport("rows not sorted by (p, q)");
    }
    report.solutions.push_back(std::move(s));
  }
  if (report.solutions.size() != parse_number<std::size_t>(fields["solutions"]))
    throw CorruptReport("solution count differs from footer");
  report.checksum = expected;
  return report;
}

void save_report(const ScanReport& report, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  const std::string text = serialize_report(report);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

ScanReport load_report(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_report(ss.str());
}

}  // namespace epq
