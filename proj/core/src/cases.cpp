#include "epq/cases.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "epq/errors.hpp"

namespace epq {

namespace {

// Rows 22 and 52 are mirror images: 2qb^2 | 2pb^2 and 2pb^2 | 2qb^2.
constexpr std::array<CaseRow, kCaseCount> kRows{{
    {1, "4pqb^4", "1", "pq=(1-2a^2)/(4b^4)"},
    {2, "2pqb^4", "2", "pq=(1-a^2)/b^4"},
    {3, "pqb^4", "4", "pq=(4-2a^2)/b^4"},
    {4, "b^4", "4pq", "pq=(2a^2+b^4)/4"},
    {5, "b^3", "4pqb", "pq=(2a^2+b^3)/(4b)"},
    {6, "b^2", "4pqb^2", "pq=(2a^2+b^2)/(4b^2)"},
    {7, "b", "4pqb^3", "pq=(2a^2+b)/(4b^3)"},
    {8, "2pb", "2qb^3", "p=qb^2-a^2/b"},
    {9, "4qb^4", "p", "p=2a^2+4qb^4"},
    {10, "2qb^4", "2p", "p=a^2+qb^4"},
    {11, "qb^4", "4p", "p=(2a^2+qb^4)/4"},
    {12, "qb^3", "4pb", "p=(2a^2+qb^3)/(4b)"},
    {13, "qb^2", "4pb^2", "p=(2a^2+qb^2)/(4b^2)"},
    {14, "qb", "4pb^3", "p=(2a^2+qb)/(4b^3)"},
    {15, "2qb", "2pb^3", "q=pb^2-a^2/b"},
    {16, "4pb^4", "q", "q=2a^2+4pb^4"},
    {17, "2pb^4", "2q", "q=a^2+pb^4"},
    {18, "pb^4", "4q", "q=(2a^2+pb^4)/4"},
    {19, "pb^3", "4qb", "q=(2a^2+pb^3)/(4b)"},
    {20, "pb^2", "4qb^2", "q=(2a^2+pb^2)/(4b^2)"},
    {21, "pb", "4qb^3", "q=(2a^2+pb)/(4b^3)"},
    {22, "2qb^2", "2pb^2", "p=q+a^2/b^2"},
    {23, "2b", "2pqb^3", "pq=(a^2+b)/b^3"},
    {24, "2b^2", "2pqb^2", "pq=(a^2+b^2)/b^2"},
    {25, "2b^3", "2pqb", "pq=(a^2+b^3)/b"},
    {26, "2b^4", "2pq", "pq=a^2+b^4"},
    {27, "4b", "pqb^3", "pq=(2a^2+4b)/b^3"},
    {28, "4b^2", "pqb^2", "pq=(2a^2+4b^2)/b^2"},
    {29, "4b^3", "pqb", "pq=(2a^2+4b^3)/b"},
    {30, "4b^4", "pq", "pq=2a^2+4b^4"},
    {31, "1", "4pqb^4", "pq=(2a^2+1)/(4b^4)"},
    {32, "2", "2pqb^4", "pq=(a^2+1)/b^4"},
    {33, "4", "pqb^4", "pq=(2a^2+4)/b^4"},
    {34, "4pq", "b^4", "pq=(b^4-2a^2)/4"},
    {35, "4pqb", "b^3", "pq=(b^3-2a^2)/(4b)"},
    {36, "4pqb^2", "b^2", "pq=(b^2-2a^2)/(4b^2)"},
    {37, "4pqb^3", "b", "pq=(b-2a^2)/(4b^3)"},
    {38, "2qb^3", "2pb", "p=qb^2+a^2/b"},
    {39, "p", "4qb^4", "p=4qb^4-2a^2"},
    {40, "2p", "2qb^4", "p=qb^4-a^2"},
    {41, "4p", "qb^4", "p=(qb^4-2a^2)/4"},
    {42, "4pb", "qb^3", "p=(qb^3-2a^2)/(4b)"},
    {43, "4pb^2", "qb^2", "p=(qb^2-2a^2)/(4b^2)"},
    {44, "4pb^3", "qb", "p=(qb-2a^2)/(4b^3)"},
    {45, "2pb^3", "2qb", "q=pb^2+a^2/b"},
    {46, "q", "4pb^4", "q=4pb^4-2a^2"},
    {47, "2q", "2pb^4", "q=pb^4-a^2"},
    {48, "4q", "pb^4", "q=(pb^4-2a^2)/4"},
    {49, "4qb", "pb^3", "q=(pb^3-2a^2)/(4b)"},
    {50, "4qb^2", "pb^2", "q=(pb^2-2a^2)/(4b^2)"},
    {51, "4qb^3", "pb", "q=(pb-2a^2)/(4b^3)"},
    {52, "2pb^2", "2qb^2", "p=q-a^2/b^2"},
    {53, "2pqb^3", "2b", "pq=(b-a^2)/b^3"},
    {54, "2pqb^2", "2b^2", "pq=(b^2-a^2)/b^2"},
    {55, "2pqb", "2b^3", "pq=(b^3-a^2)/b"},
    {56, "2pq", "2b^4", "pq=b^4-a^2"},
    {57, "pqb^3", "4b", "pq=(4b-2a^2)/b^3"},
    {58, "pqb^2", "4b^2", "pq=(4b^2-2a^2)/b^2"},
    {59, "pqb", "4b^3", "pq=(4b^3-2a^2)/b"},
    {60, "pq", "4b^4", "pq=4b^4-2a^2"},
}};

struct UnsolvableGroup {
  char reason;
  std::string_view note;
  std::initializer_list<int> cases;
};

const std::array<UnsolvableGroup, 6>& unsolvable_groups() {
  static const std::array<UnsolvableGroup, 6> groups{{
      {'a', "an integer pq needs the numerator to exceed the denominator", {1, 2, 3, 37, 53, 54}},
      {'b', "b must be even, hence a odd, yet halving the condition forces a even",
       {4, 5, 6, 11, 12, 13, 18, 19, 20, 27, 28, 33, 34, 35, 36, 41, 42, 43, 48, 49, 50, 57, 58}},
      {'c', "b = 2t gives (16t^2pq - 1)t = a^2, and 16t^2pq - 1 = 3 (mod 4) is no square", {7}},
      {'d', "contradicts p < q", {9, 10, 22, 38}},
      {'e', "coprimality forces b = 1, leaving q = p - a^2 or pq = 1 - a^2", {15, 55}},
      {'f', "an odd prime cannot be a sum or difference of two even integers",
       {16, 30, 31, 39, 46, 60}},
  }};
  return groups;
}

struct RedundantEntry {
  int case_id;
  int parent;
  std::vector<Reduction> reductions;
  std::string_view note;
};

const std::vector<RedundantEntry>& redundant_entries() {
  static const std::vector<RedundantEntry> entries{
      {8, 17, {{1, 17}}, "coprimality forces b = 1: q = p + a^2"},
      {14, 47, {{1, 46}, {2, 47}}, "b in {1,2}: b = 1 gives q = 4p - 2a^2, b = 2 gives q = 16p - a^2"},
      {21, 40, {{1, 39}, {2, 40}}, "b in {1,2}: b = 1 gives p = 4q - 2a^2, b = 2 gives p = 16q - a^2"},
      {23, 26, {{1, 26}}, "coprimality forces b = 1: pq = a^2 + 1"},
      {24, 26, {{1, 26}}, "coprimality forces b = 1: pq = a^2 + 1"},
      {25, 26, {{1, 26}}, "coprimality forces b = 1: pq = a^2 + 1"},
      {29, 26, {{1, 33}, {2, 26}}, "b in {1,2}: b = 1 gives pq = 2a^2 + 4, b = 2 gives pq = a^2 + 16"},
      {44, 17, {{1, 16}, {2, 17}}, "b in {1,2}: b = 1 gives q = 4p + 2a^2, b = 2 gives q = 16p + a^2"},
      {45, 17, {{1, 17}}, "coprimality forces b = 1: q = p + a^2"},
      {51, 10, {{1, 9}, {2, 10}}, "b in {1,2}: b = 1 gives p = 4q + 2a^2, b = 2 gives p = 16q + a^2"},
      {52, 17, {{1, 17}}, "coprimality forces b = 1: q = p + a^2"},
      {59, 56, {{1, 3}, {2, 56}}, "b in {1,2}: b = 1 gives pq = 4 - 2a^2, b = 2 gives pq = 16 - a^2"},
  };
  return entries;
}

void check_id(int case_id) {
  if (case_id < 1 || case_id > kCaseCount)
    throw DomainError("case id " + std::to_string(case_id) + " outside 1..60");
}

std::vector<CaseSplit> build_splits() {
  std::map<Exponents, int> ids;
  for (const CaseRow& row : kRows) ids.emplace(parse_factor(row.low), row.case_id);

  std::vector<CaseSplit> out;
  for (int two = 0; two <= kFullExponents.two; ++two)
    for (int p = 0; p <= kFullExponents.p; ++p)
      for (int q = 0; q <= kFullExponents.q; ++q)
        for (int b = 0; b <= kFullExponents.b; ++b) {
          const Exponents low{two, p, q, b};
          auto it = ids.find(low);
          if (it == ids.end())
            throw std::logic_error("case table has no row for split " + format_factor(low));
          out.push_back({it->second, low, complement(low)});
        }
  std::sort(out.begin(), out.end(), [](const CaseSplit& x, const CaseSplit& y) { return x.case_id < y.case_id; });
  return out;
}

}  // namespace

Exponents complement(const Exponents& e) {
  return {kFullExponents.two - e.two, kFullExponents.p - e.p, kFullExponents.q - e.q, kFullExponents.b - e.b};
}

std::string format_factor(const Exponents& e) {
  std::string s;
  if (e.two == 1) s += '2';
  if (e.two == 2) s += '4';
  if (e.p) s += 'p';
  if (e.q) s += 'q';
  if (e.b == 1) s += 'b';
  if (e.b > 1) s += "b^" + std::to_string(e.b);
  return s.empty() ? "1" : s;
}

Exponents parse_factor(std::string_view text) {
  Exponents e;
  std::size_t i = 0;
  auto bad = [&] { return DomainError("malformed factor '" + std::string(text) + "'"); };
  if (text == "1") return e;
  if (i < text.size() && (text[i] == '2' || text[i] == '4')) e.two = text[i++] == '2' ? 1 : 2;
  if (i < text.size() && text[i] == 'p') { e.p = 1; ++i; }
  if (i < text.size() && text[i] == 'q') { e.q = 1; ++i; }
  if (i < text.size() && text[i] == 'b') {
    e.b = 1;
    ++i;
    if (i < text.size() && text[i] == '^') {
      if (i + 2 != text.size() || text[i + 1] < '2' || text[i + 1] > '4') throw bad();
      e.b = text[i + 1] - '0';
      i += 2;
    }
  }
  if (i != text.size() || text.empty()) throw bad();
  return e;
}

Integer factor_value(const Exponents& e, const Natural& p, const Natural& q, const Natural& b) {
  Integer v = 1;
  v <<= e.two;
  if (e.p) v *= p;
  if (e.q) v *= q;
  for (int i = 0; i < e.b; ++i) v *= b;
  return v;
}

std::span<const CaseRow> case_table() { return kRows; }

std::vector<CaseSplit> enumerate_splits() { return build_splits(); }

const CaseSplit& split_for(int case_id) {
  check_id(case_id);
  static const std::vector<CaseSplit> splits = build_splits();
  return splits[static_cast<std::size_t>(case_id - 1)];
}

std::string_view condition_for(int case_id) {
  check_id(case_id);
  return kRows[static_cast<std::size_t>(case_id - 1)].condition;
}

CaseClassification classify(int case_id) {
  check_id(case_id);
  CaseClassification out;
  out.case_id = case_id;
  if (auto c = solvable_case(case_id)) {
    out.verdict = Verdict::Solvable;
    out.note = std::string(condition_text(*c));
    return out;
  }
  for (const auto& group : unsolvable_groups()) {
    if (std::find(group.cases.begin(), group.cases.end(), case_id) != group.cases.end()) {
      out.verdict = Verdict::Unsolvable;
      out.reason = group.reason;
      out.note = std::string(group.note);
      return out;
    }
  }
  for (const auto& entry : redundant_entries()) {
    if (entry.case_id == case_id) {
      out.verdict = Verdict::Redundant;
      out.parent = entry.parent;
      out.reductions = entry.reductions;
      out.note = std::string(entry.note);
      return out;
    }
  }
  throw std::logic_error("case " + std::to_string(case_id) + " has no classification");
}

std::string verdict_text(const CaseClassification& c) {
  switch (c.verdict) {
    case Verdict::Solvable: return "solvable";
    case Verdict::Unsolvable: return std::string("unsolvable(") + c.reason + ")";
    case Verdict::Redundant: return "redundant(" + std::to_string(c.parent) + ")";
  }
  return {};
}

bool satisfies_split(const CaseSplit& split, const Natural& p, const Natural& q, const Witness& w) {
  if (gcd(w.a, w.b) != 1) return false;
  const Integer delta = factor_value(split.high, p, q, w.b) - factor_value(split.low, p, q, w.b);
  return delta == 2 * w.a * w.a;
}

std::optional<Witness> oracle_witness(const CaseSplit& split, const Natural& p, const Natural& q,
                                      std::uint32_t b_max) {
  for (std::uint32_t bi = 1; bi <= b_max; ++bi) {
    const Natural b = bi;
    const Integer delta = factor_value(split.high, p, q, b) - factor_value(split.low, p, q, b);
    if (delta <= 0 || mpz_odd_p(delta.get_mpz_t())) continue;
    auto a = perfect_square_root(Integer(delta / 2));
    if (!a || *a < 1 || gcd(*a, b) != 1) continue;
    return Witness{std::move(*a), b};
  }
  return std::nullopt;
}

}  // namespace epq
