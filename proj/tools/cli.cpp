#include "cli.hpp"

#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "epq/analysis.hpp"
#include "epq/cases.hpp"
#include "epq/curve.hpp"
#include "epq/errors.hpp"
#include "epq/primes.hpp"
#include "epq/render.hpp"
#include "epq/scan.hpp"
#include "epq/verification.hpp"

namespace epq::cli {

namespace {

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

SolvableCase require_solvable(int id) {
  auto c = solvable_case(id);
  if (!c) throw UsageError("case " + std::to_string(id) + " is not one of 17, 26, 32, 40, 47, 56");
  return *c;
}

std::vector<double> parse_doubles(const std::string& text, std::size_t expected, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(std::string("bad number in ") + what + ": '" + item + "'");
    }
  }
  if (out.size() != expected)
    throw UsageError(std::string(what) + " needs " + std::to_string(expected) + " comma-separated values");
  return out;
}

struct Options {
  unsigned threads = 0;

  std::string format = "text";

  int case_id = 0;
  std::string p;
  std::string q;
  std::uint32_t b_max = kDefaultBMax;

  std::uint32_t p_max = 6997;
  std::string out_path;
  bool no_prefilter = false;

  std::string report;
  std::string mode;
  std::uint32_t b_filter = 2;
  double small_a = 0.0;
  std::string circle;

  std::string png;
  std::string pgm;
  std::string legend;
  double line = 0.0;
  unsigned scale = 1;
};

Natural parse_prime_arg(const std::string& s, const char* name) {
  Natural n;
  if (s.empty() || n.set_str(s, 10) != 0 || n < 0) throw UsageError(std::string("bad --") + name + " '" + s + "'");
  return n;
}

int cmd_cases(const Options& o, std::ostream& out) {
  const bool csv = o.format == "csv";
  if (csv) out << "case,c-a^2,c+a^2,condition,verdict\n";
  else
    out << std::left << std::setw(5) << "case" << std::setw(9) << "c-a^2" << std::setw(9) << "c+a^2"
        << std::setw(24) << "condition" << "verdict\n";
  for (const CaseSplit& s : enumerate_splits()) {
    const auto cls = classify(s.case_id);
    const std::string low = format_factor(s.low), high = format_factor(s.high);
    const std::string cond(condition_for(s.case_id));
    if (csv)
      out << s.case_id << ',' << low << ',' << high << ',' << cond << ',' << verdict_text(cls) << '\n';
    else
      out << std::left << std::setw(5) << s.case_id << std::setw(9) << low << std::setw(9) << high
          << std::setw(24) << cond << verdict_text(cls) << '\n';
  }
  return kExitOk;
}

int cmd_witness(const Options& o, std::ostream& out) {
  const SolvableCase c = require_solvable(o.case_id);
  const auto w = find_witness(c, parse_prime_arg(o.p, "p"), parse_prime_arg(o.q, "q"), o.b_max);
  out << (w ? w->str() : std::string("none")) << '\n';
  return kExitOk;
}

int cmd_points(const Options& o, std::ostream& out) {
  const SolvableCase c = require_solvable(o.case_id);
  const Curve curve(parse_prime_arg(o.p, "p"), parse_prime_arg(o.q, "q"));
  const auto w = find_witness(c, curve.p(), curve.q(), o.b_max);
  out << "case " << case_id(c) << ": " << condition_text(c) << '\n';
  out << "curve: " << curve.equation() << '\n';
  if (!w) {
    out << "witness: none\n";
    return kExitOk;
  }
  const auto [first, second] = intersect(*w, curve);
  out << "witness (a,b): " << w->str() << '\n';
  out << "points: " << first.str() << ", " << second.str() << '\n';
  return kExitOk;
}

int cmd_scan(const Options& o, std::ostream& out) {
  ScanConfig config;
  config.case_id = require_solvable(o.case_id);
  config.p_max = o.p_max;
  config.b_max = o.b_max;
  config.prefilter = !o.no_prefilter;
  const PrimeTable table(std::max<std::uint32_t>(o.p_max, 2));
  const ScanResult result = scan(config, table, o.threads);
  if (o.out_path.empty()) {
    out << serialize_report(result.report);
  } else {
    save_report(result.report, o.out_path);
    out << "case " << case_id(config.case_id) << ": " << result.report.count() << " solutions over p < q <= "
        << config.p_max << " (b <= " << config.b_max << ") -> " << o.out_path << '\n';
  }
  return kExitOk;
}

int cmd_analyze(const Options& o, std::ostream& out) {
  const ScanReport report = load_report(o.report);
  const PrimeTable table(report.config.p_max);
  out << std::setprecision(6) << std::fixed;
  if (o.mode == "slope") {
    std::optional<double> share;
    if (o.small_a > 0.0) share = o.small_a;
    const SlopeFit fit = fit_slope(report, table, o.b_filter, share);
    out << "slope,samples,rms_residual\n" << fit.slope << ',' << fit.sample_count << ',' << fit.residual << '\n';
  } else if (o.mode == "circle") {
    CircleSpec spec;
    if (!o.circle.empty()) {
      const auto v = parse_doubles(o.circle, 4, "--circle");
      spec = {v[0], v[1], v[2], v[3]};
    }
    const CircleCapture cap = circle_capture(report, table, spec);
    out << "x0,y0,R,eps,captured,total\n"
        << spec.x0 << ',' << spec.y0 << ',' << spec.radius << ',' << spec.eps << ',' << cap.captured << ','
        << cap.total << '\n';
  } else if (o.mode == "density") {
    const DensitySummary d = density_summary(report, table);
    out << "case,split,below,above,pairs_below,pairs_above,density_below,density_above,total\n"
        << case_id(report.config.case_id) << ',' << d.split << ',' << d.below << ',' << d.above << ','
        << d.pairs_below << ',' << d.pairs_above << ',' << d.density_below() << ',' << d.density_above() << ','
        << d.total << '\n';
  } else {
    const std::uint32_t q_max = report.config.p_max;
    const std::uint32_t p_max = q_max / 16;
    out << "p_max,q_max,factor\n" << p_max << ',' << q_max << ',' << transform_factor(p_max, q_max) << '\n';
  }
  return kExitOk;
}

int cmd_render(const Options& o, std::ostream& out) {
  const ScanReport report = load_report(o.report);
  const PrimeTable table(report.config.p_max);
  const SolutionMatrix matrix = SolutionMatrix::from_report(report, table);
  ImageSpec spec;
  spec.format = o.png.empty() ? ImageFormat::Pgm : ImageFormat::Png;
  spec.scale = o.scale;
  if (o.line != 0.0) spec.line_slope = o.line;
  if (!o.circle.empty()) {
    const auto v = parse_doubles(o.circle, 3, "--circle");
    spec.circle = CircleSpec{v[0], v[1], v[2], 1.0};
  }
  const std::string path = o.png.empty() ? o.pgm : o.png;
  render_matrix(matrix, spec, path);
  out << "wrote " << path << " (" << matrix.side() * spec.scale << "x" << matrix.side() * spec.scale << ")\n";
  if (!o.legend.empty()) {
    render_axis_legend(matrix, o.legend);
    out << "wrote " << o.legend << '\n';
  }
  return kExitOk;
}

}  // namespace

int verify_paper(std::ostream& out, WitnessFinder finder) {
  const auto results = run_reference_checks({}, std::move(finder));
  std::size_t failed = 0;
  for (const auto& r : results) {
    out << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(40) << r.name << r.detail << '\n';
    failed += !r.passed;
  }
  out << results.size() - failed << "/" << results.size() << " checks passed\n";
  return failed ? kExitFailure : kExitOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rational points on y^2 = x^3 - pqx: splitting cases, witnesses, prime-grid scans"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--threads", o.threads, "Worker threads for scans (0 = all cores)")->check(CLI::NonNegativeNumber);

  auto* cases = app.add_subcommand("cases", "List the 60 splitting cases and their classification");
  cases->add_option("--format", o.format, "text or csv")->check(CLI::IsMember({"text", "csv"}));

  auto add_case_pair = [&](CLI::App* sub) {
    sub->add_option("--case", o.case_id, "Solvable case: 17, 26, 32, 40, 47 or 56")->required();
    sub->add_option("--p", o.p, "Smaller odd prime")->required();
    sub->add_option("--q", o.q, "Larger odd prime")->required();
    sub->add_option("--bmax", o.b_max, "Largest b searched")->check(CLI::Range(1U, kMaxBMax));
  };
  auto* witness = app.add_subcommand("witness", "First witness (a,b) for a case at (p,q)");
  add_case_pair(witness);
  auto* points = app.add_subcommand("points", "Witness, curve and both rational points");
  add_case_pair(points);

  auto* scan_cmd = app.add_subcommand("scan", "Scan all odd-prime pairs p < q <= pmax");
  scan_cmd->add_option("--case", o.case_id, "Solvable case")->required();
  scan_cmd->add_option("--pmax", o.p_max, "Largest prime")->check(CLI::Range(3U, 10000000U));
  scan_cmd->add_option("--bmax", o.b_max, "Largest b searched")->check(CLI::Range(1U, kMaxBMax));
  scan_cmd->add_option("--out", o.out_path, "Report CSV path (default: stdout)");
  scan_cmd->add_flag("--no-prefilter", o.no_prefilter, "Disable the mod-4 prefilter");

  auto* analyze = app.add_subcommand("analyze", "Structure statistics of a scan report");
  analyze->add_option("--report", o.report, "Scan report CSV")->required()->check(CLI::ExistingFile);
  analyze->add_option("--mode", o.mode, "slope, circle, density or transform")
      ->required()
      ->check(CLI::IsMember({"slope", "circle", "density", "transform"}));
  auto* b_opt = analyze->add_option("--b", o.b_filter, "Witness b for the slope fit")->check(CLI::PositiveNumber);
  auto* small_a = analyze->add_option("--small-a", o.small_a, "Slope fit: keep a^2 <= SHARE * b^4 * p")
                      ->check(CLI::PositiveNumber);
  auto* analyze_circle = analyze->add_option("--circle", o.circle, "x0,y0,R,eps");

  auto* render = app.add_subcommand("render", "Render a scan report as an image");
  render->add_option("--report", o.report, "Scan report CSV")->required()->check(CLI::ExistingFile);
  auto* png = render->add_option("--png", o.png, "PNG output path");
  auto* pgm = render->add_option("--pgm", o.pgm, "PGM (P5) output path");
  png->excludes(pgm);
  render->add_option("--line", o.line, "Overlay line slope through the origin (index units)");
  render->add_option("--circle", o.circle, "Overlay circle x0,y0,R (index units)");
  render->add_option("--scale", o.scale, "Pixels per cell")->check(CLI::Range(1U, 64U));
  render->add_option("--legend", o.legend, "Axis tick table output path");

  auto* verify = app.add_subcommand("verify-paper", "Run the reference checks; exit 1 on any failure");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (analyze->parsed()) {
      if (b_opt->count() && o.mode != "slope") throw UsageError("--b only applies to --mode slope");
      if (small_a->count() && o.mode != "slope") throw UsageError("--small-a only applies to --mode slope");
      if (analyze_circle->count() && o.mode != "circle") throw UsageError("--circle only applies to --mode circle");
    }
    if (render->parsed() && o.png.empty() && o.pgm.empty()) throw UsageError("render needs --png or --pgm");

    if (cases->parsed()) return cmd_cases(o, out);
    if (witness->parsed()) return cmd_witness(o, out);
    if (points->parsed()) return cmd_points(o, out);
    if (scan_cmd->parsed()) return cmd_scan(o, out);
    if (analyze->parsed()) return cmd_analyze(o, out);
    if (render->parsed()) return cmd_render(o, out);
    if (verify->parsed()) return verify_paper(out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace epq::cli
