// koebe: command-line front end for the trinomial Koebe-radius library.
//
// Exit codes: 0 pass, 1 failed assertion, 2 usage error, 3 I/O error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "koebe.hpp"

namespace {

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;
constexpr int exit_io = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void need_fold(int fold) {
  if (fold < 1) throw UsageError("--fold must be a positive integer");
}

std::vector<int> parse_folds(const std::string& s) {
  if (s == "all") return {1, 2, 3, 4, 5, 6, 7, 8};
  std::size_t used = 0;
  int fold = 0;
  try {
    fold = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw UsageError("--fold must be a positive integer or 'all'");
  }
  if (used != s.size()) throw UsageError("--fold must be a positive integer or 'all'");
  need_fold(fold);
  return {fold};
}

int cmd_radius(int fold, const std::string& format) {
  need_fold(fold);
  const double r = koebe::koebe_radius(fold);
  const auto [a0, b0] = koebe::extremal_coeffs(fold);
  const double ts = koebe::t_star(koebe::AlphaParam::from_fold(fold)).first;
  const double residual = std::abs(1.0 - a0 + b0 - r);
  if (format == "json") {
    nlohmann::json j{{"fold", fold}, {"r", r}, {"a0", a0}, {"b0", b0}, {"t_star", ts}, {"residual", residual}};
    std::cout << j.dump() << '\n';
  } else {
    std::printf("fold     %d\nr        %.15f\na0       %.15f\nb0       %.15f\nt*       %.15f\nresidual %.3e\n", fold,
                r, a0, b0, ts, residual);
  }
  return exit_pass;
}

int cmd_figure(const std::string& kind, int fold, int samples, const std::vector<std::string>& overlays,
               const std::string& out) {
  need_fold(fold);
  if (samples < 64) throw UsageError("--samples must be >= 64");
  koebe::FigureSpec spec;
  try {
    spec.kind = koebe::figure_kind_from_string(kind);
    if (!overlays.empty()) {
      spec.overlays.emplace();
      for (const auto& o : overlays) spec.overlays->push_back(koebe::overlay_from_string(o));
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  spec.fold = fold;
  spec.samples = samples;
  const auto [svg, csv] = koebe::write_figure(koebe::build_figure(spec), out);
  std::cout << svg << '\n' << csv << '\n';
  return exit_pass;
}

int cmd_verify(const std::string& fold, const std::string& suite) {
  koebe::Suite s;
  try {
    s = koebe::suite_from_string(suite);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const koebe::Report rep = koebe::run_suite(s, parse_folds(fold));
  std::cout << koebe::to_json(rep).dump(2) << '\n';
  return rep.pass() ? exit_pass : exit_fail;
}

int cmd_scan(int fold, int resolution, int refine, const std::string& csv_path) {
  need_fold(fold);
  if (resolution < 64) throw UsageError("--resolution must be >= 64");
  if (refine < 0) throw UsageError("--refine must be >= 0");
  const koebe::ScanResult s = koebe::boundary_scan(fold, resolution, refine);
  const double r = koebe::koebe_radius(fold);
  nlohmann::json j{{"fold", s.fold},
                   {"r_min", s.r_min},
                   {"r_expected", r},
                   {"argmin", {{"a", s.argmin_a}, {"b", s.argmin_b}, {"phi", s.argmin_phi}}},
                   {"curve", std::string(koebe::to_string(s.argmin_curve))},
                   {"t", s.argmin_t},
                   {"resolution", s.grid.resolution},
                   {"refine_depth", s.grid.refine_depth}};
  if (!csv_path.empty()) {
    const auto p = koebe::AlphaParam::from_fold(fold);
    const auto curves = koebe::full_boundary(p);
    const auto samples = koebe::sample_boundary(fold, resolution, curves);
    std::ofstream os(csv_path, std::ios::binary);
    if (!os) throw koebe::FigureWriteError("cannot open " + csv_path);
    os << "curve,t,a,b,phi,dist\n";
    using koebe::detail::num;
    for (const auto& x : samples) {
      os << koebe::to_string(x.curve) << ',' << num(x.t) << ',' << num(x.a) << ',' << num(x.b) << ',' << num(x.phi)
         << ',' << num(x.dist) << '\n';
    }
    if (!os) throw koebe::FigureWriteError("write failed: " + csv_path);
  }
  std::cout << j.dump(2) << '\n';
  return std::abs(s.r_min - r) <= 1e-5 ? exit_pass : exit_fail;
}

int cmd_certify(const std::string& lemma) {
  std::vector<koebe::CertifiedBound> which;
  if (lemma == "all") {
    which.assign(koebe::all_certified_bounds.begin(), koebe::all_certified_bounds.end());
  } else {
    try {
      which.push_back(koebe::certified_bound_from_lemma(std::stoi(lemma)));
    } catch (const std::exception&) {
      throw UsageError("--lemma must be 2, 4, 6 or 'all'");
    }
  }
  nlohmann::json out = nlohmann::json::array();
  bool ok = true;
  for (auto b : which) {
    const auto c = koebe::certify(b);
    ok = ok && c.positive_on_interval;
    out.push_back(koebe::to_json(c, koebe::lemma_id(b)));
  }
  std::cout << (out.size() == 1 ? out[0] : out).dump(2) << '\n';
  return ok ? exit_pass : exit_fail;
}

int cmd_recheck(const std::string& path) {
  std::ifstream is(path);
  if (!is) {
    std::cerr << "cannot open " << path << '\n';
    return exit_io;
  }
  koebe::Report stored;
  try {
    stored = koebe::report_from_json(nlohmann::json::parse(is));
  } catch (const std::exception& e) {
    std::cerr << path << ": not a verify report: " << e.what() << '\n';
    return exit_io;
  }
  const koebe::RecheckResult r = koebe::recheck(stored);
  nlohmann::json out{{"suite", r.report.suite},
                     {"pass", r.report.pass()},
                     {"checks", r.report.checks.size()},
                     {"verdict_changes", r.flips}};
  std::cout << out.dump(2) << '\n';
  return r.report.pass() && r.flips.empty() ? exit_pass : exit_fail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Koebe radius for univalent trinomials z + a z^(1+T) + b z^(1+2T)"};
  app.require_subcommand(1);

  int fold = 1;
  std::string format = "text";
  auto* radius = app.add_subcommand("radius", "Koebe radius and extremal coefficients");
  radius->add_option("--fold", fold, "symmetry order T")->required();
  radius->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::string kind, out;
  int samples = 512;
  std::vector<std::string> overlays;
  auto* figure = app.add_subcommand("figure", "write an SVG figure and its CSV samples");
  figure->add_option("--kind", kind, "circle-image, domain-boundary, tangent, disks-comparison")->required();
  figure->add_option("--fold", fold, "symmetry order T")->required();
  figure->add_option("--samples", samples, "points per curve (>= 64)");
  figure->add_option("--overlay", overlays, "extremal, suffridge, disk(r), disk(R), tangent-line");
  figure->add_option("--out", out, "output path; .svg and .csv are written")->required();

  std::string fold_set = "all", suite = "full";
  auto* verify = app.add_subcommand("verify", "run a verification suite, JSON report on stdout");
  verify->add_option("--fold", fold_set, "symmetry order T or 'all'");
  verify->add_option("--suite", suite, "identities, lemmas, scan, steps, full");

  int resolution = 4096, refine = 40;
  std::string csv_path;
  auto* scan = app.add_subcommand("scan", "boundary scan for the minimal image distance");
  scan->add_option("--fold", fold, "symmetry order T")->required();
  scan->add_option("--resolution", resolution, "samples per curve");
  scan->add_option("--refine", refine, "golden-section iterations");
  scan->add_option("--csv", csv_path, "write every boundary sample (curve,t,a,b,phi,dist)");

  std::string lemma = "all";
  auto* certify = app.add_subcommand("certify", "exact sign-variation certificates");
  certify->add_option("--lemma", lemma, "2, 4, 6 or 'all'");

  std::string report_path;
  auto* recheck = app.add_subcommand("recheck", "re-evaluate the verdicts of a saved verify report");
  recheck->add_option("report", report_path, "JSON report written by verify")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*radius) return cmd_radius(fold, format);
    if (*figure) return cmd_figure(kind, fold, samples, overlays, out);
    if (*verify) return cmd_verify(fold_set, suite);
    if (*scan) return cmd_scan(fold, resolution, refine, csv_path);
    if (*certify) return cmd_certify(lemma);
    if (*recheck) return cmd_recheck(report_path);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const koebe::FigureWriteError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_io;
  }
  return exit_usage;
}
