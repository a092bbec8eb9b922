#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "koebe/certify.hpp"
#include "koebe/domain.hpp"
#include "koebe/families.hpp"
#include "koebe/objective.hpp"
#include "koebe/report.hpp"
#include "koebe/search.hpp"

namespace koebe {

namespace detail {

inline std::string tag(int fold, std::string_view what) { return "T=" + std::to_string(fold) + " " + std::string(what); }

// Coefficient pairs exercising both signs of a and b (b != 0).
inline std::vector<std::pair<double, double>> identity_probe_points(int fold) {
  const AlphaParam p = AlphaParam::from_fold(fold);
  const auto [a0, b0] = extremal_coeffs(fold);
  const BoundaryPoint s = suffridge_point(p);
  std::vector<std::pair<double, double>> pts{{a0, b0}, {-a0, b0}, {s.a, s.b}};
  for (double a : {-0.9, -0.35, 0.0, 0.4, 1.1})
    for (double b : {-0.3, -0.05, 0.07, 0.25, 0.6}) pts.emplace_back(a, b);
  return pts;
}

inline double max_abs_diff(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) return std::numeric_limits<double>::infinity();
  double m = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) m = std::max(m, std::abs(x[i] - y[i]));
  return m;
}

}  // namespace detail

/// 1 - a0 + b0 = r, plus the closed forms for T = 1, 2.
inline Report radius_checks(int fold) {
  Report rep{"radius"};
  const double r = koebe_radius(fold);
  const auto [a0, b0] = extremal_coeffs(fold);
  rep.near(detail::tag(fold, "1 - a0 + b0 = r"), 1.0 - a0 + b0, r, 1e-12);
  rep.near(detail::tag(fold, "r from alpha form"), koebe_radius(AlphaParam::from_fold(fold)), r, 1e-12);
  constexpr double pi = std::numbers::pi;
  if (fold == 1) {
    const double c = std::cos(pi / 5.0);
    rep.near("T=1 r = sec^2(pi/5)/4", r, 0.25 / (c * c), 1e-12);
  }
  if (fold == 2) {
    const double c = std::cos(pi / 8.0);
    rep.near("T=2 r = sec^2(pi/8)/2", r, 0.5 / (c * c), 1e-12);
  }
  return rep;
}

/// Pointwise identities tying the objective and the boundary curves together.
inline Report identity_checks(int fold) {
  Report rep{"identities"};
  constexpr double pi = std::numbers::pi;
  const AlphaParam p = AlphaParam::from_fold(fold);
  const double al = p.alpha();
  const double T = fold;

  double err_modulus = 0.0, err_split = 0.0;
  for (const auto& [a, b] : detail::identity_probe_points(fold)) {
    const Trinomial f{fold, a, b};
    const double h = main_value(a, b);
    for (int k = 0; k < 360; ++k) {
      const double ph = 2.0 * pi * k / 360.0;
      const double v = phi(fold, a, b, ph);
      err_modulus = std::max(err_modulus, std::abs(v - std::norm(eval_trinomial(f, std::polar(1.0, ph)))));
      if (b != 0.0) {
        const double c = std::cos(T * ph / 2.0), s = std::sin(T * ph / 2.0);
        err_split = std::max(err_split, std::abs(v - (h + 16.0 * b * c * c * (mu(a, b) - s * s))));
      }
    }
  }
  rep.near(detail::tag(fold, "Phi = |F(e^{i phi})|^2"), err_modulus, 0.0, 1e-10);
  rep.near(detail::tag(fold, "Phi = H + 16b cos^2 (mu - sin^2)"), err_split, 0.0, 1e-10);

  double err_line = 0.0, err_tform = 0.0;
  for (int i = 1; i <= 1000; ++i) {
    const double t = pi / 2.0 * i / 1000.0;
    const auto [a, b] = gamma3_ab<double>(al, t);
    err_line = std::max(err_line, std::abs(a * std::sin(t) - b * std::sin((2.0 - al) * t) - std::sin(al * t)));
    const double s = t / (1.0 + T);
    const auto [ta, tb] = tform_point(fold, s);
    err_tform = std::max({err_tform, std::abs(ta - a), std::abs(tb - b)});
  }
  rep.near(detail::tag(fold, "A sin t - B sin((2-alpha)t) = sin(alpha t)"), err_line, 0.0, 1e-11);
  rep.near(detail::tag(fold, "T-form matches alpha-form"), err_tform, 0.0, 1e-10);

  const auto [a0, b0] = extremal_coeffs(fold);
  const BoundaryPoint at_star = t_star(p).second;
  rep.near(detail::tag(fold, "Gamma3+(t*) a = a0"), at_star.a, a0, 1e-10);
  rep.near(detail::tag(fold, "Gamma3+(t*) b = b0"), at_star.b, b0, 1e-10);

  const BoundaryPoint end = boundary_point(p, CurveId::gamma3_plus, pi / 2.0);
  const BoundaryPoint sp = suffridge_point(p);
  rep.near(detail::tag(fold, "Gamma3+(pi/2) a = Suffridge a"), end.a, sp.a, 1e-10);
  rep.near(detail::tag(fold, "Gamma3+(pi/2) b = Suffridge b"), end.b, sp.b, 1e-10);

  const BoundaryPoint start = boundary_point(p, CurveId::gamma3_plus, 1e-6);
  const BoundaryPoint g2 = boundary_point(p, CurveId::gamma2_plus, curve_range(p, CurveId::gamma2_plus).hi);
  rep.near(detail::tag(fold, "Gamma3+(0+) a = Gamma2+ end a"), start.a, g2.a, 1e-8);
  rep.near(detail::tag(fold, "Gamma3+(0+) b = Gamma2+ end b"), start.b, g2.b, 1e-8);
  return rep;
}

/// Fold-independent identities of the classical families.
inline Report classical_checks() {
  Report rep{"classical"};
  constexpr double pi = std::numbers::pi;
  for (int n = 2; n <= 12; ++n) {
    const double c = std::cos(pi / (n + 2.0));
    rep.near("Q_" + std::to_string(n) + "(-1) = -sec^2(pi/(N+2))/4", q_coeffs(n)(-1.0).real(), -0.25 / (c * c), 1e-10);
  }
  for (int n = 2; n <= 8; ++n) {
    rep.near("B^(1) with " + std::to_string(n) + " terms = Q_" + std::to_string(n),
             detail::max_abs_diff(general_extremizer_coeffs(1, n).coeffs, q_coeffs(n).coeffs), 0.0, 1e-10);
  }
  for (int n = 2; n <= 6; ++n) {
    rep.near("B^(2) with " + std::to_string(n) + " terms = odd extremizer of degree " + std::to_string(2 * n - 1),
             detail::max_abs_diff(general_extremizer_coeffs(2, n).coeffs, odd_extremizer_coeffs(2 * n - 1).coeffs),
             0.0, 1e-10);
  }
  return rep;
}

/// Desk-scale reproduction of the theorem for one fold.
inline Report scan_checks(int fold, const GlobalVerifyOptions& opt = {}) {
  Report rep{"scan"};
  const GlobalVerifyReport g = global_verify(fold, 1e-5, opt);
  const auto [a0, b0] = extremal_coeffs(fold);
  rep.near(detail::tag(fold, "r_min"), g.r_min, koebe_radius(fold), 1e-5);
  rep.near(detail::tag(fold, "argmin a"), g.scan.argmin_a, a0, 1e-4);
  rep.near(detail::tag(fold, "argmin b"), g.scan.argmin_b, b0, 1e-4);
  rep.near(detail::tag(fold, "argmin phi"), g.scan.argmin_phi, std::numbers::pi / fold, 1e-4);
  rep.add(detail::tag(fold, "uniqueness excess"), g.uniqueness_excess, opt.gap, 0.0, Relation::at_least);
  rep.add(detail::tag(fold, "far samples"), static_cast<double>(g.far_samples), 0.0, 0.0, Relation::above);
  return rep;
}

struct TabulatedStep {
  int fold;
  double t0, delta0_bound, mu0, mu0_step, delta, delta_step;
};

inline constexpr std::array<TabulatedStep, 4> tabulated_steps{{
    {3, 1.46, 2.3e-5, 0.950, 1e-3, 0.0019, 1e-4},
    {4, 1.49, 5.4e-5, 0.921, 1e-3, 0.0070, 1e-4},
    {5, 1.52, 1.9e-5, 0.890, 1e-3, 0.010, 1e-3},
    {6, 1.55, 2.2e-6, 0.857, 1e-3, 0.012, 1e-3},
}};

/// The four-step algorithm against the published table. Printed values are
/// truncations, so mu0 and Delta must lie in [printed, printed + last digit).
inline Report step_checks() {
  Report rep{"steps"};
  for (const TabulatedStep& row : tabulated_steps) {
    const StepReport s = step_algorithm(row.fold);
    const int T = row.fold;
    rep.add(detail::tag(T, "t0"), s.t0, row.t0, 0.0, Relation::equal);
    rep.add(detail::tag(T, "delta0 > 0"), s.delta0, 0.0, 0.0, Relation::above);
    rep.add(detail::tag(T, "delta0 below printed bound"), s.delta0, row.delta0_bound, 0.0, Relation::below);
    rep.add(detail::tag(T, "mu0"), s.mu0, row.mu0, row.mu0_step, Relation::truncates);
    rep.add(detail::tag(T, "Delta"), s.endpoint_margin, row.delta, row.delta_step, Relation::truncates);
    rep.add(detail::tag(T, "Delta > 0"), s.endpoint_margin, 0.0, 0.0, Relation::above);
    rep.flag(detail::tag(T, "bound decreasing on [A(t0), A(pi/2)]"), s.monotone_decreasing);
    rep.flag(detail::tag(T, "step pass"), s.pass);
    if (const auto root = solve_t0(T)) {
      rep.add(detail::tag(T, "t0 slack"), root->slack, 0.0, 0.0, Relation::above);
    } else {
      rep.flag(detail::tag(T, "t0 root bracketed"), false);
    }
  }
  return rep;
}

inline int expected_variations(CertifiedBound b) {
  switch (b) {
    case CertifiedBound::suffridge_gap: return 11;
    case CertifiedBound::mu_at_extremal: return 7;
    case CertifiedBound::large_fold: return 9;
  }
  return -1;
}

inline Report budan_checks() {
  Report rep{"budan"};
  for (CertifiedBound b : all_certified_bounds) {
    const BudanCertificate c = certify(b);
    const std::string id = "lemma " + std::to_string(lemma_id(b)) + " ";
    const double v = expected_variations(b);
    rep.add(id + "variations at lo", c.variations_lo, v, 0.0, Relation::equal);
    rep.add(id + "variations at hi", c.variations_hi, v, 0.0, Relation::equal);
    rep.flag(id + "root free", c.root_free);
    rep.flag(id + "positive", c.positive_on_interval);
  }
  return rep;
}

inline Report domination_checks() {
  Report rep{"domination"};
  for (CertifiedBound b : all_certified_bounds) {
    const std::string id = "lemma " + std::to_string(lemma_id(b)) + " ";
    try {
      const std::vector<double> gaps = coefficient_gaps(reconstruct_poly(b), hat_poly(b));
      const auto [lo, hi] = std::minmax_element(gaps.begin(), gaps.end());
      rep.add(id + "smallest coefficient gap", *lo, 0.0, 0.0, Relation::at_least);
      rep.add(id + "largest coefficient gap", *hi, 0.011, 0.0, Relation::below);
    } catch (const ReconstructionError&) {
      rep.flag(id + "reconstruction well conditioned", false);
    }
  }
  return rep;
}

/// Grid evidence for the curve lemmas and the bound functions.
inline Report lemma_grid_checks(int grid = 1000) {
  Report rep{"lemma grids"};
  constexpr double pi = std::numbers::pi;
  const std::vector<double> alphas = default_alpha_grid();

  const LemmaGridReport l1 = verify_lemma_numeric(NumericLemma::curve_monotonicity, grid, alphas);
  rep.flag("G > 0 and A, B increasing", l1.pass);
  rep.add("A', B' relative error vs finite differences", l1.worst_fd_relative_error, 1e-6, 0.0, Relation::below);
  rep.flag("mu strictly decreasing, mu(t*) > 1 > mu(pi/2)",
           verify_lemma_numeric(NumericLemma::mu_decreasing, grid, alphas).pass);
  rep.flag("A >= 2 sqrt2 B and B/A increasing", verify_lemma_numeric(NumericLemma::ratio_bound, grid, alphas).pass);

  bool h_min_at_star = true, sandwich = true;
  double suffridge_gap = std::numeric_limits<double>::infinity();
  for (double al : alphas) {
    const AlphaParam p = AlphaParam::from_alpha(al);
    const double ts = t_star(p).first;
    auto h = [&](double t) {
      const auto [a, b] = gamma3_ab<double>(al, t);
      return b - a;
    };
    std::size_t best = 0;
    double best_h = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= grid; ++i) {
      const double v = h(pi / 2.0 * i / grid);
      if (v < best_h) best_h = v, best = static_cast<std::size_t>(i);
    }
    const double step = pi / 2.0 / grid;
    if (std::abs(pi / 2.0 * best / grid - ts) > step) h_min_at_star = false;
    for (double d : {1e-2, 1e-3, 1e-4})
      if (!(h(ts) <= h(ts - d) && h(ts) <= h(std::min(pi / 2.0, ts + d)))) h_min_at_star = false;

    suffridge_gap = std::min(suffridge_gap, suffridge_radius(p) - koebe_radius(p));

    const double c = std::cos(pi / (3.0 - al));
    const double s_half = std::sin(pi * al / 2.0);
    if (!(cos2_upper(al) > c * c && sin2_lower(al) < 1.0 - c * c && sin2_half_upper(al) > s_half * s_half &&
          sin_half_upper(al) > s_half))
      sandwich = false;
  }
  rep.flag("-A + B minimal at t*", h_min_at_star);
  rep.add("Suffridge radius minus Koebe radius", suffridge_gap, 0.0, 0.0, Relation::above);
  rep.flag("bound functions enclose their targets", sandwich);

  for (int fold : {7, 10}) {
    const ChainReport ch = verify_large_fold_chain(AlphaParam::from_fold(fold));
    rep.flag("bound chain at alpha = 1/" + std::to_string(fold + 1), ch.pass());
  }
  const EllipseReport e = verify_ellipse_cases();
  rep.near("T=1 ellipse substitution residual", e.fold1_max_residual, 0.0, 1e-11);
  rep.flag("T=1 b(1-b)^2 increasing on [0, 1/3]", e.fold1_increasing);
  rep.near("T=2 ellipse substitution residual", e.fold2_max_residual, 0.0, 1e-11);
  rep.flag("T=2 reduced bound increasing on (0, 1/5]", e.fold2_increasing);
  rep.near("T=2 critical point", e.fold2_critical_point, 0.21, 0.01);
  return rep;
}

/// Polygon membership against the image-curve univalence oracle.
inline Report oracle_checks(int fold, std::size_t samples = 5000) {
  Report rep{"oracle"};
  const AgreementReport ag = domain_agreement(fold, samples, 0.01);
  rep.add(detail::tag(fold, "contains vs univalence agreement"), ag.fraction, 0.99, 0.0, Relation::at_least);
  rep.add(detail::tag(fold, "points outside the band"), static_cast<double>(ag.considered), 0.0, 0.0,
          Relation::above);

  const auto [a0, b0] = extremal_coeffs(fold);
  const UnivalenceVerdict ext = univalence_check({fold, a0, b0}, 2048);
  rep.flag(detail::tag(fold, "extremal trinomial univalent or marginal"), ext.verdict != Univalence::not_univalent);

  const Trinomial bad{fold, 0.0, 1.05 / (1.0 + 2.0 * fold)};
  const UnivalenceVerdict v1 = univalence_check(bad, 2048);
  const UnivalenceVerdict v2 = univalence_check(bad, 2048);
  rep.flag(detail::tag(fold, "b = 1.05/(1+2T) not univalent"), v1.verdict == Univalence::not_univalent);
  const bool same = v1.witness && v2.witness && *v1.witness == *v2.witness;
  rep.flag(detail::tag(fold, "witness reproducible"), same);
  if (v1.witness) {
    const auto w1 = eval_trinomial(bad, std::polar(1.0, v1.witness->first));
    const auto w2 = eval_trinomial(bad, std::polar(1.0, v1.witness->second));
    rep.add(detail::tag(fold, "witness image gap"), std::abs(w1 - w2), v1.witness_tolerance, 0.0, Relation::at_most);
  }
  return rep;
}

enum class Suite { identities, lemmas, scan, steps, full };

constexpr std::string_view to_string(Suite s) {
  switch (s) {
    case Suite::identities: return "identities";
    case Suite::lemmas: return "lemmas";
    case Suite::scan: return "scan";
    case Suite::steps: return "steps";
    case Suite::full: return "full";
  }
  return "?";
}

inline Suite suite_from_string(std::string_view s) {
  for (Suite v : {Suite::identities, Suite::lemmas, Suite::scan, Suite::steps, Suite::full})
    if (to_string(v) == s) return v;
  throw std::invalid_argument("unknown suite: " + std::string(s));
}

inline Report run_suite(Suite suite, const std::vector<int>& folds) {
  for (int f : folds) require_fold(f);
  Report rep{std::string(to_string(suite))};
  const bool all = suite == Suite::full;
  if (all || suite == Suite::identities) {
    rep.append(classical_checks());
    for (int f : folds) {
      rep.append(radius_checks(f));
      rep.append(identity_checks(f));
    }
  }
  if (all || suite == Suite::lemmas) {
    rep.append(budan_checks());
    rep.append(domination_checks());
    rep.append(lemma_grid_checks());
  }
  if (all || suite == Suite::steps) rep.append(step_checks());
  if (all || suite == Suite::scan)
    for (int f : folds) rep.append(scan_checks(f));
  if (all)
    for (int f : folds) rep.append(oracle_checks(f));
  return rep;
}

}  // namespace koebe
