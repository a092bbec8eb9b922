#pragma once

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "koebe/alpha.hpp"
#include "koebe/domain.hpp"
#include "koebe/objective.hpp"
#include "koebe/polynomial.hpp"

namespace koebe {

// ---------------------------------------------------------------------------
// Root-free certificates
// ---------------------------------------------------------------------------

/// The three polynomial inequalities certified by sign variations:
///   suffridge_gap  - the Suffridge radius exceeds the Koebe radius, alpha in [0, 1/2]
///   mu_at_extremal - mu(A(t*), B(t*)) > 1, alpha in [0, 1/2]
///   large_fold     - the endpoint bound beats the radius for T >= 7, alpha in [0, 1/8]
enum class CertifiedBound { suffridge_gap, mu_at_extremal, large_fold };

inline constexpr std::array<CertifiedBound, 3> all_certified_bounds{
    CertifiedBound::suffridge_gap, CertifiedBound::mu_at_extremal, CertifiedBound::large_fold};

constexpr std::string_view to_string(CertifiedBound b) {
  switch (b) {
    case CertifiedBound::suffridge_gap: return "suffridge_gap";
    case CertifiedBound::mu_at_extremal: return "mu_at_extremal";
    case CertifiedBound::large_fold: return "large_fold";
  }
  return "?";
}

/// Lemma number used as the certificate identifier in serialized reports.
constexpr int lemma_id(CertifiedBound b) {
  switch (b) {
    case CertifiedBound::suffridge_gap: return 2;
    case CertifiedBound::mu_at_extremal: return 4;
    case CertifiedBound::large_fold: return 6;
  }
  return 0;
}

inline CertifiedBound certified_bound_from_lemma(int lemma) {
  for (CertifiedBound b : all_certified_bounds)
    if (lemma_id(b) == lemma) return b;
  throw std::invalid_argument("no certified bound for lemma " + std::to_string(lemma));
}

inline std::pair<Rational, Rational> certified_interval(CertifiedBound b) {
  return {Rational(0), b == CertifiedBound::large_fold ? Rational(1, 8) : Rational(1, 2)};
}

/// Truncated (two-decimal, rounded down) polynomial R-hat as exact rationals.
inline ExactPolynomial hat_poly(CertifiedBound b) {
  static const std::vector<int> suffridge{942,  -7260, 24039, -44426, 49013, -30797, 7146,
                                          4350, -4453, 1792,  -395,   46,    -3};
  static const std::vector<int> mu_ext{343, -1544, 2703, -2347, 1051, -240, 26, -2};
  static const std::vector<int> large{335, -3779, 10854, -13233, 6391, 738, -1788, 316, 211, -76, -7, 5, -1};
  const std::vector<int>& hundredths =
      b == CertifiedBound::suffridge_gap ? suffridge : (b == CertifiedBound::mu_at_extremal ? mu_ext : large);
  std::vector<Rational> c;
  for (int h : hundredths) c.emplace_back(h, 100);
  return ExactPolynomial(std::move(c));
}

struct BudanCertificate {
  ExactPolynomial poly;
  Rational lo;
  Rational hi;
  int variations_lo = 0;
  int variations_hi = 0;
  bool root_free = false;
  bool positive_on_interval = false;
};

inline std::vector<Rational> derivative_sequence_at(const ExactPolynomial& p, const Rational& x) {
  std::vector<Rational> seq;
  for (ExactPolynomial d = p; d.degree() >= 0; d = d.derivative()) seq.push_back(d(x));
  return seq;
}

/// Budan-Fourier count on (lo, hi] in exact arithmetic. Equal variation
/// counts at both ends certify that p has no root in (lo, hi].
inline BudanCertificate budan_certificate(const ExactPolynomial& p, const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw std::invalid_argument("budan_certificate: need lo < hi");
  BudanCertificate c{p, lo, hi};
  c.variations_lo = sign_variations(derivative_sequence_at(p, lo));
  c.variations_hi = sign_variations(derivative_sequence_at(p, hi));
  c.root_free = c.variations_lo == c.variations_hi;
  c.positive_on_interval = c.root_free && p(lo) > 0;
  return c;
}

inline BudanCertificate certify(CertifiedBound b) {
  const auto [lo, hi] = certified_interval(b);
  return budan_certificate(hat_poly(b), lo, hi);
}

/// Exact decimal expansion of a rational whose denominator has no prime
/// factors other than 2 and 5. Anything else is rejected.
inline std::string exact_decimal(const Rational& q) {
  using boost::multiprecision::cpp_int;
  cpp_int num = boost::multiprecision::numerator(q), den = boost::multiprecision::denominator(q);
  std::string out = num < 0 ? "-" : "";
  if (num < 0) num = -num;
  out += cpp_int(num / den).str();
  cpp_int rem = num % den;
  if (rem == 0) return out;
  out += '.';
  for (int i = 0; rem != 0; ++i) {
    if (i == 256) throw std::invalid_argument("exact_decimal: expansion does not terminate");
    rem *= 10;
    out += static_cast<char>('0' + static_cast<int>(rem / den));
    rem %= den;
  }
  return out;
}

inline Rational parse_exact_decimal(std::string_view s) {
  using boost::multiprecision::cpp_int;
  if (s.empty()) throw std::invalid_argument("parse_exact_decimal: empty string");
  const bool neg = s.front() == '-';
  if (neg || s.front() == '+') s.remove_prefix(1);
  cpp_int num = 0, den = 1;
  bool seen_point = false, seen_digit = false;
  for (char ch : s) {
    if (ch == '.' && !seen_point) {
      seen_point = true;
    } else if (ch >= '0' && ch <= '9') {
      num = num * 10 + (ch - '0');
      if (seen_point) den *= 10;
      seen_digit = true;
    } else {
      throw std::invalid_argument("parse_exact_decimal: bad character in '" + std::string(s) + "'");
    }
  }
  if (!seen_digit) throw std::invalid_argument("parse_exact_decimal: no digits");
  return Rational(neg ? cpp_int(-num) : num, den);
}

inline nlohmann::json to_json(const BudanCertificate& c, int lemma) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const Rational& q : c.poly.coeffs()) coeffs.push_back(exact_decimal(q));
  return {{"lemma", lemma},
          {"interval", {c.lo.str(), c.hi.str()}},
          {"variations", {c.variations_lo, c.variations_hi}},
          {"root_free", c.root_free},
          {"positive", c.positive_on_interval},
          {"coeffs", coeffs}};
}

/// Rebuilds the certificate from the serialized polynomial and interval,
/// recomputing the variation counts rather than trusting the stored ones.
inline BudanCertificate certificate_from_json(const nlohmann::json& j) {
  std::vector<Rational> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_exact_decimal(c.get<std::string>()));
  const auto& iv = j.at("interval");
  return budan_certificate(ExactPolynomial(std::move(coeffs)), Rational(iv.at(0).get<std::string>()),
                           Rational(iv.at(1).get<std::string>()));
}

// ---------------------------------------------------------------------------
// Taylor-tail bound functions
// ---------------------------------------------------------------------------

namespace detail {

template <class Real>
Real pi_v() {
  if constexpr (std::is_same_v<Real, double>) {
    return std::numbers::pi;
  } else {
    return boost::math::constants::pi<Real>();
  }
}

template <class Real>
Real shifted_angle(const Real& alpha) {
  return pi_v<Real>() * alpha / (Real(3) * (Real(3) - alpha));
}

}  // namespace detail

/// Upper bound for cos^2(pi/(3 - alpha)).
template <class Real>
Real cos2_upper(const Real& alpha) {
  using std::sqrt;
  const Real u = detail::shifted_angle(alpha);
  const Real r3 = sqrt(Real(3));
  return Real(1) / 4 - r3 / 2 * u + u * u / 2 + r3 / 3 * u * u * u;
}

/// Lower bound for sin^2(pi/(3 - alpha)).
template <class Real>
Real sin2_lower(const Real& alpha) {
  using std::sqrt;
  const Real u = detail::shifted_angle(alpha);
  const Real r3 = sqrt(Real(3));
  return Real(3) / 4 + r3 / 2 * u - u * u / 2 - r3 / 3 * u * u * u;
}

/// Upper bound for sin^2(pi alpha / 2).
template <class Real>
Real sin2_half_upper(const Real& alpha) {
  const Real x = detail::pi_v<Real>() * alpha;
  const Real x2 = x * x;
  return x2 / 4 - x2 * x2 / 48 + x2 * x2 * x2 / 1440;
}

/// Upper bound for sin(pi alpha / 2).
template <class Real>
Real sin_half_upper(const Real& alpha) {
  const Real x = detail::pi_v<Real>() * alpha;
  const Real x2 = x * x;
  return x / 2 - x * x2 / 48 + x * x2 * x2 / 3840;
}

/// Value at alpha of the polynomial R whose positivity implies the bound,
/// computed from its defining rational expression in the bound functions.
template <class Real>
Real defining_polynomial_value(CertifiedBound b, const Real& alpha) {
  const Real one = Real(1), two = Real(2), three = Real(3);
  const Real tma = three - alpha;
  switch (b) {
    case CertifiedBound::suffridge_gap: {
      const Real g1 = cos2_upper(alpha);
      const Real oma = one - alpha, twa = two - alpha;
      const Real lhs = alpha * twa * (one - Real(4) * twa * twa / (oma * oma) * g1 * g1);
      const Real diff = lhs - sin2_half_upper(alpha);
      const Real scale = Real(1440 * 243) / Real(10000000);
      Real tma6 = tma * tma * tma;
      tma6 *= tma6;
      return scale * tma6 * oma * oma / (alpha * alpha) * diff;
    }
    case CertifiedBound::mu_at_extremal: {
      const Real z = sin2_lower(alpha);
      const Real quad = -Real(4) * (one - alpha) * z * z + (three * alpha * alpha - Real(14) * alpha + Real(15)) * z -
                        alpha * alpha + Real(6) * alpha - Real(9);
      Real tma6 = tma * tma * tma;
      tma6 *= tma6;
      return tma6 / (Real(100) * alpha) * quad;
    }
    case CertifiedBound::large_fold: {
      const Real g1 = cos2_upper(alpha);
      const Real g2 = sin_half_upper(alpha);
      const Real twa = two - alpha;
      const Real lead = twa - g2;
      const Real bracket = lead * lead - two * twa * (Real(4) - two * alpha - g2) * g1;
      return tma * tma * tma / alpha * bracket;
    }
  }
  throw std::logic_error("defining_polynomial_value: bad bound");
}

constexpr int reconstructed_degree(CertifiedBound b) { return b == CertifiedBound::mu_at_extremal ? 7 : 12; }

struct ReconstructionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Monomial coefficients of R, recovered by interpolating the defining
/// expression at Chebyshev nodes on [0, 1/2] in 50-digit arithmetic.
inline FloatPolynomial reconstruct_poly(CertifiedBound b) {
  const int deg = reconstructed_degree(b);
  const int n = deg + 1;
  const Extended pi = boost::math::constants::pi<Extended>();
  std::vector<Extended> x(n), dd(n);
  for (int k = 0; k < n; ++k) {
    x[k] = Extended(1) / 4 - Extended(1) / 4 * cos((2 * k + 1) * pi / (2 * n));
    dd[k] = defining_polynomial_value<Extended>(b, x[k]);
  }
  // Newton divided differences, then expansion to the monomial basis.
  for (int j = 1; j < n; ++j)
    for (int k = n - 1; k >= j; --k) dd[k] = (dd[k] - dd[k - 1]) / (x[k] - x[k - j]);
  std::vector<Extended> mono(n, Extended(0));
  mono[0] = dd[n - 1];
  int used = 1;
  for (int k = n - 2; k >= 0; --k) {
    // mono <- mono * (X - x_k) + dd_k
    for (int i = used; i >= 1; --i) mono[i] = mono[i - 1] - x[k] * mono[i];
    mono[0] = -x[k] * mono[0] + dd[k];
    ++used;
  }

  std::vector<double> coeffs;
  double max_coeff = 0.0;
  for (const Extended& c : mono) {
    coeffs.push_back(static_cast<double>(c));
    max_coeff = std::max(max_coeff, std::abs(coeffs.back()));
  }
  FloatPolynomial out(coeffs);

  for (int m = 0; m < 20; ++m) {
    const Extended at = (Extended(m) + Extended(0.5)) / 40;
    const Extended residual = abs(out.evaluate<Extended>(at) - defining_polynomial_value<Extended>(b, at));
    if (static_cast<double>(residual) > 1e-8 * max_coeff) {
      throw ReconstructionError("reconstruct_poly: interpolation residual too large for " +
                                std::string(to_string(b)));
    }
  }
  return out;
}

/// Per-coefficient gap R_j - Rhat_j.
inline std::vector<double> coefficient_gaps(const FloatPolynomial& reconstructed, const ExactPolynomial& hat) {
  const std::size_t n = std::max(reconstructed.coeffs().size(), hat.coeffs().size());
  std::vector<double> gaps(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    const double r = j < reconstructed.coeffs().size() ? reconstructed[j] : 0.0;
    const double h = j < hat.coeffs().size() ? static_cast<double>(hat[j]) : 0.0;
    gaps[j] = r - h;
  }
  return gaps;
}

// ---------------------------------------------------------------------------
// Grid checks of the curve lemmas
// ---------------------------------------------------------------------------

enum class NumericLemma { curve_monotonicity = 1, mu_decreasing = 3, ratio_bound = 5 };

struct GridFailure {
  double t = 0.0;
  double alpha = 0.0;
  std::string what;
};

struct LemmaGridReport {
  NumericLemma lemma = NumericLemma::curve_monotonicity;
  bool pass = true;
  std::size_t checks = 0;
  double worst_fd_relative_error = 0.0;  // curve_monotonicity only
  std::vector<GridFailure> failures;

  void fail(double t, double alpha, std::string what) {
    pass = false;
    if (failures.size() < 64) failures.push_back({t, alpha, std::move(what)});
  }
};

inline std::vector<double> default_alpha_grid() {
  std::vector<double> g;
  for (int i = 1; i <= 10; ++i) g.push_back(0.05 * i);
  return g;
}

/// Central difference of (A, B) in 50-digit arithmetic.
inline std::pair<double, double> curve_derivative_fd(double alpha, double t) {
  const Extended al(alpha), tt(t), h("1e-15");
  const auto [ap, bp] = gamma3_ab<Extended>(al, tt + h);
  const auto [am, bm] = gamma3_ab<Extended>(al, tt - h);
  return {static_cast<double>((ap - am) / (2 * h)), static_cast<double>((bp - bm) / (2 * h))};
}

inline LemmaGridReport verify_lemma_numeric(NumericLemma lemma, int grid,
                                            const std::vector<double>& alphas = default_alpha_grid()) {
  if (grid < 100) throw std::invalid_argument("verify_lemma_numeric: grid must be >= 100");
  LemmaGridReport rep;
  rep.lemma = lemma;
  const double half_pi = std::numbers::pi / 2.0;
  for (double al : alphas) {
    const AlphaParam p = AlphaParam::from_alpha(al);
    std::optional<double> prev_mu, prev_ratio;
    for (int i = 1; i <= grid; ++i) {
      const double t = half_pi * i / (grid + 1);
      const auto [a, b] = gamma3_ab<double>(al, t);
      ++rep.checks;
      switch (lemma) {
        case NumericLemma::curve_monotonicity: {
          const CurveDerivative d = curve_derivative(p, t);
          if (!(d.kernel > 0.0)) rep.fail(t, al, "G(t, alpha) <= 0");
          const auto [fa, fb] = curve_derivative_fd(al, t);
          const double ea = std::abs(d.da - fa) / std::abs(fa);
          const double eb = std::abs(d.db - fb) / std::abs(fb);
          rep.worst_fd_relative_error = std::max({rep.worst_fd_relative_error, ea, eb});
          if (!(ea < 1e-6 && eb < 1e-6)) rep.fail(t, al, "A' or B' disagrees with finite differences");
          if (!(d.da > 0.0 && d.db > 0.0)) rep.fail(t, al, "A or B not increasing");
          break;
        }
        case NumericLemma::mu_decreasing: {
          const double m = mu(a, b);
          if (prev_mu && !(m < *prev_mu)) rep.fail(t, al, "mu not strictly decreasing");
          prev_mu = m;
          const double floor_ratio = al / (2.0 - al);
          if (!(b * b < floor_ratio)) rep.fail(t, al, "B^2 >= alpha/(2-alpha)");
          const double ratio = std::sin(al * t) / std::sin((2.0 - al) * t);
          if (!(ratio >= floor_ratio * (1.0 - 1e-12))) rep.fail(t, al, "sin(at)/sin((2-a)t) below alpha/(2-alpha)");
          break;
        }
        case NumericLemma::ratio_bound: {
          if (!(a - 2.0 * std::numbers::sqrt2 * b >= -1e-12)) rep.fail(t, al, "A < 2 sqrt2 B");
          const double ratio = b / a;
          if (prev_ratio && !(ratio > *prev_ratio)) rep.fail(t, al, "B/A not increasing");
          prev_ratio = ratio;
          break;
        }
      }
    }
    if (lemma == NumericLemma::mu_decreasing) {
      rep.checks += 2;
      if (!(mu_along_gamma3(p, t_star(p).first) > 1.0)) rep.fail(t_star(p).first, al, "mu(t*) <= 1");
      if (!(mu_along_gamma3(p, half_pi) < 1.0)) rep.fail(half_pi, al, "mu(pi/2) >= 1");
    }
    if (lemma == NumericLemma::ratio_bound) {
      ++rep.checks;
      const auto [a, b] = gamma3_ab<double>(al, half_pi);
      if (!(a - 2.0 * std::numbers::sqrt2 * b >= -1e-12)) rep.fail(half_pi, al, "A < 2 sqrt2 B at pi/2");
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Four-step verification on Gamma3+ for T in {3, 4, 5, 6}
// ---------------------------------------------------------------------------

struct StepReport {
  int fold = 0;
  Rational alpha;
  double t0 = 0.0;
  double delta0 = 0.0;           // (2 - A(t0))^2 / (4 - A(t0)) - r
  double mu0 = 0.0;              // mu(A(t0), B(t0))
  double endpoint_margin = 0.0;  // Delta: lower bound at A(pi/2) minus r^2
  bool monotone_decreasing = false;
  bool pass = false;  // delta0 > 0 and Delta > 0
};

/// Tabulated t0 for folds 3..6.
inline double tabulated_t0(int fold) {
  switch (fold) {
    case 3: return 1.46;
    case 4: return 1.49;
    case 5: return 1.52;
    case 6: return 1.55;
    default: throw std::invalid_argument("tabulated_t0: fold must be in {3, 4, 5, 6}");
  }
}

inline double main_bound_at(double a) { return (2.0 - a) * (2.0 - a) / (4.0 - a); }

/// Phi(a, a/(4 mu0 - a)), the special-direction lower bound once mu < mu0.
inline double mu_bound(double mu0, double a) {
  const double q = (2.0 * mu0 - a) / (4.0 * mu0 - a);
  return q * q * (a * a - 4.0 * mu0 * a + 4.0);
}

/// Sign of d/da mu_bound from its factorization
/// 2 (2mu0 - a)/(4mu0 - a)^3 * (-16 mu0^2 (mu0 - 7a/4) - a^2 (10 mu0 - a) - 8 mu0).
inline double mu_bound_slope(double mu0, double a) {
  const double d = 4.0 * mu0 - a;
  return 2.0 * (2.0 * mu0 - a) / (d * d * d) *
         (-16.0 * mu0 * mu0 * (mu0 - 1.75 * a) - a * a * (10.0 * mu0 - a) - 8.0 * mu0);
}

inline StepReport step_algorithm(int fold, std::optional<double> t0_override = std::nullopt) {
  StepReport rep;
  rep.fold = fold;
  rep.t0 = t0_override.value_or(tabulated_t0(fold));
  rep.alpha = Rational(1, 1 + fold);
  const AlphaParam p = AlphaParam::from_fold(fold);
  const double al = p.alpha();
  const double r = koebe_radius(p);

  const auto [a0, b0] = gamma3_ab<double>(al, rep.t0);
  rep.delta0 = main_bound_at(a0) - r;
  rep.mu0 = mu(a0, b0);

  const double a_end = suffridge_abscissa(p);  // A(pi/2)
  rep.monotone_decreasing = true;
  for (int i = 0; i <= 256; ++i) {
    const double a = a0 + (a_end - a0) * i / 256.0;
    if (!(mu_bound_slope(rep.mu0, a) < 0.0)) rep.monotone_decreasing = false;
  }
  rep.endpoint_margin = mu_bound(rep.mu0, a_end) - r * r;
  rep.pass = rep.delta0 > 0.0 && rep.endpoint_margin > 0.0;
  return rep;
}

struct T0Solution {
  double t_root = 0.0;  // where (2 - A)^2/(4 - A) equals r
  double slack = 0.0;   // t_root - tabulated t0
};

/// Re-derives t0 by bisection on delta0(t) = 0 over [t*, pi/2].
inline std::optional<T0Solution> solve_t0(int fold) {
  const AlphaParam p = AlphaParam::from_fold(fold);
  const double r = koebe_radius(p);
  auto delta = [&](double t) { return main_bound_at(gamma3_ab<double>(p.alpha(), t).first) - r; };
  double lo = t_star(p).first, hi = std::numbers::pi / 2.0;
  if (!(delta(lo) > 0.0 && delta(hi) < 0.0)) return std::nullopt;
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    const double mid = 0.5 * (lo + hi);
    (delta(mid) > 0.0 ? lo : hi) = mid;
  }
  const double root = 0.5 * (lo + hi);
  return T0Solution{root, root - tabulated_t0(fold)};
}

// ---------------------------------------------------------------------------
// T >= 7 bound chain and the T = 1, 2 ellipse reductions
// ---------------------------------------------------------------------------

struct ChainReport {
  bool bound_monotone = false;
  bool endpoint_consistent = false;
  bool endpoint_exceeds = false;
  bool lemma_inequality = false;
  double endpoint_value = 0.0;  // (2 - A(pi/2))^4 / (4 - A(pi/2))^2
  double radius_squared = 0.0;
  std::string failing_link;  // empty when all links hold
  bool pass() const { return failing_link.empty(); }
};

inline ChainReport verify_large_fold_chain(const AlphaParam& p) {
  const double al = p.alpha();
  if (!(al > 0.0 && al <= 0.125 + 1e-15)) {
    throw std::invalid_argument("verify_large_fold_chain: alpha must lie in (0, 1/8]");
  }
  ChainReport rep;
  const double a_end = suffridge_abscissa(p);
  rep.bound_monotone = true;
  for (int i = 0; i <= 512; ++i) {
    const double a = a_end * i / 512.0;
    // d/da (2-a)^2/(4-a) = (2-a)(a-6)/(4-a)^2
    if (!((2.0 - a) * (a - 6.0) < 0.0)) rep.bound_monotone = false;
  }
  const double s = std::sin(std::numbers::pi * al / 2.0);
  const double m = main_bound_at(a_end);
  rep.endpoint_value = m * m;
  const double closed = 2.0 * (2.0 - al - s) * (2.0 - al - s) / ((2.0 - al) * (4.0 - 2.0 * al - s));
  rep.endpoint_consistent = std::abs(closed * closed - rep.endpoint_value) <= 1e-12;
  const double r = koebe_radius(p);
  rep.radius_squared = r * r;
  rep.endpoint_exceeds = rep.endpoint_value > rep.radius_squared;
  const double c = std::cos(std::numbers::pi / (3.0 - al));
  rep.lemma_inequality = (2.0 - al - s) * (2.0 - al - s) / (2.0 * (2.0 - al) * (4.0 - 2.0 * al - s)) > c * c;

  if (!rep.bound_monotone) rep.failing_link = "monotone";
  else if (!rep.endpoint_consistent) rep.failing_link = "endpoint_formula";
  else if (!rep.endpoint_exceeds) rep.failing_link = "endpoint_exceeds_radius";
  else if (!rep.lemma_inequality) rep.failing_link = "lemma_inequality";
  return rep;
}

/// Special-direction value (1-b)^2 (1 - a^2/(4b)).
inline double special_value(double a, double b) { return (1.0 - b) * (1.0 - b) * (1.0 - a * a / (4.0 * b)); }

/// Bracketed derivative factor of (1-b)^2 (3b/4 + sqrt(b(1-b))) for T = 2.
inline double fold2_slope_factor(double b) {
  return 3.0 - 9.0 * b - 12.0 * std::sqrt(b * (1.0 - b)) + 2.0 * std::sqrt(1.0 / b - 1.0);
}

struct EllipseReport {
  double fold1_max_residual = 0.0;  // |special_value - b(1-b)^2|
  bool fold1_increasing = false;
  double fold2_max_residual = 0.0;  // |special_value - (1-b)^2 (3b/4 + sqrt(b(1-b)))|
  bool fold2_increasing = false;
  double fold2_critical_point = 0.0;
  bool pass = false;
};

inline EllipseReport verify_ellipse_cases(int grid = 1000) {
  EllipseReport rep;
  const double half_pi = std::numbers::pi / 2.0;

  const AlphaParam p1 = AlphaParam::from_fold(1);
  const AlphaParam p2 = AlphaParam::from_fold(2);
  for (int i = 1; i <= grid; ++i) {
    const double t = half_pi * i / grid;
    const BoundaryPoint q1 = boundary_point(p1, CurveId::gamma3_plus, t);
    rep.fold1_max_residual =
        std::max(rep.fold1_max_residual, std::abs(special_value(q1.a, q1.b) - q1.b * (1.0 - q1.b) * (1.0 - q1.b)));
    const BoundaryPoint q2 = boundary_point(p2, CurveId::gamma3_plus, t);
    const double reduced = (1.0 - q2.b) * (1.0 - q2.b) * (0.75 * q2.b + std::sqrt(q2.b * (1.0 - q2.b)));
    rep.fold2_max_residual = std::max(rep.fold2_max_residual, std::abs(special_value(q2.a, q2.b) - reduced));
  }

  rep.fold1_increasing = true;
  rep.fold2_increasing = true;
  for (int i = 1; i <= grid; ++i) {
    const double b1 = (1.0 / 3.0) * i / grid;
    if (!((1.0 - b1) * (1.0 - 3.0 * b1) >= 0.0)) rep.fold1_increasing = false;
    const double b2 = 0.2 * i / grid;
    if (!(0.25 * (1.0 - b2) * fold2_slope_factor(b2) > 0.0)) rep.fold2_increasing = false;
  }

  double lo = 0.2, hi = 0.25;
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    const double mid = 0.5 * (lo + hi);
    (fold2_slope_factor(mid) > 0.0 ? lo : hi) = mid;
  }
  rep.fold2_critical_point = 0.5 * (lo + hi);

  rep.pass = rep.fold1_max_residual < 1e-11 && rep.fold1_increasing && rep.fold2_max_residual < 1e-11 &&
             rep.fold2_increasing && rep.fold2_critical_point > 0.20 && rep.fold2_critical_point < 0.22;
  return rep;
}

}  // namespace koebe
