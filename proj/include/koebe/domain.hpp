#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "koebe/alpha.hpp"
#include "koebe/objective.hpp"

namespace koebe {

enum class CurveId { gamma1, gamma2_plus, gamma2_minus, gamma3_plus, gamma3_minus };

inline constexpr std::array<CurveId, 5> all_curves{CurveId::gamma1, CurveId::gamma2_plus, CurveId::gamma2_minus,
                                                   CurveId::gamma3_plus, CurveId::gamma3_minus};

constexpr std::string_view to_string(CurveId c) {
  switch (c) {
    case CurveId::gamma1: return "gamma1";
    case CurveId::gamma2_plus: return "gamma2+";
    case CurveId::gamma2_minus: return "gamma2-";
    case CurveId::gamma3_plus: return "gamma3+";
    case CurveId::gamma3_minus: return "gamma3-";
  }
  return "?";
}

struct BoundaryPoint {
  CurveId curve = CurveId::gamma1;
  double t = 0.0;
  double a = 0.0;
  double b = 0.0;
};

template <class Real>
struct Uvw {
  Real u, v, w;
};

/// Below this parameter the curve Gamma3 is evaluated from its Taylor quotient.
// The direct quotient loses about eps/t^2 relative accuracy, so the cutoff is
// kept well away from zero; terms through t^39 leave no visible truncation.
inline constexpr double series_cutoff = 0.1;

namespace detail {

// Taylor coefficient of t^k (k odd) of p sin(q t) - r sin(s t).
template <class Real>
Real sine_pair_coeff(const Real& p, const Real& q, const Real& r, const Real& s, int k) {
  Real qk = Real(1), sk = Real(1), fact = Real(1);
  for (int i = 1; i <= k; ++i) {
    qk *= q;
    sk *= s;
    fact *= Real(i);
  }
  const Real c = (p * qk - r * sk) / fact;
  return ((k - 1) / 2) % 2 == 0 ? c : Real(-c);
}

// Odd-order series of p sin(q t) - r sin(s t) divided by t^3 (linear term vanishes).
template <class Real>
Real sine_pair_over_cube(const Real& p, const Real& q, const Real& r, const Real& s, const Real& t) {
  const Real t2 = t * t;
  Real acc = Real(0);
  for (int k = 39; k >= 3; k -= 2) acc = acc * t2 + sine_pair_coeff(p, q, r, s, k);
  return acc;
}

}  // namespace detail

/// The trigonometric numerators/denominator U, V, W of the Gamma3 parametrization.
template <class Real>
Uvw<Real> uvw(const Real& alpha, const Real& t) {
  using std::sin;
  const Real one = Real(1);
  return {Real(2) * sin(Real(2) * (one - alpha) * t) - Real(2) * (one - alpha) * sin(Real(2) * t),
          (one + alpha) * sin((one - alpha) * t) - (one - alpha) * sin((one + alpha) * t),
          (Real(3) - alpha) * sin((one - alpha) * t) - (one - alpha) * sin((Real(3) - alpha) * t)};
}

inline Uvw<double> uvw(const AlphaParam& p, double t) { return uvw<double>(p.alpha(), t); }

/// (A(t), B(t)) on Gamma3+, using the Taylor quotient for t < series_cutoff.
template <class Real>
std::pair<Real, Real> gamma3_ab(const Real& alpha, const Real& t) {
  const Real one = Real(1);
  if (t < Real(series_cutoff)) {
    const Real two = Real(2), three = Real(3);
    const Real u = detail::sine_pair_over_cube(two, two * (one - alpha), two * (one - alpha), two, t);
    const Real v = detail::sine_pair_over_cube(one + alpha, one - alpha, one - alpha, one + alpha, t);
    const Real w = detail::sine_pair_over_cube(three - alpha, one - alpha, one - alpha, three - alpha, t);
    return {u / w, v / w};
  }
  const Uvw<Real> f = uvw<Real>(alpha, t);
  return {f.u / f.w, f.v / f.w};
}

/// G(t, alpha), the common factor of A'(t) and B'(t). Vanishes like t^6 at
/// the origin, so small t uses the cosine series starting at t^6.
template <class Real>
Real derivative_kernel(const Real& alpha, const Real& t) {
  using std::cos;
  const Real one = Real(1);
  const Real c1 = one + alpha, w1 = Real(3) - Real(2) * alpha;
  const Real c2 = Real(3) - alpha, w2 = one - Real(2) * alpha;
  const Real c3 = -(one - alpha) * (one - alpha), w3 = Real(3);
  const Real c4 = -(one + alpha) * (Real(3) - alpha);
  if (t >= Real(0.25)) {
    return c1 * cos(w1 * t) + c2 * cos(w2 * t) + c3 * cos(w3 * t) + c4 * cos(t);
  }
  const Real t2 = t * t;
  Real acc = Real(0);
  for (int k = 16; k >= 3; --k) {
    Real p1 = Real(1), p2 = Real(1), p3 = Real(1), fact = Real(1);
    for (int i = 1; i <= 2 * k; ++i) {
      p1 *= w1;
      p2 *= w2;
      p3 *= w3;
      fact *= Real(i);
    }
    Real coeff = (c1 * p1 + c2 * p2 + c3 * p3 + c4) / fact;  // w4 = 1
    if (k % 2 == 1) coeff = -coeff;
    acc = acc * t2 + coeff;
  }
  return acc * t2 * t2 * t2;
}

struct ParamRange {
  double lo = 0.0;
  double hi = 0.0;
};

inline double suffridge_abscissa(const AlphaParam& p) {
  return 2.0 / (2.0 - p.alpha()) * std::sin(std::numbers::pi * p.alpha() / 2.0);
}

inline ParamRange curve_range(const AlphaParam& p, CurveId c) {
  switch (c) {
    case CurveId::gamma1: {
      const double x = suffridge_abscissa(p);
      return {-x, x};
    }
    case CurveId::gamma2_plus:
    case CurveId::gamma2_minus: return {0.0, 4.0 * p.alpha() / (3.0 - p.alpha())};
    case CurveId::gamma3_plus:
    case CurveId::gamma3_minus: return {0.0, std::numbers::pi / 2.0};
  }
  throw std::logic_error("curve_range: bad curve id");
}

/// Point of the univalence-domain boundary on curve `c` at parameter t
/// (alpha-form parametrizations). Throws std::out_of_range outside the
/// curve's closed parameter interval.
inline BoundaryPoint boundary_point(const AlphaParam& p, CurveId c, double t) {
  const ParamRange r = curve_range(p, c);
  if (!(t >= r.lo && t <= r.hi)) {
    throw std::out_of_range("boundary_point: t outside the range of " + std::string(to_string(c)));
  }
  const double al = p.alpha();
  switch (c) {
    case CurveId::gamma1: return {c, t, t, al / (2.0 - al)};
    case CurveId::gamma2_plus: return {c, t, t, (t - al) / (2.0 - al)};
    case CurveId::gamma2_minus: return {c, t, -t, (t - al) / (2.0 - al)};
    case CurveId::gamma3_plus: {
      const auto [a, b] = gamma3_ab<double>(al, t);
      return {c, t, a, b};
    }
    case CurveId::gamma3_minus: {
      const auto [a, b] = gamma3_ab<double>(al, t);
      return {c, t, -a, b};
    }
  }
  throw std::logic_error("boundary_point: bad curve id");
}

struct CurveDerivative {
  double da = 0.0;
  double db = 0.0;
  double kernel = 0.0;  // G(t, alpha)
};

/// A'(t), B'(t) along Gamma3+ for t in (0, pi/2).
inline CurveDerivative curve_derivative(const AlphaParam& p, double t) {
  if (!(t > 0.0 && t < std::numbers::pi / 2.0)) {
    throw std::out_of_range("curve_derivative: t must lie in (0, pi/2)");
  }
  const double al = p.alpha();
  double w = 0.0;
  if (t < series_cutoff) {
    w = detail::sine_pair_over_cube(3.0 - al, 1.0 - al, 1.0 - al, 3.0 - al, t) * t * t * t;
  } else {
    w = uvw<double>(al, t).w;
  }
  if (!(w > 0.0)) throw std::logic_error("curve_derivative: W(t) vanished");
  const double g = derivative_kernel<double>(al, t);
  const double scale = 2.0 * (1.0 - al) * g / (w * w);
  return {scale * std::sin((2.0 - al) * t), scale * std::sin(t), g};
}

/// t* = pi/(3 - alpha), where -A + B attains its minimum along Gamma3+.
inline std::pair<double, BoundaryPoint> t_star(const AlphaParam& p) {
  const double t = std::numbers::pi / (3.0 - p.alpha());
  return {t, boundary_point(p, CurveId::gamma3_plus, t)};
}

/// Corner Gamma1 cap Gamma3+: coefficients of the generalized Suffridge trinomial.
inline BoundaryPoint suffridge_point(const AlphaParam& p) {
  const double x = suffridge_abscissa(p);
  return {CurveId::gamma1, x, x, p.alpha() / (2.0 - p.alpha())};
}

inline double mu_along_gamma3(const AlphaParam& p, double t) {
  const auto [a, b] = gamma3_ab<double>(p.alpha(), t);
  return mu(a, b);
}

/// Parameter in (t*, pi/2) where mu(A(t), B(t)) = 1. mu is strictly
/// decreasing along Gamma3+, so bisection on [t*, pi/2] converges.
inline double find_t_tilde(const AlphaParam& p) {
  double lo = t_star(p).first;
  double hi = std::numbers::pi / 2.0;
  if (!(mu_along_gamma3(p, lo) > 1.0 && mu_along_gamma3(p, hi) < 1.0)) {
    throw std::runtime_error("find_t_tilde: [t*, pi/2] does not bracket mu = 1");
  }
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    const double mid = 0.5 * (lo + hi);
    (mu_along_gamma3(p, mid) > 1.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

/// Gamma3+ in the T-form parametrization, s in (0, pi/(2+2T)].
inline std::pair<double, double> tform_point(int fold, double s) {
  require_fold(fold);
  const double T = fold;
  if (!(s > 0.0 && s <= std::numbers::pi / (2.0 + 2.0 * T) * (1.0 + 1e-15))) {
    throw std::out_of_range("tform_point: s outside (0, pi/(2+2T)]");
  }
  const double den = T * std::sin((2.0 + 3.0 * T) * s) - (2.0 + 3.0 * T) * std::sin(T * s);
  const double num_a = 2.0 * T * std::sin((2.0 + 2.0 * T) * s) - (2.0 + 2.0 * T) * std::sin(2.0 * T * s);
  const double num_b = T * std::sin((2.0 + T) * s) - (2.0 + T) * std::sin(T * s);
  return {num_a / den, num_b / den};
}

enum class Membership { inside, outside, boundary };

constexpr std::string_view to_string(Membership m) {
  switch (m) {
    case Membership::inside: return "inside";
    case Membership::outside: return "outside";
    case Membership::boundary: return "boundary";
  }
  return "?";
}

inline constexpr int default_polygon_resolution = 4096;
inline constexpr double default_boundary_band = 1e-6;

/// Closed boundary polyline of U_T, traversed counterclockwise:
/// Gamma2+, Gamma3+, Gamma1 (right to left), Gamma3-, Gamma2-.
class DomainPolygon {
 public:
  struct Vertex {
    double a, b;
  };

  explicit DomainPolygon(const AlphaParam& p, int segments_per_curve = default_polygon_resolution) {
    if (segments_per_curve < 1) throw std::invalid_argument("DomainPolygon: resolution must be >= 1");
    const int n = segments_per_curve;
    auto push_curve = [&](CurveId c, bool reverse) {
      const ParamRange r = curve_range(p, c);
      for (int i = 0; i < n; ++i) {  // the last point is the next curve's first
        const int k = reverse ? n - i : i;
        const double t = (k == n) ? r.hi : r.lo + (r.hi - r.lo) * k / n;
        const BoundaryPoint q = boundary_point(p, c, t);
        vertices_.push_back({q.a, q.b});
      }
    };
    push_curve(CurveId::gamma2_plus, false);
    push_curve(CurveId::gamma3_plus, false);
    push_curve(CurveId::gamma1, true);
    push_curve(CurveId::gamma3_minus, true);
    push_curve(CurveId::gamma2_minus, true);
    for (const Vertex& v : vertices_) {
      lo_.a = std::min(lo_.a, v.a);
      lo_.b = std::min(lo_.b, v.b);
      hi_.a = std::max(hi_.a, v.a);
      hi_.b = std::max(hi_.b, v.b);
    }
  }

  const std::vector<Vertex>& vertices() const { return vertices_; }
  Vertex lower_corner() const { return lo_; }
  Vertex upper_corner() const { return hi_; }

  /// Even-odd crossing test.
  bool encloses(double a, double b) const {
    bool in = false;
    const std::size_t n = vertices_.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
      const Vertex& p = vertices_[i];
      const Vertex& q = vertices_[j];
      if ((p.b > b) != (q.b > b)) {
        const double x = p.a + (b - p.b) * (q.a - p.a) / (q.b - p.b);
        if (a < x) in = !in;
      }
    }
    return in;
  }

  double distance(double a, double b) const {
    double best = std::numeric_limits<double>::infinity();
    const std::size_t n = vertices_.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Vertex& p = vertices_[i];
      const Vertex& q = vertices_[(i + 1) % n];
      const double dx = q.a - p.a, dy = q.b - p.b;
      const double len2 = dx * dx + dy * dy;
      double s = len2 > 0.0 ? ((a - p.a) * dx + (b - p.b) * dy) / len2 : 0.0;
      s = std::clamp(s, 0.0, 1.0);
      best = std::min(best, std::hypot(a - (p.a + s * dx), b - (p.b + s * dy)));
    }
    return best;
  }

  Membership classify(double a, double b, double band) const {
    if (distance(a, b) < band) return Membership::boundary;
    return encloses(a, b) ? Membership::inside : Membership::outside;
  }

 private:
  std::vector<Vertex> vertices_;
  Vertex lo_{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  Vertex hi_{-std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
};

/// Shared immutable polygon per fold at the default resolution.
inline std::shared_ptr<const DomainPolygon> domain_polygon(int fold) {
  require_fold(fold);
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const DomainPolygon>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[fold];
  if (!slot) slot = std::make_shared<const DomainPolygon>(AlphaParam::from_fold(fold));
  return slot;
}

inline Membership contains(int fold, double a, double b, double band = default_boundary_band) {
  if (!(band > 0.0)) throw std::invalid_argument("contains: band must be positive");
  return domain_polygon(fold)->classify(a, b, band);
}

}  // namespace koebe
