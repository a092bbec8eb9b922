#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "koebe/domain.hpp"
#include "koebe/objective.hpp"

namespace koebe {

struct DirectionalMin {
  double phi = 0.0;
  double value = 0.0;  // squared distance
};

/// Minimum of Phi(a, b, .) over the unit circle. The stationary points of
/// Phi in varphi are 0, pi/T and (when |mu| <= 1) arccos(-mu)/T, so the
/// minimum is taken over that candidate set. Ties keep the main direction.
inline DirectionalMin min_over_direction(const Trinomial& f) {
  require_fold(f.fold);
  const double main_phi = std::numbers::pi / f.fold;
  DirectionalMin best{main_phi, phi(f.fold, f.a, f.b, main_phi)};
  auto consider = [&](double ph) {
    const double v = phi(f.fold, f.a, f.b, ph);
    if (v < best.value) best = {ph, v};
  };
  if (f.b != 0.0) {
    const double m = mu(f.a, f.b);
    if (std::abs(m) <= 1.0) consider(std::acos(-m) / f.fold);
  }
  consider(0.0);
  return best;
}

/// Thread cap for scans: KOEBE_THREADS if set and positive, else the hardware count.
inline unsigned scan_threads() {
  if (const char* env = std::getenv("KOEBE_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

struct ScanSample {
  CurveId curve = CurveId::gamma1;
  double t = 0.0;
  double a = 0.0;
  double b = 0.0;
  double phi = 0.0;
  double dist = 0.0;  // minimum modulus over the circle, not squared
};

struct ScanCurve {
  CurveId curve;
  ParamRange range;
};

/// Curves with a >= 0 that carry the minimum by the axial symmetry of U_T.
inline std::vector<ScanCurve> half_boundary(const AlphaParam& p) {
  return {{CurveId::gamma1, {0.0, curve_range(p, CurveId::gamma1).hi}},
          {CurveId::gamma2_plus, curve_range(p, CurveId::gamma2_plus)},
          {CurveId::gamma3_plus, curve_range(p, CurveId::gamma3_plus)}};
}

inline std::vector<ScanCurve> full_boundary(const AlphaParam& p) {
  std::vector<ScanCurve> out;
  for (CurveId c : all_curves) out.push_back({c, curve_range(p, c)});
  return out;
}

inline ScanSample evaluate_sample(int fold, const AlphaParam& p, CurveId c, double t) {
  const BoundaryPoint q = boundary_point(p, c, t);
  const DirectionalMin m = min_over_direction({fold, q.a, q.b});
  return {c, t, q.a, q.b, m.phi, std::sqrt(m.value)};
}

/// `resolution` equispaced samples (endpoints included) on each curve, in
/// curve order. Results are independent of the thread count.
inline std::vector<ScanSample> sample_boundary(int fold, int resolution, std::span<const ScanCurve> curves,
                                               unsigned threads = scan_threads()) {
  require_fold(fold);
  if (resolution < 2) throw std::invalid_argument("sample_boundary: resolution must be >= 2");
  const AlphaParam p = AlphaParam::from_fold(fold);
  const std::size_t per = static_cast<std::size_t>(resolution);
  const std::size_t total = per * curves.size();
  std::vector<ScanSample> out(total);

  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      const ScanCurve& sc = curves[k / per];
      const std::size_t i = k % per;
      const double t = (i + 1 == per) ? sc.range.hi
                                      : sc.range.lo + (sc.range.hi - sc.range.lo) * static_cast<double>(i) / (per - 1);
      out[k] = evaluate_sample(fold, p, sc.curve, t);
    }
  };

  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(total / 1024 + 1)));
  if (threads == 1) {
    work(0, total);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (total + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
      const std::size_t begin = w * chunk;
      const std::size_t end = std::min(total, begin + chunk);
      if (begin < end) pool.emplace_back(work, begin, end);
    }
    for (std::thread& th : pool) th.join();
  }
  return out;
}

struct GridSpec {
  int resolution = 4096;
  int phi_resolution = 0;  // 0: varphi minimized analytically over stationary points
  int refine_depth = 40;
};

struct ScanResult {
  int fold = 1;
  double r_min = 0.0;
  double argmin_a = 0.0;
  double argmin_b = 0.0;
  double argmin_phi = 0.0;
  CurveId argmin_curve = CurveId::gamma1;
  double argmin_t = 0.0;
  GridSpec grid;
};

/// Golden-section search for the minimum of `g` on [lo, hi].
template <class F>
std::pair<double, double> golden_section(F&& g, double lo, double hi, int iterations) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = g(x1), f2 = g(x2);
  for (int i = 0; i < iterations; ++i) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = g(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = g(x2);
    }
  }
  return f1 <= f2 ? std::pair{x1, f1} : std::pair{x2, f2};
}

/// Global minimum of the boundary distance over the a >= 0 half of the
/// boundary of U_T, refined by golden section around the best sample.
inline ScanResult boundary_scan(int fold, int resolution = 4096, int refine_depth = 40,
                                unsigned threads = scan_threads()) {
  require_fold(fold);
  if (resolution < 64) throw std::invalid_argument("boundary_scan: resolution must be >= 64");
  const AlphaParam p = AlphaParam::from_fold(fold);
  const std::vector<ScanCurve> curves = half_boundary(p);
  const std::vector<ScanSample> samples = sample_boundary(fold, resolution, curves, threads);

  std::size_t best = 0;
  for (std::size_t k = 1; k < samples.size(); ++k) {
    if (samples[k].dist < samples[best].dist) best = k;
  }
  ScanSample winner = samples[best];
  double best_value = phi(fold, winner.a, winner.b, winner.phi);

  if (refine_depth > 0) {
    const std::size_t per = static_cast<std::size_t>(resolution);
    const ScanCurve& sc = curves[best / per];
    const double step = (sc.range.hi - sc.range.lo) / (per - 1);
    const double lo = std::max(sc.range.lo, winner.t - step);
    const double hi = std::min(sc.range.hi, winner.t + step);
    auto g = [&](double t) {
      const BoundaryPoint q = boundary_point(p, sc.curve, t);
      return min_over_direction({fold, q.a, q.b}).value;
    };
    const auto [t_ref, v_ref] = golden_section(g, lo, hi, refine_depth);
    if (v_ref < best_value) {
      winner = evaluate_sample(fold, p, sc.curve, t_ref);
      best_value = phi(fold, winner.a, winner.b, winner.phi);
    }
  }

  return {fold, std::sqrt(best_value), winner.a, winner.b, winner.phi, winner.curve, winner.t,
          GridSpec{resolution, 0, refine_depth}};
}

struct GlobalVerifyReport {
  bool pass = false;
  bool radius_ok = false;
  bool uniqueness_ok = false;
  double r_min = 0.0;
  double r_expected = 0.0;
  double uniqueness_excess = 0.0;  // min over far samples of dist - r
  std::size_t far_samples = 0;
  std::optional<ScanSample> offender;
  ScanResult scan;
};

struct GlobalVerifyOptions {
  int resolution = 4096;
  int refine_depth = 40;
  double neighborhood = 0.01;  // exclusion radius around (+-a0, b0)
  double gap = 1e-4;           // required excess of far samples over r
  std::optional<double> claimed_radius;
};

/// Checks that the scan reproduces the claimed Koebe radius within `margin`
/// and that every boundary sample away from the extremal pair (+-a0, b0)
/// stays above r + gap. Failures are reported, never thrown.
inline GlobalVerifyReport global_verify(int fold, double margin, const GlobalVerifyOptions& opt = {},
                                        unsigned threads = scan_threads()) {
  require_fold(fold);
  if (!(margin > 0.0)) throw std::invalid_argument("global_verify: margin must be positive");
  GlobalVerifyReport rep;
  rep.scan = boundary_scan(fold, opt.resolution, opt.refine_depth, threads);
  rep.r_min = rep.scan.r_min;
  rep.r_expected = opt.claimed_radius.value_or(koebe_radius(fold));
  rep.radius_ok = std::abs(rep.r_min - rep.r_expected) <= margin;

  const AlphaParam p = AlphaParam::from_fold(fold);
  const auto [a0, b0] = extremal_coeffs(fold);
  const std::vector<ScanCurve> curves = full_boundary(p);
  const std::vector<ScanSample> samples = sample_boundary(fold, opt.resolution, curves, threads);
  rep.uniqueness_excess = std::numeric_limits<double>::infinity();
  std::optional<ScanSample> worst;
  for (const ScanSample& s : samples) {
    const double near = std::min(std::hypot(s.a - a0, s.b - b0), std::hypot(s.a + a0, s.b - b0));
    if (near <= opt.neighborhood) continue;
    ++rep.far_samples;
    const double excess = s.dist - rep.r_expected;
    if (excess < rep.uniqueness_excess) {
      rep.uniqueness_excess = excess;
      worst = s;
    }
  }
  rep.uniqueness_ok = rep.uniqueness_excess >= opt.gap;
  rep.pass = rep.radius_ok && rep.uniqueness_ok;
  if (!rep.radius_ok) {
    const ScanResult& s = rep.scan;
    rep.offender = ScanSample{s.argmin_curve, s.argmin_t, s.argmin_a, s.argmin_b, s.argmin_phi, s.r_min};
  } else if (!rep.uniqueness_ok) {
    rep.offender = worst;
  }
  return rep;
}

enum class Univalence { univalent, not_univalent, marginal };

constexpr std::string_view to_string(Univalence u) {
  switch (u) {
    case Univalence::univalent: return "univalent";
    case Univalence::not_univalent: return "not_univalent";
    case Univalence::marginal: return "marginal";
  }
  return "?";
}

struct UnivalenceVerdict {
  Univalence verdict = Univalence::univalent;
  int resolution = 0;
  std::optional<std::pair<double, double>> witness;  // (phi1, phi2) with F(e^{i phi1}) ~ F(e^{i phi2})
  double witness_tolerance = 0.0;
  int derivative_winding = 0;  // zeros of F' inside the disk
  double closest_approach = std::numeric_limits<double>::infinity();
};

namespace detail {

struct CrossingScan {
  std::optional<std::pair<double, double>> witness;
  double closest = std::numeric_limits<double>::infinity();
  double max_segment = 0.0;
  double diameter = 0.0;
};

inline double cross(std::complex<double> u, std::complex<double> v) { return u.real() * v.imag() - u.imag() * v.real(); }

inline double point_segment_distance(std::complex<double> x, std::complex<double> p, std::complex<double> q) {
  const std::complex<double> d = q - p;
  const double len2 = std::norm(d);
  double s = len2 > 0.0 ? ((x - p) * std::conj(d)).real() / len2 : 0.0;
  s = std::clamp(s, 0.0, 1.0);
  return std::abs(x - (p + s * d));
}

// Self-intersections of the closed polyline through `w`, with spatial hashing.
inline CrossingScan scan_crossings(const std::vector<std::complex<double>>& w, double approach_pad) {
  CrossingScan out;
  const std::size_t n = w.size();
  double lo_x = w[0].real(), hi_x = lo_x, lo_y = w[0].imag(), hi_y = lo_y;
  for (std::size_t i = 0; i < n; ++i) {
    out.max_segment = std::max(out.max_segment, std::abs(w[(i + 1) % n] - w[i]));
    lo_x = std::min(lo_x, w[i].real());
    hi_x = std::max(hi_x, w[i].real());
    lo_y = std::min(lo_y, w[i].imag());
    hi_y = std::max(hi_y, w[i].imag());
  }
  out.diameter = std::hypot(hi_x - lo_x, hi_y - lo_y);
  const double pad = approach_pad * out.diameter;
  const double cell = std::max(out.max_segment + 2.0 * pad, 1e-300);
  const double eps = 1e-12 * out.diameter * out.diameter;

  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> grid;
  auto key = [](std::int64_t ix, std::int64_t iy) {
    return (static_cast<std::uint64_t>(ix + (1ll << 31)) << 32) | static_cast<std::uint64_t>(iy + (1ll << 31));
  };
  for (std::size_t i = 0; i < n; ++i) {
    const std::complex<double> p = w[i], q = w[(i + 1) % n];
    const auto x0 = static_cast<std::int64_t>(std::floor((std::min(p.real(), q.real()) - pad - lo_x) / cell));
    const auto x1 = static_cast<std::int64_t>(std::floor((std::max(p.real(), q.real()) + pad - lo_x) / cell));
    const auto y0 = static_cast<std::int64_t>(std::floor((std::min(p.imag(), q.imag()) - pad - lo_y) / cell));
    const auto y1 = static_cast<std::int64_t>(std::floor((std::max(p.imag(), q.imag()) + pad - lo_y) / cell));
    for (auto ix = x0; ix <= x1; ++ix)
      for (auto iy = y0; iy <= y1; ++iy) grid[key(ix, iy)].push_back(static_cast<std::uint32_t>(i));
  }

  std::optional<std::pair<std::size_t, std::size_t>> first;
  std::pair<double, double> first_params{};
  for (const auto& [k, ids] : grid) {
    for (std::size_t u = 0; u < ids.size(); ++u) {
      for (std::size_t v = u + 1; v < ids.size(); ++v) {
        std::size_t i = std::min(ids[u], ids[v]), j = std::max(ids[u], ids[v]);
        const std::size_t gap = j - i;
        if (gap < 2 || gap > n - 2) continue;  // adjacent, cyclically
        const std::complex<double> p = w[i], q = w[(i + 1) % n], r = w[j], s = w[(j + 1) % n];
        const double o1 = cross(q - p, r - p), o2 = cross(q - p, s - p);
        const double o3 = cross(s - r, p - r), o4 = cross(s - r, q - r);
        const bool proper = std::abs(o1) > eps && std::abs(o2) > eps && std::abs(o3) > eps &&
                            std::abs(o4) > eps && (o1 > 0) != (o2 > 0) && (o3 > 0) != (o4 > 0);
        if (proper) {
          out.closest = 0.0;
          if (!first || std::pair{i, j} < *first) {
            const double den = cross(q - p, s - r);
            first = std::pair{i, j};
            first_params = {cross(r - p, s - r) / den, cross(r - p, q - p) / den};
          }
          continue;
        }
        const double d = std::min({point_segment_distance(p, r, s), point_segment_distance(q, r, s),
                                   point_segment_distance(r, p, q), point_segment_distance(s, p, q)});
        out.closest = std::min(out.closest, d);
      }
    }
  }
  if (first) {
    const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
    out.witness = std::pair{(static_cast<double>(first->first) + first_params.first) * step,
                            (static_cast<double>(first->second) + first_params.second) * step};
  }
  return out;
}

}  // namespace detail

/// Numerical univalence oracle: the image of the unit circle must be a
/// simple closed curve and F' must not wind around 0 on the circle.
inline UnivalenceVerdict univalence_check(const Trinomial& f, int resolution) {
  require_fold(f.fold);
  if (resolution < 256) throw std::invalid_argument("univalence_check: resolution must be >= 256");

  auto sample = [&](int n, std::vector<std::complex<double>>& w, std::vector<std::complex<double>>& dw) {
    w.resize(static_cast<std::size_t>(n));
    dw.resize(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
      const std::complex<double> z = std::polar(1.0, 2.0 * std::numbers::pi * k / n);
      w[static_cast<std::size_t>(k)] = eval_trinomial(f, z);
      dw[static_cast<std::size_t>(k)] = eval_trinomial_derivative(f, z);
    }
  };

  UnivalenceVerdict out;
  std::vector<std::complex<double>> w, dw;
  int n = resolution;
  sample(n, w, dw);

  double turn = 0.0;
  for (std::size_t k = 0; k < dw.size(); ++k) turn += std::arg(dw[(k + 1) % dw.size()] / dw[k]);
  out.derivative_winding = static_cast<int>(std::lround(turn / (2.0 * std::numbers::pi)));

  const double approach = 10.0 / (static_cast<double>(resolution) * resolution);
  detail::CrossingScan scan = detail::scan_crossings(w, approach);
  // A zero of F' inside the disk forces a self-intersection; look closer for it.
  for (int refine = 0; refine < 4 && !scan.witness && out.derivative_winding != 0; ++refine) {
    n *= 4;
    sample(n, w, dw);
    scan = detail::scan_crossings(w, approach);
  }

  out.resolution = n;
  out.closest_approach = scan.closest;
  out.witness_tolerance = scan.max_segment;
  if (scan.witness) {
    out.verdict = Univalence::not_univalent;
    out.witness = scan.witness;
  } else if (out.derivative_winding != 0 || scan.closest < approach * scan.diameter) {
    out.verdict = Univalence::marginal;
  } else {
    out.verdict = Univalence::univalent;
  }
  return out;
}

struct AgreementReport {
  double fraction = 1.0;
  std::size_t drawn = 0;
  std::size_t considered = 0;
  std::size_t agreed = 0;
  bool vacuous = false;  // every draw fell inside the band
};

/// Fraction of random coefficient pairs (outside a band around the
/// boundary) on which the polygon test and the univalence oracle agree.
inline AgreementReport domain_agreement(int fold, std::size_t samples, double band, std::uint64_t seed = 20261016,
                                        int resolution = 2048) {
  require_fold(fold);
  if (samples < 1000) throw std::invalid_argument("domain_agreement: samples must be >= 1000");
  const auto poly = domain_polygon(fold);
  const auto lo = poly->lower_corner();
  const auto hi = poly->upper_corner();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> da(lo.a, hi.a), db(lo.b, hi.b);

  AgreementReport rep;
  rep.drawn = samples;
  for (std::size_t k = 0; k < samples; ++k) {
    const double a = da(rng), b = db(rng);
    if (poly->distance(a, b) < band) continue;
    ++rep.considered;
    const bool inside = poly->encloses(a, b);
    const Univalence u = univalence_check({fold, a, b}, resolution).verdict;
    if ((inside && u == Univalence::univalent) || (!inside && u == Univalence::not_univalent)) ++rep.agreed;
  }
  rep.vacuous = rep.considered == 0;
  rep.fraction = rep.vacuous ? 1.0 : static_cast<double>(rep.agreed) / static_cast<double>(rep.considered);
  return rep;
}

}  // namespace koebe
