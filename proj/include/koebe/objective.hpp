#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <utility>

#include "koebe/alpha.hpp"

namespace koebe {

/// F(z) = z + a z^{1+T} + b z^{1+2T}. Univalence is not implied.
struct Trinomial {
  int fold = 1;
  double a = 0.0;
  double b = 0.0;
};

inline std::complex<double> eval_trinomial(const Trinomial& f, std::complex<double> z) {
  const std::complex<double> zt = std::pow(z, f.fold);
  return z * (1.0 + zt * (f.a + f.b * zt));
}

/// F'(z) = 1 + (1+T) a z^T + (1+2T) b z^{2T}.
inline std::complex<double> eval_trinomial_derivative(const Trinomial& f, std::complex<double> z) {
  const std::complex<double> zt = std::pow(z, f.fold);
  return 1.0 + zt * ((1.0 + f.fold) * f.a + (1.0 + 2.0 * f.fold) * f.b * zt);
}

/// Squared modulus of F on the unit circle, |F(e^{i varphi})|^2.
inline double phi(int fold, double a, double b, double varphi) {
  // cos(T varphi) only depends on T varphi mod 2 pi.
  const double w = std::fmod(fold * varphi, 2.0 * std::numbers::pi);
  return 1.0 + a * a + b * b + 2.0 * a * (1.0 + b) * std::cos(w) + 2.0 * b * std::cos(2.0 * w);
}

/// Squared distance in the main direction e^{i pi/T}: (1 - a + b)^2.
inline double main_value(double a, double b) {
  const double h = 1.0 - a + b;
  return h * h;
}

/// mu(a, b) = a (1+b) / (4b); undefined on b = 0.
inline double mu(double a, double b) {
  if (b == 0.0) throw std::domain_error("mu: undefined at b = 0");
  return a * (1.0 + b) / (4.0 * b);
}

struct SpecialDirection {
  double phi_hat = 0.0;  // in [0, pi/T)
  double value = 0.0;    // Phi at phi_hat, strictly below the main value
  bool on_axis = false;  // phi_hat == 0, i.e. mu == -1
};

struct DirectionProfile {
  double main = 0.0;              // H(a, b)
  std::optional<double> mu;       // empty when b == 0
  std::optional<SpecialDirection> special;
};

inline DirectionProfile direction_profile(const Trinomial& f) {
  DirectionProfile out;
  out.main = main_value(f.a, f.b);
  if (f.b == 0.0) return out;
  out.mu = mu(f.a, f.b);
  // For b < 0 the stationary point in varphi is a maximum; no special direction.
  if (f.b < 0.0 || std::abs(*out.mu) > 1.0) return out;

  const double value = (1.0 - f.b) * (1.0 - f.b) * (1.0 - f.a * f.a / (4.0 * f.b));
  if (value < out.main) {
    const double phi_hat = std::acos(-*out.mu) / f.fold;
    out.special = SpecialDirection{phi_hat, value, phi_hat == 0.0};
  }
  return out;
}

/// Coefficients (a0, b0) of the extremal trinomial.
inline std::pair<double, double> extremal_coeffs(int fold) {
  require_fold(fold);
  const double d = 2.0 + 3.0 * fold;
  const double c = std::cos(std::numbers::pi * fold / d);
  return {2.0 / d * (-fold + (2.0 + 2.0 * fold) * c), (2.0 + fold - 2.0 * fold * c) / d};
}

/// Koebe radius 4 cos^2(pi/(3 - alpha)); accepts non-integral folds.
inline double koebe_radius(const AlphaParam& p) {
  const double c = std::cos(std::numbers::pi / (3.0 - p.alpha()));
  return 4.0 * c * c;
}

/// Koebe radius 4 cos^2(pi (1+T) / (2+3T)).
inline double koebe_radius(int fold) {
  require_fold(fold);
  const double c = std::cos(std::numbers::pi * (1.0 + fold) / (2.0 + 3.0 * fold));
  return 4.0 * c * c;
}

/// Minimum distance to the boundary image of the generalized Suffridge trinomial.
inline double suffridge_radius(const AlphaParam& p) {
  const double al = p.alpha();
  const double s = std::sin(std::numbers::pi * al / 2.0);
  const double k = (1.0 - al) / (2.0 - al);
  return std::sqrt(4.0 * k * k * (1.0 - s * s / (al * (2.0 - al))));
}

}  // namespace koebe
