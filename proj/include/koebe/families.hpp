#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "koebe/chebyshev.hpp"

namespace koebe {

/// Coefficients of a normalized polynomial z + sum c_j z^{1+(j-1)*fold}.
/// coeffs[0] is always 1; coeffs[j-1] multiplies z^{1+(j-1)*fold}.
struct PolynomialFamilyCoeffs {
  int degree = 1;
  int fold = 1;
  std::vector<double> coeffs;

  std::complex<double> operator()(std::complex<double> z) const {
    std::complex<double> acc = 0.0;
    for (std::size_t j = coeffs.size(); j-- > 0;) {
      acc = acc * std::pow(z, fold) + coeffs[j];
    }
    return z * acc;
  }
};

namespace detail {

inline void require_agreement(double lhs, double rhs, const char* what) {
  if (std::abs(lhs - rhs) > 1e-10 * std::max(1.0, std::abs(lhs))) {
    throw std::logic_error(std::string(what) + ": closed forms disagree");
  }
}

}  // namespace detail

/// Q_N: the extremizer of sup p(-1) over real univalent polynomials of
/// degree N. Both closed forms of B_j are evaluated and must agree.
inline PolynomialFamilyCoeffs q_coeffs(int degree) {
  if (degree < 2) throw std::invalid_argument("q_coeffs: degree must be >= 2");
  constexpr double pi = std::numbers::pi;
  const double n2 = degree + 2.0;
  const double x = std::cos(pi / n2);
  const double du_top = cheb_u_deriv(degree, x);

  PolynomialFamilyCoeffs out{degree, 1, {1.0}};
  for (int j = 2; j <= degree; ++j) {
    const double sine_form =
        ((degree - j + 3) * std::sin(pi * (j + 1) / n2) - (degree - j + 1) * std::sin(pi * (j - 1) / n2)) *
        std::sin(pi * j / n2) / (n2 * std::sin(2.0 * pi / n2) * std::sin(pi / n2));
    const double cheb_form = cheb_u_deriv(degree - j + 1, x) / du_top * cheb_u(j - 1, x);
    detail::require_agreement(sine_form, cheb_form, "q_coeffs");
    out.coeffs.push_back(cheb_form);
  }
  return out;
}

/// Conjectured odd extremizer of degree N = 2n-1; coefficient of z^{2j-1}
/// is U'_{N+3-2j}(c) / U'_{N+1}(c) with c = cos(pi/(N+3)).
inline PolynomialFamilyCoeffs odd_extremizer_coeffs(int degree) {
  if (degree < 3 || degree % 2 == 0) {
    throw std::invalid_argument("odd_extremizer_coeffs: degree must be odd and >= 3");
  }
  const int terms = (degree + 1) / 2;
  const double x = std::cos(std::numbers::pi / (degree + 3.0));
  const double denom = cheb_u_deriv(degree + 1, x);
  PolynomialFamilyCoeffs out{degree, 2, {}};
  for (int j = 1; j <= terms; ++j) {
    out.coeffs.push_back(cheb_u_deriv(degree + 3 - 2 * j, x) / denom);
  }
  return out;
}

/// Taylor coefficients of the T-fold symmetric Koebe function z/(1-z^T)^{2/T}.
inline PolynomialFamilyCoeffs symmetric_koebe_coeffs(int fold, int terms) {
  if (fold < 1) throw std::invalid_argument("symmetric_koebe_coeffs: fold must be >= 1");
  if (terms < 1) throw std::invalid_argument("symmetric_koebe_coeffs: terms must be >= 1");
  PolynomialFamilyCoeffs out{1 + (terms - 1) * fold, fold, {1.0}};
  double c = 1.0;
  for (int s = 1; s < terms; ++s) {
    c *= (s + 2.0 / fold - 1.0) / s;
    out.coeffs.push_back(c);
  }
  return out;
}

/// Conjectured extremizer B^(T) with n nonzero terms: coefficients b_j * gamma_j.
inline PolynomialFamilyCoeffs general_extremizer_coeffs(int fold, int terms) {
  if (fold < 1) throw std::invalid_argument("general_extremizer_coeffs: fold must be >= 1");
  if (terms < 2) throw std::invalid_argument("general_extremizer_coeffs: terms must be >= 2");
  constexpr double pi = std::numbers::pi;
  const double shifted = terms + 2.0 / fold;
  const double cg = std::cos(pi / shifted);
  const double cb = std::cos(pi / (fold * terms + 2.0));
  const double db_top = cheb_u_deriv(fold * terms, cb);

  PolynomialFamilyCoeffs out{1 + fold * (terms - 1), fold, {1.0}};
  double gamma_sine = 1.0;
  double gamma_cheb = 1.0;
  for (int j = 2; j <= terms; ++j) {
    const int s = j - 1;
    gamma_sine *= std::sin(pi * (s + 2.0 / fold - 1.0) / shifted) / std::sin(pi * s / shifted);
    gamma_cheb *= cheb_u(terms - s, cg) / cheb_u(s - 1, cg);
    detail::require_agreement(gamma_sine, gamma_cheb, "general_extremizer_coeffs");
    const double b = cheb_u_deriv(fold * (terms - j + 1), cb) / db_top;
    out.coeffs.push_back(b * gamma_cheb);
  }
  return out;
}

}  // namespace koebe
