#pragma once

// Independent reference values in 50-digit arithmetic. Nothing here calls
// the library: these are the closed forms written out directly, with the
// small-t guard replaced by plain extra precision.

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <utility>

namespace oracle {

using X = boost::multiprecision::cpp_bin_float_50;

inline X pi() { return boost::math::constants::pi<X>(); }

inline X alpha(int fold) { return X(1) / (1 + fold); }

inline double radius(int fold) {
  const X c = cos(pi() * (1 + fold) / (2 + 3 * fold));
  return static_cast<double>(4 * c * c);
}

inline std::pair<double, double> extremal(int fold) {
  const X d = X(2 + 3 * fold);
  const X c = cos(pi() * fold / d);
  return {static_cast<double>(2 * (-fold + (2 + 2 * fold) * c) / d),
          static_cast<double>((2 + fold - 2 * fold * c) / d)};
}

// (A, B) on Gamma3+ straight from the sine quotients.
inline std::pair<X, X> gamma3_x(const X& al, const X& t) {
  const X one = 1;
  const X u = 2 * sin(2 * (one - al) * t) - 2 * (one - al) * sin(2 * t);
  const X v = (one + al) * sin((one - al) * t) - (one - al) * sin((one + al) * t);
  const X w = (3 - al) * sin((one - al) * t) - (one - al) * sin((3 - al) * t);
  return {u / w, v / w};
}

inline std::pair<double, double> gamma3(const X& al, const X& t) {
  const auto [a, b] = gamma3_x(al, t);
  return {static_cast<double>(a), static_cast<double>(b)};
}

inline std::pair<double, double> gamma3(double al, double t) { return gamma3(X(al), X(t)); }

// U_k(cos th) = sin((k+1) th)/sin th.
inline double cheb_u_cos(int k, double theta) {
  const X th(theta);
  return static_cast<double>(sin((k + 1) * th) / sin(th));
}

inline double suffridge_radius(const X& al) {
  const X s = sin(pi() * al / 2);
  const X k = (1 - al) / (2 - al);
  return static_cast<double>(sqrt(4 * k * k * (1 - s * s / (al * (2 - al)))));
}

// G(t, alpha) by direct cosines, fine for t away from 0 at 50 digits.
inline double kernel(double al_d, double t_d) {
  const X al(al_d), t(t_d), one = 1;
  return static_cast<double>((one + al) * cos((3 - 2 * al) * t) + (3 - al) * cos((one - 2 * al) * t) -
                             (one - al) * (one - al) * cos(3 * t) - (one + al) * (3 - al) * cos(t));
}

}  // namespace oracle
