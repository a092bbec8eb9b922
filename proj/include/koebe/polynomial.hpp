#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace koebe {

using Rational = boost::multiprecision::cpp_rational;
using Extended = boost::multiprecision::cpp_bin_float_50;

/// Dense polynomial with ascending coefficients; trailing zeros are trimmed,
/// so the zero polynomial has no coefficients and degree -1.
template <class Coeff>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Coeff>& coeffs() const { return coeffs_; }
  const Coeff& operator[](std::size_t i) const { return coeffs_[i]; }

  template <class X>
  X evaluate(const X& x) const {
    X acc = X(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + X(coeffs_[i]);
    return acc;
  }

  Coeff operator()(const Coeff& x) const { return evaluate<Coeff>(x); }

  Polynomial derivative() const {
    std::vector<Coeff> d;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * Coeff(static_cast<int>(i)));
    return Polynomial(std::move(d));
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == Coeff(0)) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

using ExactPolynomial = Polynomial<Rational>;
using FloatPolynomial = Polynomial<double>;

/// Strict sign changes between consecutive nonzero entries.
template <class T>
int sign_variations(std::span<const T> values) {
  int count = 0;
  int last = 0;
  for (const T& v : values) {
    const int s = v > T(0) ? 1 : (v < T(0) ? -1 : 0);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

template <class T>
int sign_variations(const std::vector<T>& values) {
  return sign_variations(std::span<const T>(values));
}

}  // namespace koebe
