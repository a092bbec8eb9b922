#pragma once

#include <stdexcept>

namespace koebe {

/// Chebyshev polynomial of the second kind U_k(x), evaluated by the
/// three-term recurrence U_{k+1} = 2x U_k - U_{k-1}.
template <class Real>
Real cheb_u(int k, const Real& x) {
  if (k < 0) throw std::invalid_argument("cheb_u: degree must be non-negative");
  Real prev = Real(1);  // U_0
  if (k == 0) return prev;
  Real cur = Real(2) * x;  // U_1
  for (int j = 1; j < k; ++j) {
    Real next = Real(2) * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// U'_k(x) from the differentiated recurrence
/// U'_{k+1} = 2 U_k + 2x U'_k - U'_{k-1}.
template <class Real>
Real cheb_u_deriv(int k, const Real& x) {
  if (k < 0) throw std::invalid_argument("cheb_u_deriv: degree must be non-negative");
  if (k == 0) return Real(0);
  Real u_prev = Real(1);        // U_0
  Real u_cur = Real(2) * x;     // U_1
  Real d_prev = Real(0);        // U'_0
  Real d_cur = Real(2);         // U'_1
  for (int j = 1; j < k; ++j) {
    Real d_next = Real(2) * u_cur + Real(2) * x * d_cur - d_prev;
    Real u_next = Real(2) * x * u_cur - u_prev;
    u_prev = u_cur;
    u_cur = u_next;
    d_prev = d_cur;
    d_cur = d_next;
  }
  return d_cur;
}

}  // namespace koebe
