#pragma once

#include <cmath>
#include <stdexcept>

namespace koebe {

/// Fold order T >= 1 together with alpha = 1/(1+T) in (0, 1/2].
/// The fold may be non-integral when built from an arbitrary alpha.
class AlphaParam {
 public:
  static AlphaParam from_fold(int fold) {
    if (fold < 1) throw std::invalid_argument("AlphaParam: fold must be >= 1");
    return AlphaParam(1.0 / (1.0 + fold), static_cast<double>(fold));
  }

  static AlphaParam from_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha <= 0.5)) {
      throw std::invalid_argument("AlphaParam: alpha must lie in (0, 1/2]");
    }
    return AlphaParam(alpha, 1.0 / alpha - 1.0);
  }

  double alpha() const { return alpha_; }
  double fold() const { return fold_; }

  bool has_integral_fold() const { return std::abs(fold_ - std::round(fold_)) < 1e-9; }

 private:
  AlphaParam(double alpha, double fold) : alpha_(alpha), fold_(fold) {}

  double alpha_;
  double fold_;
};

inline void require_fold(int fold) {
  if (fold < 1) throw std::invalid_argument("fold must be >= 1");
}

}  // namespace koebe
