#pragma once

#include <vector>

#include "lommelcheck/numerics.hpp"

namespace lommelcheck {

/// Parameters of a Lanczos-type rational approximation
///   Gamma(w) = sqrt(2 pi) (c0 + sum_j c_j / (w + j)) / w * t^(w + 1/2) e^(-t),
///   t = w + shift + 1/2.
class GammaConfig {
 public:
  GammaConfig(double shift, std::vector<double> coefficients);

  [[nodiscard]] double shift() const noexcept { return shift_; }
  [[nodiscard]] const std::vector<double>& coefficients() const noexcept { return coefficients_; }

  // Godfrey's 15-term set with shift 607/128.
  static const GammaConfig& standard();

 private:
  double shift_;
  std::vector<double> coefficients_;
};

// True when w is within one ulp of 0, -1, -2, ...
[[nodiscard]] bool near_nonpositive_integer(Complex w) noexcept;

/// Complex gamma function. Uses reflection for re(w) < 1/2.
/// Throws PoleError near non-positive integers and OverflowError when the
/// result is not representable.
Complex gamma(Complex w);
Complex gamma(Complex w, const GammaConfig& config);

// 1/Gamma(w); entire, exactly 0 at the poles of Gamma.
Complex reciprocal_gamma(Complex w);
Complex reciprocal_gamma(Complex w, const GammaConfig& config);

}  // namespace lommelcheck
