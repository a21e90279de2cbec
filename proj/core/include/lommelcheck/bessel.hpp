#pragma once

#include <optional>
#include <string_view>

#include "lommelcheck/numerics.hpp"

namespace lommelcheck {

/// Order nu of a Bessel function; any finite complex number.
class Order {
 public:
  explicit Order(Complex nu) : nu_(checked(nu)) {}
  explicit Order(double nu) : Order(Complex(nu, 0.0)) {}

  [[nodiscard]] Complex value() const noexcept { return nu_; }
  [[nodiscard]] bool is_real() const noexcept { return nu_.imag() == 0.0; }
  [[nodiscard]] Order shifted(double by) const { return Order(nu_ + by); }

  /// 2*nu when nu is exactly a half-odd integer (-1/2 -> -1, 3/2 -> 3).
  [[nodiscard]] std::optional<int> twice_half_odd() const noexcept;

 private:
  Complex nu_;
};

enum class Method { Series, Asymptotic, ClosedForm };

[[nodiscard]] std::string_view to_string(Method m) noexcept;

struct EvalResult {
  Complex value;
  Method method = Method::Series;
  int terms_used = 0;
  double error_estimate = 0.0;  // heuristic absolute error
};

inline constexpr double kDefaultTolerance = 1e-15;
inline constexpr double kSwitchoverRadius = 30.0;
inline constexpr int kMaxSeriesTerms = 1000;

/// J_nu(z) from the defining power series
///   (z/2)^nu sum_m (-1)^m (z/2)^(2m) / (Gamma(nu + m + 1) m!)
/// with the principal power. Terms follow the ratio recurrence seeded by
/// 1/Gamma(nu + 1) and are generated and summed in double-double, so the
/// cancellation of real arguments (about |z| log10(e) digits) stays below
/// binary64 resolution for |z| <= 30. Summation stops once two consecutive
/// terms fall below tol relative to the running sum.
///
/// Throws DomainError for tol < 1e-16 and NonConvergence after 1000 terms.
EvalResult bessel_j_series(const Order& nu, const CutPlanePoint& z, double tol = kDefaultTolerance);

/// Elementary closed forms for nu in {-1/2, 1/2, 3/2}, encoded as 2*nu:
///   sqrt(pi z / 2) J_{-1/2}(z) = cos z
///   sqrt(pi z / 2) J_{1/2}(z)  = sin z
///   sqrt(pi z / 2) J_{3/2}(z)  = sin z / z - cos z
/// Throws UnsupportedOrder for any other encoding.
Complex bessel_j_closed_half_odd(int two_nu, const CutPlanePoint& z);

// Series for |z| <= switchover, Hankel expansion beyond.
EvalResult bessel_j(const Order& nu, const CutPlanePoint& z, double tol = kDefaultTolerance,
                    double switchover = kSwitchoverRadius);

}  // namespace lommelcheck
