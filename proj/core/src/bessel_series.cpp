#include <algorithm>
#include <cmath>
#include <string>

#include "lommelcheck/bessel.hpp"
#include "lommelcheck/detail/double_double.hpp"
#include "lommelcheck/errors.hpp"
#include "lommelcheck/gamma.hpp"
#include "lommelcheck/hankel.hpp"

namespace lommelcheck {

using detail::ComplexDD;
using detail::DoubleDouble;

std::optional<int> Order::twice_half_odd() const noexcept {
  if (!is_real()) {
    return std::nullopt;
  }
  const double twice = 2.0 * nu_.real();
  if (twice != std::trunc(twice) || std::abs(twice) > 1e6) {
    return std::nullopt;
  }
  const auto k = static_cast<int>(twice);
  if (k % 2 == 0) {
    return std::nullopt;
  }
  return k;
}

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::Series:
      return "series";
    case Method::Asymptotic:
      return "asymptotic";
    case Method::ClosedForm:
      return "closed";
  }
  return "unknown";
}

namespace {

EvalResult series_nonnegative_seed(const Complex nu, const CutPlanePoint& z, double tol) {
  const CutPlanePoint half(z.value() * 0.5);
  const double hx = half.re();
  const double hy = half.im();

  // -(z/2)^2, exact in double-double
  const ComplexDD minus_w{-(detail::two_prod(hx, hx) - detail::two_prod(hy, hy)),
                          -(detail::two_prod(hx, hy) + detail::two_prod(hx, hy))};

  const Complex prefactor = principal_pow(half, nu) * reciprocal_gamma(nu + 1.0);

  ComplexDD term{DoubleDouble(1.0), DoubleDouble(0.0)};
  ComplexDD sum = term;
  double max_term = 1.0;
  int small_in_a_row = 0;
  int terms = 1;
  double first_omitted = 0.0;

  for (int m = 0;; ++m) {
    const ComplexDD denom{DoubleDouble(nu.real()) + DoubleDouble(static_cast<double>(m + 1)),
                          DoubleDouble(nu.imag())};
    const ComplexDD scaled_denom{denom.re * DoubleDouble(static_cast<double>(m + 1)),
                                 denom.im * DoubleDouble(static_cast<double>(m + 1))};
    term = term * minus_w / scaled_denom;
    const double magnitude = term.abs();

    if (small_in_a_row >= 2) {
      first_omitted = magnitude;
      break;
    }
    if (terms >= kMaxSeriesTerms) {
      throw NonConvergence("bessel_j_series: no convergence within " +
                           std::to_string(kMaxSeriesTerms) + " terms (|z| = " +
                           std::to_string(z.abs()) + ")");
    }

    sum = sum + term;
    ++terms;
    max_term = std::max(max_term, magnitude);
    const double threshold = tol * std::max(sum.abs(), kEpsilon * max_term);
    small_in_a_row = magnitude < threshold ? small_in_a_row + 1 : 0;
  }

  EvalResult result;
  result.value = prefactor * sum.to_complex();
  result.method = Method::Series;
  result.terms_used = terms;
  result.error_estimate =
      std::abs(prefactor) * (max_term * static_cast<double>(terms) * kEpsilon + first_omitted);
  return result;
}

}  // namespace

EvalResult bessel_j_series(const Order& nu, const CutPlanePoint& z, double tol) {
  if (!(tol >= 1e-16) || !std::isfinite(tol)) {
    throw DomainError("bessel_j_series: tolerance must be >= 1e-16");
  }
  const Complex v = nu.value();
  // J_{-n} = (-1)^n J_n; the seed 1/Gamma(1 - n) would vanish.
  if (near_nonpositive_integer(v + 1.0)) {
    const double n = -std::nearbyint(v.real());
    EvalResult r = series_nonnegative_seed(Complex(n, 0.0), z, tol);
    if (std::fmod(n, 2.0) != 0.0) {
      r.value = -r.value;
    }
    return r;
  }
  return series_nonnegative_seed(v, z, tol);
}

Complex bessel_j_closed_half_odd(int two_nu, const CutPlanePoint& z) {
  const Complex x = z.value();
  const Complex root = std::sqrt(2.0 / (kPi * x));
  switch (two_nu) {
    case -1:
      return root * std::cos(x);
    case 1:
      return root * std::sin(x);
    case 3:
      return root * (std::sin(x) / x - std::cos(x));
    default:
      throw UnsupportedOrder("closed form available only for nu in {-1/2, 1/2, 3/2}; got 2*nu = " +
                             std::to_string(two_nu));
  }
}

EvalResult bessel_j(const Order& nu, const CutPlanePoint& z, double tol, double switchover) {
  if (z.abs() <= switchover) {
    return bessel_j_series(nu, z, tol);
  }
  return bessel_j_asymptotic(nu, z);
}

}  // namespace lommelcheck
