#pragma once

#include <complex>
#include <span>

namespace lommelcheck {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kEpsilon = 2.220446049250313e-16;

[[nodiscard]] bool is_finite(Complex z) noexcept;

// Throws DomainError unless both parts are finite.
Complex checked(Complex z);

/// A point of the complex plane cut along (-inf, 0].
///
/// Construction rejects points on the cut and non-finite values with
/// DomainError, so every CutPlanePoint has a well-defined principal argument.
class CutPlanePoint {
 public:
  explicit CutPlanePoint(Complex z);
  CutPlanePoint(double re, double im);

  [[nodiscard]] Complex value() const noexcept { return z_; }
  [[nodiscard]] double re() const noexcept { return z_.real(); }
  [[nodiscard]] double im() const noexcept { return z_.imag(); }
  [[nodiscard]] double abs() const noexcept { return std::abs(z_); }

  [[nodiscard]] static bool on_cut(Complex z) noexcept;

 private:
  Complex z_;
};

// log|z| + i arg z, arg z in (-pi, pi).
Complex principal_log(const CutPlanePoint& z);

/// exp(w * principal_log(z)).
///
/// Exponents 0, 1 and 1/2, and small real integers, take exact paths
/// (repeated multiplication / principal square root); integer powers are
/// branch-independent so they agree with the general formula.
Complex principal_pow(const CutPlanePoint& z, Complex w);

// sin(pi x) and cos(pi x) with exact argument reduction; exact zeros at
// integers (sin) and half-integers (cos).
double sin_pi(double x);
double cos_pi(double x);
Complex sin_pi(Complex w);
Complex cos_pi(Complex w);

/// Running sum with an error-free two-sum per addition.
///
/// The rounding error of every addition is captured exactly and accumulated
/// separately, so the result is within a small multiple of eps * sum|x_i| of
/// the exact sum regardless of the number of terms.
class CompensatedSum {
 public:
  void add(double x) noexcept;
  CompensatedSum& operator+=(double x) noexcept {
    add(x);
    return *this;
  }
  [[nodiscard]] double value() const noexcept { return sum_ + error_; }

 private:
  double sum_ = 0.0;
  double error_ = 0.0;
};

class ComplexCompensatedSum {
 public:
  void add(Complex x) noexcept {
    re_.add(x.real());
    im_.add(x.imag());
  }
  ComplexCompensatedSum& operator+=(Complex x) noexcept {
    add(x);
    return *this;
  }
  [[nodiscard]] Complex value() const noexcept { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum re_;
  CompensatedSum im_;
};

Complex compensated_sum(std::span<const Complex> terms);

}  // namespace lommelcheck
