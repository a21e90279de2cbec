#include "lommelcheck/numerics.hpp"

#include <cmath>
#include <string>

#include "lommelcheck/errors.hpp"

namespace lommelcheck {

bool is_finite(Complex z) noexcept { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

Complex checked(Complex z) {
  if (!is_finite(z)) {
    throw DomainError("non-finite complex value");
  }
  return z;
}

bool CutPlanePoint::on_cut(Complex z) noexcept { return z.imag() == 0.0 && z.real() <= 0.0; }

CutPlanePoint::CutPlanePoint(Complex z) : z_(checked(z)) {
  if (on_cut(z_)) {
    throw DomainError("point on cut: z = " + std::to_string(z_.real()) + " lies in (-inf, 0]");
  }
}

CutPlanePoint::CutPlanePoint(double re, double im) : CutPlanePoint(Complex(re, im)) {}

Complex principal_log(const CutPlanePoint& z) { return std::log(z.value()); }

namespace {

Complex integer_power(Complex base, long long n) {
  const bool invert = n < 0;
  unsigned long long k = invert ? static_cast<unsigned long long>(-n) : static_cast<unsigned long long>(n);
  Complex result(1.0, 0.0);
  while (k != 0) {
    if ((k & 1ULL) != 0) {
      result *= base;
    }
    k >>= 1U;
    if (k != 0) {
      base *= base;
    }
  }
  return invert ? Complex(1.0, 0.0) / result : result;
}

}  // namespace

Complex principal_pow(const CutPlanePoint& z, Complex w) {
  checked(w);
  if (w.imag() == 0.0) {
    const double x = w.real();
    if (x == 0.0) {
      return {1.0, 0.0};
    }
    if (x == 0.5) {
      return std::sqrt(z.value());
    }
    if (x == std::trunc(x) && std::abs(x) <= 64.0) {
      return integer_power(z.value(), static_cast<long long>(x));
    }
  }
  return std::exp(w * principal_log(z));
}

double sin_pi(double x) {
  if (!std::isfinite(x)) {
    return std::nan("");
  }
  double r = std::remainder(x, 2.0);  // exact, r in [-1, 1]
  if (r > 0.5) {
    r = 1.0 - r;
  } else if (r < -0.5) {
    r = -1.0 - r;
  }
  if (r == 0.0) {
    return 0.0;
  }
  return std::sin(kPi * r);
}

double cos_pi(double x) {
  if (!std::isfinite(x)) {
    return std::nan("");
  }
  const double r = std::abs(std::remainder(x, 2.0));
  return sin_pi(0.5 - r);
}

Complex sin_pi(Complex w) {
  const double y = kPi * w.imag();
  return {sin_pi(w.real()) * std::cosh(y), cos_pi(w.real()) * std::sinh(y)};
}

Complex cos_pi(Complex w) {
  const double y = kPi * w.imag();
  return {cos_pi(w.real()) * std::cosh(y), -sin_pi(w.real()) * std::sinh(y)};
}

void CompensatedSum::add(double x) noexcept {
  const double s = sum_ + x;
  const double bb = s - sum_;
  error_ += (sum_ - (s - bb)) + (x - bb);
  sum_ = s;
}

Complex compensated_sum(std::span<const Complex> terms) {
  ComplexCompensatedSum acc;
  for (const Complex& t : terms) {
    acc.add(t);
  }
  return acc.value();
}

}  // namespace lommelcheck
