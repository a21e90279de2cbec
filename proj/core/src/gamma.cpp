#include "lommelcheck/gamma.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "lommelcheck/errors.hpp"

namespace lommelcheck {

namespace {

constexpr double kSqrtTwoPi = 2.5066282746310005024157652848110453;

// Sum c0 + sum_j c_j / (w + j) and the log of t^(w+1/2) e^(-t).
struct LanczosParts {
  Complex series;
  Complex log_power;
};

LanczosParts lanczos_parts(Complex w, const GammaConfig& config) {
  const auto& c = config.coefficients();
  Complex series(c.front(), 0.0);
  for (std::size_t j = 1; j < c.size(); ++j) {
    series += c[j] / (w + static_cast<double>(j));
  }
  const Complex t = w + config.shift() + 0.5;
  return {series, (w + 0.5) * std::log(t) - t};
}

// Gamma(w) for re(w) >= 1/2.
Complex gamma_right(Complex w, const GammaConfig& config) {
  const LanczosParts p = lanczos_parts(w, config);
  return kSqrtTwoPi * p.series / w * std::exp(p.log_power);
}

Complex reciprocal_gamma_right(Complex w, const GammaConfig& config) {
  const LanczosParts p = lanczos_parts(w, config);
  return w * std::exp(-p.log_power) / (kSqrtTwoPi * p.series);
}

}  // namespace

GammaConfig::GammaConfig(double shift, std::vector<double> coefficients)
    : shift_(shift), coefficients_(std::move(coefficients)) {
  if (!(shift_ > 0.0) || !std::isfinite(shift_)) {
    throw DomainError("gamma config: shift parameter must be positive");
  }
  if (coefficients_.empty()) {
    throw DomainError("gamma config: coefficient list is empty");
  }
}

const GammaConfig& GammaConfig::standard() {
  static const GammaConfig config(
      607.0 / 128.0,
      {0.99999999999999709182, 57.156235665862923517, -59.597960355475491248,
       14.136097974741747174, -0.49191381609762019978, 0.33994649984811888699e-4,
       0.46523628927048575665e-4, -0.98374475304879564677e-4, 0.15808870322491248884e-3,
       -0.21026444172410488319e-3, 0.21743961811521264320e-3, -0.16431810653676389022e-3,
       0.84418223983852743293e-4, -0.26190838401581408670e-4, 0.36899182659531622704e-5});
  return config;
}

bool near_nonpositive_integer(Complex w) noexcept {
  if (w.imag() != 0.0 && std::abs(w.imag()) > std::numeric_limits<double>::denorm_min()) {
    return false;
  }
  const double x = w.real();
  if (!std::isfinite(x) || x > 0.5) {
    return false;
  }
  const double n = std::nearbyint(x);
  if (n > 0.0) {
    return false;
  }
  const double ulp = n == 0.0 ? std::numeric_limits<double>::denorm_min()
                              : std::nextafter(std::abs(n), std::numeric_limits<double>::infinity()) -
                                    std::abs(n);
  return std::abs(x - n) <= ulp;
}

Complex gamma(Complex w) { return gamma(w, GammaConfig::standard()); }

Complex gamma(Complex w, const GammaConfig& config) {
  checked(w);
  if (near_nonpositive_integer(w)) {
    throw PoleError("gamma: pole at w = " + std::to_string(w.real()));
  }
  Complex result;
  if (w.real() < 0.5) {
    result = kPi / (sin_pi(w) * gamma_right(1.0 - w, config));
  } else {
    result = gamma_right(w, config);
  }
  if (!is_finite(result)) {
    throw OverflowError("gamma: result not representable");
  }
  return result;
}

Complex reciprocal_gamma(Complex w) { return reciprocal_gamma(w, GammaConfig::standard()); }

Complex reciprocal_gamma(Complex w, const GammaConfig& config) {
  checked(w);
  if (near_nonpositive_integer(w)) {
    return {0.0, 0.0};
  }
  if (w.real() < 0.5) {
    return sin_pi(w) * gamma_right(1.0 - w, config) / kPi;
  }
  return reciprocal_gamma_right(w, config);
}

}  // namespace lommelcheck
