#include "lommelcheck/lommel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "lommelcheck/errors.hpp"

namespace lommelcheck {

namespace {

constexpr double kMaxFoldedScale = 600.0;
constexpr double kMinAsymptoticRadius = 10.0;

Complex half_pi_z(const CutPlanePoint& z) { return 0.5 * kPi * z.value(); }

DeviationSample make_sample(const CutPlanePoint& z, Complex d, double log_scale,
                            DeviationMethod method) {
  return DeviationSample{z.abs(), z, d, log_scale, d, method};
}

void require_asymptotic_regime(const Order& nu, const CutPlanePoint& z, const char* route) {
  if (z.abs() < kMinAsymptoticRadius && !nu.twice_half_odd()) {
    throw DomainError(std::string(route) + " route needs |z| >= 10 unless nu is half-odd");
  }
}

DeviationSample deviation_bessel(const Order& nu, const CutPlanePoint& z) {
  if (std::abs(z.im()) > kDirectImagLimit + 40.0) {
    throw OverflowError("deviation: |im z| too large for the direct route");
  }
  const Complex j0 = bessel_j(nu, z).value;
  const Complex j1 = bessel_j(nu.shifted(1.0), z).value;
  const Complex d = half_pi_z(z) * (j0 * j0 + j1 * j1) - 1.0;
  return make_sample(z, d, 0.0, DeviationMethod::Direct);
}

DeviationSample deviation_closed_form(const Order& nu, const CutPlanePoint& z) {
  const auto twice = nu.twice_half_odd();
  if (!twice || (*twice != -1 && *twice != 1)) {
    throw UnsupportedOrder("closed-form deviation needs nu = -1/2 or 1/2");
  }
  const Complex j0 = bessel_j_closed_half_odd(*twice, z);
  const Complex j1 = bessel_j_closed_half_odd(*twice + 2, z);
  const Complex d = half_pi_z(z) * (j0 * j0 + j1 * j1) - 1.0;
  return make_sample(z, d, 0.0, DeviationMethod::ClosedForm);
}

// exp(2 i sigma z) D, from exp(i sigma z)-scaled Bessel values.
struct ScaledBracket {
  Complex value;
  int sigma;
};

ScaledBracket scaled_bracket(const Order& nu, const CutPlanePoint& z) {
  const Complex j0 = bessel_j_asymptotic_scaled(nu, z).value;
  const Complex j1 = bessel_j_asymptotic_scaled(nu.shifted(1.0), z).value;
  const ScaledPhaseFactors pf = scaled_phase_factors(nu, z);
  return {half_pi_z(z) * (j0 * j0 + j1 * j1) - pf.q, pf.sigma};
}

DeviationSample deviation_log_scaled(const Order& nu, const CutPlanePoint& z) {
  require_asymptotic_regime(nu, z, "log-scaled");
  const ScaledBracket b = scaled_bracket(nu, z);
  const double sigma = b.sigma;
  // D = exp(-2 i sigma z) * bracket = exp(2 sigma y) exp(-2 i sigma x) * bracket
  const double scale = 2.0 * sigma * z.im();
  const double phase = -2.0 * sigma * z.re();
  if (scale <= kMaxFoldedScale) {
    return make_sample(z, b.value * std::exp(Complex(scale, phase)), 0.0,
                       DeviationMethod::LogScaled);
  }
  return make_sample(z, b.value * std::exp(Complex(0.0, phase)), scale,
                     DeviationMethod::LogScaled);
}

DeviationSample deviation_decomposition(const Order& nu, const CutPlanePoint& z) {
  require_asymptotic_regime(nu, z, "decomposition");
  const AsymptoticParts parts = asymptotic_parts(nu, z);
  return make_sample(z, assembled_deviation(parts), 0.0, DeviationMethod::Decomposition);
}

int sigma_of(const CutPlanePoint& z) { return z.im() >= 0.0 ? 1 : -1; }

}  // namespace

std::string_view to_string(DeviationMethod m) noexcept {
  switch (m) {
    case DeviationMethod::Direct:
      return "direct";
    case DeviationMethod::ClosedForm:
      return "closed";
    case DeviationMethod::LogScaled:
      return "logscaled";
    case DeviationMethod::Decomposition:
      return "decomposition";
  }
  return "unknown";
}

Complex DeviationSample::value() const {
  if (log_scale == 0.0) {
    return D;
  }
  return D * std::exp(log_scale);
}

double DeviationSample::log_abs() const { return std::log(std::abs(D)) + log_scale; }

DeviationSample deviation(const Order& nu, const CutPlanePoint& z, DeviationRoute route) {
  switch (route) {
    case DeviationRoute::Auto:
      if (std::abs(z.im()) > kDirectImagLimit) {
        return deviation_log_scaled(nu, z);
      }
      return deviation_bessel(nu, z);
    case DeviationRoute::Bessel:
      return deviation_bessel(nu, z);
    case DeviationRoute::ClosedForm:
      return deviation_closed_form(nu, z);
    case DeviationRoute::LogScaled:
      return deviation_log_scaled(nu, z);
    case DeviationRoute::Decomposition:
      return deviation_decomposition(nu, z);
  }
  throw DomainError("deviation: unknown route");
}

Complex normalize(const DeviationSample& sample, Normalization normalization) {
  const double t = sample.t;
  switch (normalization) {
    case Normalization::None:
      return sample.value();
    case Normalization::Theorem1:
      return t * sample.value();
    case Normalization::Theorem2:
      return sample.D * (2.0 * t) * std::exp(sample.log_scale - 2.0 * t);
    case Normalization::RayF: {
      const double sigma = sigma_of(sample.z);
      const Complex factor(sample.log_scale - 2.0 * sigma * sample.z.im(),
                           2.0 * sigma * sample.z.re());
      return 2.0 * sample.z.value() * sample.D * std::exp(factor);
    }
  }
  return sample.value();
}

RaySweep ray_sweep(const Order& nu, double theta, std::vector<double> t_values,
                   Normalization normalization, DeviationRoute route) {
  if (!(theta > -kPi && theta < kPi)) {
    throw DomainError("ray_sweep: theta must lie in (-pi, pi)");
  }
  for (std::size_t i = 0; i < t_values.size(); ++i) {
    if (!(t_values[i] > 0.0) || (i > 0 && !(t_values[i] > t_values[i - 1]))) {
      throw DomainError("ray_sweep: t values must be positive and strictly increasing");
    }
  }
  RaySweep sweep{nu, theta, std::move(t_values), {}};
  sweep.samples.reserve(sweep.t_values.size());
  for (const double t : sweep.t_values) {
    const CutPlanePoint z(std::polar(t, theta));
    DeviationSample s = deviation(nu, z, route);
    s.t = t;
    s.normalized = normalize(s, normalization);
    sweep.samples.push_back(s);
  }
  return sweep;
}

std::vector<double> log_spaced(double lo, double hi, int n) {
  if (!(lo > 0.0) || !(hi > lo) || n < 2) {
    throw DomainError("log_spaced: need 0 < lo < hi and n >= 2");
  }
  std::vector<double> t(static_cast<std::size_t>(n));
  const double step = std::log(hi / lo) / (n - 1);
  for (int i = 0; i < n; ++i) {
    t[i] = lo * std::exp(step * i);
  }
  t.front() = lo;
  t.back() = hi;
  return t;
}

std::vector<double> linear_spaced(double lo, double hi, int n) {
  if (!(hi > lo) || n < 2) {
    throw DomainError("linear_spaced: need lo < hi and n >= 2");
  }
  std::vector<double> t(static_cast<std::size_t>(n));
  const double step = (hi - lo) / (n - 1);
  for (int i = 0; i < n; ++i) {
    t[i] = lo + step * i;
  }
  t.back() = hi;
  return t;
}

FitResult fit_power_law(std::span<const PowerLawSample> samples, int windows) {
  if (samples.size() < 20) {
    throw DegenerateData("fit_power_law: need at least 20 samples");
  }
  if (windows < 2) {
    throw DegenerateData("fit_power_law: need at least 2 windows");
  }
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!(samples[i].t > 0.0) || (i > 0 && !(samples[i].t > samples[i - 1].t))) {
      throw DomainError("fit_power_law: t must be positive and strictly increasing");
    }
  }

  FitResult fit;
  const double log_lo = std::log(samples.front().t);
  const double span = std::log(samples.back().t) - log_lo;

  struct Peak {
    double log_t = 0.0;
    double log_mag = -std::numeric_limits<double>::infinity();
  };
  std::vector<Peak> peaks(static_cast<std::size_t>(windows));
  for (const PowerLawSample& s : samples) {
    if (!(s.magnitude > 0.0)) {
      ++fit.excluded_zeros;
      continue;
    }
    const double u = (std::log(s.t) - log_lo) / span;
    const int w = std::clamp(static_cast<int>(u * windows), 0, windows - 1);
    const double lm = std::log(s.magnitude);
    if (lm > peaks[w].log_mag) {
      peaks[w] = {std::log(s.t), lm};
    }
  }

  std::vector<Peak> used;
  for (const Peak& p : peaks) {
    if (std::isfinite(p.log_mag)) {
      used.push_back(p);
    }
  }
  if (used.size() < 2) {
    throw DegenerateData("fit_power_law: fewer than 2 nonempty windows");
  }

  const double n = static_cast<double>(used.size());
  double mx = 0.0;
  double my = 0.0;
  for (const Peak& p : used) {
    mx += p.log_t;
    my += p.log_mag;
  }
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (const Peak& p : used) {
    sxx += (p.log_t - mx) * (p.log_t - mx);
    sxy += (p.log_t - mx) * (p.log_mag - my);
  }
  fit.exponent = sxy / sxx;
  const double intercept = my - fit.exponent * mx;
  fit.amplitude = std::exp(intercept);
  double ss = 0.0;
  for (const Peak& p : used) {
    const double r = p.log_mag - (intercept + fit.exponent * p.log_t);
    ss += r * r;
  }
  fit.residual_rms = std::sqrt(ss / n);
  fit.window_count = static_cast<int>(used.size());
  return fit;
}

bool is_power_law(const FitResult& fit, double max_residual_rms) {
  return fit.residual_rms <= max_residual_rms;
}

Theorem1Result theorem1_check(const Order& nu, double t_min, double t_max, int n) {
  if (!(t_min >= 10.0) || !(t_max > t_min) || n < 50) {
    throw DomainError("theorem1_check: need 10 <= t_min < t_max and n >= 50");
  }
  const RaySweep sweep = ray_sweep(nu, 0.0, log_spaced(t_min, t_max, n), Normalization::Theorem1);

  Theorem1Result result;
  std::vector<PowerLawSample> envelope;
  envelope.reserve(sweep.samples.size());
  bool all_zero = true;
  for (const DeviationSample& s : sweep.samples) {
    const double mag = std::abs(s.D);
    result.sup_scaled = std::max(result.sup_scaled, s.t * mag);
    if (!std::isfinite(mag)) {
      result.sup_scaled = std::numeric_limits<double>::infinity();
    }
    all_zero = all_zero && mag <= kExactZeroTolerance;
    envelope.push_back({s.t, mag});
  }

  const auto twice = nu.twice_half_odd();
  if (twice && (*twice == -1 || *twice == 1)) {
    double worst = 0.0;
    for (const DeviationSample& s : sweep.samples) {
      const DeviationSample cf = deviation(nu, s.z, DeviationRoute::ClosedForm);
      worst = std::max(worst, std::abs(cf.D - s.D));
    }
    result.closed_form_discrepancy = worst;
  }

  if (all_zero) {
    result.exact_zero = true;
    result.passed = true;
    return result;
  }
  result.envelope = fit_power_law(envelope);
  result.passed = std::isfinite(result.sup_scaled) &&
                  std::abs(result.envelope->exponent + 1.0) <= kExponentTolerance;
  return result;
}

double theorem2_closed_form(double t) {
  if (!(t > 0.0)) {
    throw DomainError("theorem2: t must be positive");
  }
  const double one_minus = -std::expm1(-2.0 * t);
  return one_minus * one_minus / (2.0 * t) - 1.0 + std::exp(-4.0 * t);
}

double theorem2_normalized(double t) {
  if (!(t > 0.0)) {
    throw DomainError("theorem2: t must be positive");
  }
  // z = i t: exp(-2iz) = e^(2t) cancels the 1/e^(2t) of the normalization.
  const CutPlanePoint z(0.0, t);
  const ScaledBracket b = scaled_bracket(Order(0.5), z);
  return (2.0 * t * b.value).real();
}

Theorem2Evaluation theorem2_evaluate(double t) {
  const double bessel = theorem2_normalized(t);
  const double closed = theorem2_closed_form(t);
  return {bessel, closed, std::abs(bessel - closed) / std::abs(closed)};
}

Complex ray_F(double theta, double t) {
  if (!(theta > -kPi && theta < kPi) || theta == 0.0) {
    throw DomainError("ray_F: theta must lie in (-pi, 0) or (0, pi)");
  }
  if (!(t >= 1.0)) {
    throw DomainError("ray_F: t must be >= 1");
  }
  // exp(2 i sigma z) sin^2 z and exp(2 i sigma z) sin 2z reduced to powers of q = exp(2 i sigma z).
  const Complex z = std::polar(t, theta);
  const double sigma = theta > 0.0 ? 1.0 : -1.0;
  const Complex q = std::exp(Complex(0.0, 2.0 * sigma) * z);
  const Complex one_minus = 1.0 - q;
  return -one_minus * one_minus / (2.0 * z) + Complex(0.0, sigma) * (q * q - 1.0);
}

Complex lommel_ratio(const Order& nu, const CutPlanePoint& z, DeviationRoute route) {
  const Complex d = deviation(nu, z, route).value();
  if (!is_finite(d)) {
    throw OverflowError("lommel_ratio: deviation not representable");
  }
  return 1.0 + d;
}

Complex leading_term_identity(const Order& nu, const CutPlanePoint& z) {
  const PhaseFactors pf = phase_factors(nu, z);
  const Complex two_over_pi_z = 2.0 / (kPi * z.value());
  const Complex root = std::sqrt(two_over_pi_z);
  const Complex lead_nu = root * pf.c;
  const Complex lead_next = root * pf.s;
  return (lead_nu * lead_nu + lead_next * lead_next) / two_over_pi_z - 1.0;
}

}  // namespace lommelcheck
