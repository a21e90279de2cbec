#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "lommelcheck/bessel.hpp"
#include "lommelcheck/hankel.hpp"

namespace lommelcheck {

// How a deviation value was obtained.
enum class DeviationMethod {
  Direct,         // J_nu, J_{nu+1} from bessel_j, then squared and added
  ClosedForm,     // elementary forms for nu = -1/2 or 1/2
  LogScaled,      // exp(i sigma z)-scaled Hankel expansion, dominant exponential factored out
  Decomposition,  // A c^2 + 2 H c s + B s^2 from the asymptotic parts
};

enum class DeviationRoute { Auto, Bessel, ClosedForm, LogScaled, Decomposition };

[[nodiscard]] std::string_view to_string(DeviationMethod m) noexcept;

/// D(z) = (pi z / 2)(J_nu(z)^2 + J_{nu+1}(z)^2) - 1 at one point.
///
/// The deviation is stored as D * exp(log_scale); log_scale is nonzero only
/// when |D| itself would overflow (far off the real axis).
struct DeviationSample {
  double t;  // ray parameter, |z|
  CutPlanePoint z;
  Complex D;
  double log_scale = 0.0;
  Complex normalized;
  DeviationMethod method;

  [[nodiscard]] Complex value() const;  // may be infinite when log_scale > 0
  [[nodiscard]] double log_abs() const;
};

// Beyond this |im z| the direct route would overflow when squaring J.
inline constexpr double kDirectImagLimit = 300.0;
// |D| at or below this counts as zero in the exact-identity checks.
inline constexpr double kExactZeroTolerance = 1e-12;

/// Auto picks Bessel for |im z| <= 300 and LogScaled beyond.
/// ClosedForm accepts only nu in {-1/2, 1/2} (UnsupportedOrder otherwise).
/// LogScaled and Decomposition rely on the Hankel expansion and reject
/// |z| < 10 unless nu is half-odd (where the expansion is finite and exact).
DeviationSample deviation(const Order& nu, const CutPlanePoint& z,
                          DeviationRoute route = DeviationRoute::Auto);

enum class Normalization {
  None,      // D
  Theorem1,  // t D
  Theorem2,  // (2t / e^(2t)) D
  RayF,      // 2 z exp(2 i sigma z) D
};

Complex normalize(const DeviationSample& sample, Normalization normalization);

struct RaySweep {
  Order nu;
  double theta;
  std::vector<double> t_values;
  std::vector<DeviationSample> samples;
};

/// Deviation along z = t e^(i theta) for each t (strictly increasing, > 0).
/// Samples are returned in t order; theta must lie in (-pi, pi).
RaySweep ray_sweep(const Order& nu, double theta, std::vector<double> t_values,
                   Normalization normalization, DeviationRoute route = DeviationRoute::Auto);

std::vector<double> log_spaced(double lo, double hi, int n);
std::vector<double> linear_spaced(double lo, double hi, int n);

struct PowerLawSample {
  double t;
  double magnitude;
};

struct FitResult {
  double exponent = 0.0;
  double amplitude = 0.0;
  double residual_rms = 0.0;
  int window_count = 0;
  int excluded_zeros = 0;
};

inline constexpr int kDefaultFitWindows = 10;

/// Envelope power-law fit: samples are split into log-uniform windows in t,
/// the maximum of each window is kept, and log(max) is regressed on log(t).
/// Zero magnitudes are dropped and counted. Throws DegenerateData with fewer
/// than 20 samples or fewer than 2 nonempty windows.
FitResult fit_power_law(std::span<const PowerLawSample> samples, int windows = kDefaultFitWindows);

// Residuals small enough that the data plausibly follow t^p.
[[nodiscard]] bool is_power_law(const FitResult& fit, double max_residual_rms = 0.25);

struct Theorem1Result {
  double sup_scaled = 0.0;  // sup t |D(t)|
  std::optional<FitResult> envelope;
  bool exact_zero = false;  // every |D| <= kExactZeroTolerance; no fit attempted
  std::optional<double> closed_form_discrepancy;
  bool passed = false;
};

inline constexpr double kExponentTolerance = 0.15;

/// Samples D on the positive real axis, log-spaced on [t_min, t_max], and
/// checks that t |D(t)| stays bounded with an envelope exponent of -1.
/// For nu = +-1/2 the closed-form route is evaluated as a cross-check.
Theorem1Result theorem1_check(const Order& nu, double t_min, double t_max, int n);

struct Theorem2Evaluation {
  double bessel_route;
  double closed_form;
  double relative_difference;
};

/// (2t / e^(2t)) D(it) for nu = 1/2, two ways: from exp(-t)-scaled Bessel
/// values (no overflow for any t), and from
///   (1 - e^(-2t))^2 / (2t) - 1 + e^(-4t).
Theorem2Evaluation theorem2_evaluate(double t);
double theorem2_normalized(double t);
double theorem2_closed_form(double t);

/// F(t, theta) = 2 z exp(2 i z) D(z), z = t e^(i theta), nu = 1/2, for
/// 0 < theta < pi; for -pi < theta < 0 the mirrored 2 z exp(-2 i z) D(z).
/// Evaluated from scaled Bessel values, so it is finite for every t.
Complex ray_F(double theta, double t);

// (J_nu^2 + J_{nu+1}^2) / (2 / (pi z)) = 1 + D.
Complex lommel_ratio(const Order& nu, const CutPlanePoint& z,
                     DeviationRoute route = DeviationRoute::Auto);

/// (2/(pi z))(c^2 + s^2) / (2/(pi z)) - 1: the leading terms of J_nu and
/// J_{nu+1} square and add to 2/(pi z) for every nu and z.
Complex leading_term_identity(const Order& nu, const CutPlanePoint& z);

}  // namespace lommelcheck
