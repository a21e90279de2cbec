#include <cmath>
#include <vector>

#include "doctest.h"
#include "lommelcheck/errors.hpp"
#include "lommelcheck/lommel.hpp"

using namespace lommelcheck;

namespace {

template <typename F>
std::vector<PowerLawSample> sample(F g, double lo, double hi, int n) {
  std::vector<PowerLawSample> out;
  for (const double t : log_spaced(lo, hi, n)) {
    out.push_back({t, g(t)});
  }
  return out;
}

}  // namespace

TEST_CASE("grids") {
  const auto lg = log_spaced(10.0, 1000.0, 5);
  REQUIRE(lg.size() == 5);
  CHECK(lg.front() == 10.0);
  CHECK(lg.back() == 1000.0);
  CHECK(lg[2] == doctest::Approx(100.0).epsilon(1e-14));
  const auto ln = linear_spaced(1.0, 2.0, 3);
  CHECK(ln == std::vector<double>{1.0, 1.5, 2.0});
  CHECK_THROWS_AS(log_spaced(0.0, 1.0, 5), DomainError);
  CHECK_THROWS_AS(log_spaced(2.0, 1.0, 5), DomainError);
  CHECK_THROWS_AS(linear_spaced(1.0, 2.0, 1), DomainError);
}

TEST_CASE("exact power law") {
  const auto s = sample([](double t) { return 5.0 / t; }, 10.0, 1000.0, 200);
  const FitResult fit = fit_power_law(s);
  CHECK(std::abs(fit.exponent + 1.0) <= 1e-10);
  CHECK(std::abs(fit.amplitude - 5.0) <= 5e-10);
  CHECK(fit.residual_rms <= 1e-10);
  CHECK(fit.window_count == 10);
  CHECK(fit.excluded_zeros == 0);
  CHECK(is_power_law(fit));
}

TEST_CASE("bounded oscillation has exponent near zero") {
  const auto s = sample([](double t) { return std::abs(std::sin(2.0 * t)); }, 10.0, 1000.0, 400);
  const FitResult fit = fit_power_law(s);
  CHECK(std::abs(fit.exponent) <= 0.1);
  CHECK(fit.residual_rms >= 0.0);
}

TEST_CASE("oscillating 1/t envelope") {
  const auto s = sample([](double t) { return std::abs(std::sin(2.0 * t)) / t; }, 10.0, 1000.0, 400);
  CHECK(std::abs(fit_power_law(s).exponent + 1.0) <= 0.1);
}

TEST_CASE("exponential growth is rejected") {
  const auto s = sample([](double t) { return std::exp(2.0 * t) / (2.0 * t); }, 1.0, 300.0, 200);
  const FitResult fit = fit_power_law(s);
  CHECK(fit.exponent > 5.0);
  CHECK_FALSE(is_power_law(fit));
}

TEST_CASE("zeros are excluded and counted") {
  auto s = sample([](double t) { return 2.0 / (t * t); }, 10.0, 1000.0, 100);
  s[3].magnitude = 0.0;
  s[50].magnitude = 0.0;
  const FitResult fit = fit_power_law(s);
  CHECK(fit.excluded_zeros == 2);
  CHECK(std::abs(fit.exponent + 2.0) <= 1e-10);
}

TEST_CASE("degenerate inputs") {
  CHECK_THROWS_AS(fit_power_law(sample([](double t) { return 1.0 / t; }, 10.0, 100.0, 19)), DegenerateData);
  CHECK_THROWS_AS(fit_power_law(sample([](double) { return 0.0; }, 10.0, 100.0, 50)), DegenerateData);
  auto one_window = sample([](double) { return 0.0; }, 10.0, 100.0, 50);
  one_window[0].magnitude = 1.0;
  CHECK_THROWS_AS(fit_power_law(one_window), DegenerateData);
  CHECK_THROWS_AS(fit_power_law(sample([](double t) { return 1.0 / t; }, 10.0, 100.0, 50), 1), DegenerateData);
  std::vector<PowerLawSample> unordered = sample([](double t) { return 1.0 / t; }, 10.0, 100.0, 50);
  std::swap(unordered[4], unordered[5]);
  CHECK_THROWS_AS(fit_power_law(unordered), DomainError);
}
