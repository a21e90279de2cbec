#include "lommelcheck/cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <random>

#include "lommelcheck/cli/csv.hpp"
#include "lommelcheck/errors.hpp"
#include "lommelcheck/gamma.hpp"
#include "lommelcheck/lommel.hpp"

namespace lommelcheck::cli {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr Complex kGammaOnePlusI{0.49801566811835601, -0.15494982830181067};

std::string label(Complex nu) {
  if (nu.imag() == 0.0) {
    return format_real(nu.real());
  }
  return format_real(nu.real()) + (nu.imag() < 0.0 ? "" : "+") + format_real(nu.imag()) + "i";
}

bool contains(const std::vector<Complex>& nus, Complex nu) {
  return std::find(nus.begin(), nus.end(), nu) != nus.end();
}

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

CheckRow row(std::string name, double value, double metric, double bound) {
  return {std::move(name), value, metric, bound, std::isfinite(metric) && metric <= bound};
}

// area-uniform in lo <= |z| <= hi, |arg z| <= max_arg
Complex annulus_point(std::mt19937_64& rng, double lo, double hi, double max_arg) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_real_distribution<double> a(-max_arg, max_arg);
  return std::polar(std::sqrt(lo * lo + (hi * hi - lo * lo) * u(rng)), a(rng));
}

void exactness_rows(std::vector<CheckRow>& rows) {
  std::mt19937_64 rng(2024);
  double worst = 0.0;
  for (int i = 0; i < 500; ++i) {
    Complex z;
    do {
      z = annulus_point(rng, 0.1, 25.0, kPi);
    } while (CutPlanePoint::on_cut(z));
    worst = std::max(worst, std::abs(deviation(Order(-0.5), CutPlanePoint(z),
                                               DeviationRoute::Decomposition).D));
  }
  rows.push_back(row("nu=-0.5 max|D| over 500 points", worst, worst, 1e-12));
}

void theorem1_rows(std::vector<CheckRow>& rows, const std::vector<Complex>& nus) {
  for (const Complex nu : nus) {
    const std::string tag = "theorem1 nu=" + label(nu);
    const Theorem1Result r = theorem1_check(Order(nu), 10.0, 1000.0, 400);
    const double sup_bound = nu == Complex(0.5, 0.0) ? 1.1 : kInf;  // finite is enough
    rows.push_back(row(tag + " sup t|D|", r.sup_scaled, r.sup_scaled, sup_bound));
    if (r.exact_zero) {
      rows.push_back(row(tag + " exact zero", 0.0, 0.0, kExactZeroTolerance));
      continue;
    }
    const double exponent = r.envelope->exponent;
    rows.push_back(row(tag + " envelope exponent", exponent, std::abs(exponent + 1.0),
                       kExponentTolerance));
    if (r.closed_form_discrepancy) {
      rows.push_back(row(tag + " closed-form discrepancy", *r.closed_form_discrepancy,
                         *r.closed_form_discrepancy, 1e-12));
    }
  }
}

void theorem2_rows(std::vector<CheckRow>& rows, const std::vector<double>& t_values) {
  for (const double t : t_values) {
    const Theorem2Evaluation e = theorem2_evaluate(t);
    rows.push_back(row("theorem2 t=" + format_real(t) + " bessel vs closed form", e.bessel_route,
                       e.relative_difference, 1e-12));
  }
}

void ray_rows(std::vector<CheckRow>& rows) {
  const std::pair<const char*, double> angles[] = {
      {"pi/6", kPi / 6}, {"pi/4", kPi / 4}, {"pi/2", kPi / 2}, {"3pi/4", 3 * kPi / 4}};
  for (const auto& [name, theta] : angles) {
    const Complex f = ray_F(theta, 40.0);
    rows.push_back(row(std::string("ray F theta=") + name + " t=40 |F+i|", f.imag(),
                       std::abs(f + Complex(0.0, 1.0)), 0.05));
  }
  const double theta = kPi / 4;
  const double l1 = deviation(Order(0.5), CutPlanePoint(std::polar(20.0, theta))).log_abs();
  const double l2 = deviation(Order(0.5), CutPlanePoint(std::polar(40.0, theta))).log_abs();
  const double expected = 40.0 * std::sin(theta) - std::log(2.0);
  rows.push_back(row("ray growth theta=pi/4 t=20,40", l2 - l1, std::abs((l2 - l1) - expected) / expected,
                     0.02));
}

void two_route_rows(std::vector<CheckRow>& rows) {
  std::mt19937_64 rng(55);
  for (const Complex nu : {Complex(0.0, 0.0), Complex(1.0, 0.0), Complex(2.0, 0.0), Complex(1.0, 1.0)}) {
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const CutPlanePoint z(annulus_point(rng, 15.0, 30.0, 3 * kPi / 4));
      worst = std::max(worst, rel(bessel_j_asymptotic(Order(nu), z).value,
                                  bessel_j_series(Order(nu), z).value));
    }
    rows.push_back(row("series vs asymptotic nu=" + label(nu), worst, worst, 1e-8));
  }
  for (const int two_nu : {-1, 1, 3}) {
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
      const CutPlanePoint z(annulus_point(rng, 0.25, 15.0, 0.999 * kPi));
      worst = std::max(worst, rel(bessel_j_series(Order(two_nu / 2.0), z).value,
                                  bessel_j_closed_half_odd(two_nu, z)));
    }
    rows.push_back(row("series vs closed form nu=" + format_real(two_nu / 2.0), worst, worst, 1e-11));
  }
}

void remainder_rows(std::vector<CheckRow>& rows) {
  for (int p = 1; p <= 3; ++p) {
    std::vector<double> scaled;
    for (const double r : {10.0, 30.0, 100.0, 300.0, 1000.0}) {
      const CutPlanePoint z(r, 0.0);
      const int m_star = optimal_truncation(Order(0.0), z);
      const CSSums tail = cs_tail(Order(0.0), z, p, std::max(p, (m_star + 1) / 2));
      scaled.push_back(std::pow(r, 2.0 * p) * std::abs(tail.C));
    }
    const auto [lo, hi] = std::minmax_element(scaled.begin() + 2, scaled.end());
    rows.push_back(row("remainder p=" + std::to_string(p) + " spread", scaled.back(), *hi / *lo, 10.0));
  }
}

void gamma_rows(std::vector<CheckRow>& rows) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-20.0, 20.0);
  double worst_rec = 0.0;
  double worst_refl = 0.0;
  int accepted = 0;
  while (accepted < 1000) {
    const Complex w(u(rng), u(rng));
    const auto far_from_poles = [](Complex v) {
      return v.real() > 0.5 || std::abs(v - std::round(v.real())) >= 0.1;
    };
    if (std::abs(w) > 20.0 || !far_from_poles(w) || !far_from_poles(w + 1.0) ||
        !far_from_poles(1.0 - w)) {
      continue;
    }
    ++accepted;
    const Complex g = gamma(w);
    worst_rec = std::max(worst_rec, rel(gamma(w + 1.0), w * g));
    worst_refl = std::max(worst_refl, rel(g * gamma(1.0 - w) * sin_pi(w), Complex(kPi, 0.0)));
  }
  rows.push_back(row("gamma recurrence 1000 points", worst_rec, worst_rec, 1e-11));
  rows.push_back(row("gamma reflection 1000 points", worst_refl, worst_refl, 1e-11));
  const double e = rel(gamma(Complex(1.0, 1.0)), kGammaOnePlusI);
  rows.push_back(row("gamma(1+i) vs reference", gamma(Complex(1.0, 1.0)).real(), e, 1e-12));
}

}  // namespace

Complex parse_complex(std::string_view text) {
  if (text.empty()) {
    throw DomainError("empty order");
  }
  if (text.back() != 'i') {
    return {parse_real(text), 0.0};
  }
  const std::string_view body = text.substr(0, text.size() - 1);
  // split at the last sign that is not part of an exponent
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const auto imag_of = [&](std::string_view s) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return parse_real(s);
  };
  if (split == std::string_view::npos) {
    return {0.0, imag_of(body)};
  }
  return {parse_real(body.substr(0, split)), imag_of(body.substr(split))};
}

TheoremSelection parse_theorem(std::string_view text) {
  if (text == "all") return TheoremSelection::All;
  if (text == "1") return TheoremSelection::Theorem1;
  if (text == "2") return TheoremSelection::Theorem2;
  if (text == "ray") return TheoremSelection::Ray;
  throw DomainError("unknown theorem '" + std::string(text) + "' (expected 1, 2, ray or all)");
}

std::vector<CheckRow> run_verification(const VerifyOptions& options) {
  const bool explicit_nus = !options.nus.empty();
  const std::vector<Complex> nus =
      explicit_nus ? options.nus
                   : std::vector<Complex>{{0.0, 0.0}, {0.5, 0.0}, {1.0, 0.0}, {1.0, 1.0}};
  const auto wants = [&](TheoremSelection s) {
    return options.theorem == TheoremSelection::All || options.theorem == s;
  };
  const bool half = !explicit_nus || contains(nus, {0.5, 0.0});

  std::vector<CheckRow> rows;
  if (options.theorem == TheoremSelection::All && (!explicit_nus || contains(nus, {-0.5, 0.0}))) {
    exactness_rows(rows);
  }
  if (wants(TheoremSelection::Theorem1)) {
    theorem1_rows(rows, nus);
  }
  if (wants(TheoremSelection::Theorem2) && half) {
    theorem2_rows(rows, options.t_values);
  }
  if (wants(TheoremSelection::Ray) && half) {
    ray_rows(rows);
  }
  if (options.theorem == TheoremSelection::All && !explicit_nus) {
    two_route_rows(rows);
    remainder_rows(rows);
    gamma_rows(rows);
  }
  if (rows.empty()) {
    throw DomainError("verify: no checks apply to the requested orders and theorem");
  }
  return rows;
}

void print_table(std::ostream& out, const std::vector<CheckRow>& rows) {
  std::size_t width = 5;
  for (const CheckRow& r : rows) {
    width = std::max(width, r.name.size());
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-*s  %24s  %12s  %10s  %s\n", static_cast<int>(width), "check",
                "value", "metric", "bound", "result");
  out << buf;
  for (const CheckRow& r : rows) {
    std::snprintf(buf, sizeof buf, "%-*s  %24.17g  %12.3e  %10.3g  %s\n", static_cast<int>(width),
                  r.name.c_str(), r.value, r.metric, r.bound, r.passed ? "PASS" : "FAIL");
    out << buf;
  }
}

}  // namespace lommelcheck::cli
