#include "lommelcheck/hankel.hpp"

#include <algorithm>
#include <cmath>

#include "lommelcheck/errors.hpp"

namespace lommelcheck {

namespace {

// t_k = (nu, k) / (2z)^k for k = 0..k_max.
std::vector<Complex> expansion_terms(const Order& nu, const CutPlanePoint& z, int k_max) {
  const Complex mu = 4.0 * nu.value() * nu.value();
  const Complex eight_z = 8.0 * z.value();
  std::vector<Complex> t(static_cast<std::size_t>(k_max) + 1);
  t[0] = 1.0;
  for (int k = 1; k <= k_max; ++k) {
    const double odd = 2.0 * k - 1.0;
    t[k] = t[k - 1] * (mu - odd * odd) / (static_cast<double>(k) * eight_z);
  }
  return t;
}

// Alternating sums over the even (C) and odd (S) indices k in [k_from, k_to).
CSSums split_sums(const std::vector<Complex>& t, int k_from, int k_to) {
  ComplexCompensatedSum c_sum;
  ComplexCompensatedSum s_sum;
  for (int k = k_from; k < k_to; ++k) {
    const int m = k / 2;
    const Complex term = (m % 2 == 0) ? t[k] : -t[k];
    if (k % 2 == 0) {
      c_sum += term;
    } else {
      s_sum += term;
    }
  }
  const double omitted = k_to < static_cast<int>(t.size()) ? std::abs(t[k_to]) : 0.0;
  return {c_sum.value(), s_sum.value(), omitted};
}

int least_term_index(const std::vector<Complex>& t) {
  int best = 1;
  double best_mag = std::abs(t[1]);
  for (int k = 2; k < static_cast<int>(t.size()); ++k) {
    const double mag = std::abs(t[k]);
    if (mag < best_mag) {
      best = k;
      best_mag = mag;
    }
    if (best_mag == 0.0) {
      break;
    }
  }
  return best;
}

struct Truncated {
  CSSums sums;
  int order;
};

// C - 1 (from_index = 1) or C (from_index = 0) and S, at least-term truncation.
Truncated truncated_sums(const Order& nu, const CutPlanePoint& z, int from_index) {
  const auto t = expansion_terms(nu, z, kMaxHankelIndex);
  const int m_star = least_term_index(t);
  return {split_sums(t, from_index, m_star), m_star};
}

Complex root_two_over_pi_z(const CutPlanePoint& z) { return std::sqrt(2.0 / (kPi * z.value())); }

// (2 nu + 1) / 4, the phase nu/2 + 1/4 in units of pi.
Complex phase_in_pi(const Order& nu) { return (2.0 * nu.value() + 1.0) / 4.0; }

}  // namespace

HankelSymbolTable hankel_symbols(const Order& nu, int m_max) {
  if (m_max < 0) {
    throw DomainError("hankel_symbols: m_max must be >= 0");
  }
  const Complex mu = 4.0 * nu.value() * nu.value();
  HankelSymbolTable table{nu, std::vector<Complex>(static_cast<std::size_t>(m_max) + 1)};
  table.values[0] = 1.0;
  for (int m = 1; m <= m_max; ++m) {
    const double odd = 2.0 * m - 1.0;
    table.values[m] = table.values[m - 1] * (mu - odd * odd) / (4.0 * m);
  }
  return table;
}

PhaseShift phase_shift(const Order& nu) {
  const Complex shift = -kPi * phase_in_pi(nu);
  return {shift.real(), shift.imag()};
}

PhaseFactors phase_factors(const Order& nu, const CutPlanePoint& z) {
  const Complex u = phase_in_pi(nu);
  // Fold the imaginary part of the phase into z; the real part stays in units of pi.
  const Complex w(z.re(), z.im() - kPi * u.imag());
  if (std::abs(w.imag()) > kMaxPhaseImag) {
    throw OverflowError("phase_factors: |im(z - nu pi/2 - pi/4)| exceeds 700");
  }
  const Complex cw = std::cos(w);
  const Complex sw = std::sin(w);
  const double cp = cos_pi(u.real());
  const double sp = sin_pi(u.real());
  return {cw * cp + sw * sp, sw * cp - cw * sp};
}

ScaledPhaseFactors scaled_phase_factors(const Order& nu, const CutPlanePoint& z) {
  const Complex u = phase_in_pi(nu);
  const Complex i(0.0, 1.0);
  const Complex e_plus = cos_pi(u) + i * sin_pi(u);   // exp(i phi)
  const Complex e_minus = cos_pi(u) - i * sin_pi(u);  // exp(-i phi)
  const int sigma = z.im() >= 0.0 ? 1 : -1;
  const Complex q = std::exp(2.0 * i * static_cast<double>(sigma) * z.value());
  if (sigma > 0) {
    return {(q * e_minus + e_plus) / 2.0, (q * e_minus - e_plus) / (2.0 * i), q, sigma};
  }
  return {(e_minus + q * e_plus) / 2.0, (e_minus - q * e_plus) / (2.0 * i), q, sigma};
}

CSSums cs_sums(const Order& nu, const CutPlanePoint& z, int p) {
  if (p < 1) {
    throw DomainError("cs_sums: p must be >= 1");
  }
  return cs_tail(nu, z, 0, p);
}

CSSums cs_tail(const Order& nu, const CutPlanePoint& z, int p_from, int p_to) {
  if (p_from < 0 || p_to < p_from) {
    throw DomainError("cs_tail: need 0 <= p_from <= p_to");
  }
  const auto t = expansion_terms(nu, z, 2 * p_to);
  return split_sums(t, 2 * p_from, 2 * p_to);
}

int optimal_truncation(const Order& nu, const CutPlanePoint& z) {
  return least_term_index(expansion_terms(nu, z, kMaxHankelIndex));
}

EvalResult bessel_j_asymptotic(const Order& nu, const CutPlanePoint& z) {
  const PhaseFactors pf = phase_factors(nu, z);
  const Truncated tr = truncated_sums(nu, z, 0);
  const Complex root = root_two_over_pi_z(z);
  EvalResult r;
  r.value = root * (pf.c * tr.sums.C - pf.s * tr.sums.S);
  r.method = Method::Asymptotic;
  r.terms_used = tr.order;
  r.error_estimate = std::abs(root) * (std::abs(pf.c) + std::abs(pf.s)) * tr.sums.first_omitted;
  return r;
}

EvalResult bessel_j_asymptotic_scaled(const Order& nu, const CutPlanePoint& z) {
  const ScaledPhaseFactors pf = scaled_phase_factors(nu, z);
  const Truncated tr = truncated_sums(nu, z, 0);
  const Complex root = root_two_over_pi_z(z);
  EvalResult r;
  r.value = root * (pf.c * tr.sums.C - pf.s * tr.sums.S);
  r.method = Method::Asymptotic;
  r.terms_used = tr.order;
  r.error_estimate = std::abs(root) * (std::abs(pf.c) + std::abs(pf.s)) * tr.sums.first_omitted;
  return r;
}

AsymptoticParts asymptotic_parts(const Order& nu, const CutPlanePoint& z) {
  const PhaseFactors pf = phase_factors(nu, z);
  const Truncated own = truncated_sums(nu, z, 1);
  const Truncated next = truncated_sums(nu.shifted(1.0), z, 1);

  AsymptoticParts p{};
  p.c = pf.c;
  p.s = pf.s;
  p.C0 = own.sums.C;
  p.S0 = own.sums.S;
  p.C1 = next.sums.C;
  p.S1 = next.sums.S;
  p.A = p.C0 * p.C0 + 2.0 * p.C0 + p.S1 * p.S1;
  p.H = p.C1 * p.S1 - p.C0 * p.S0 + p.S1 - p.S0;
  p.B = p.C1 * p.C1 + 2.0 * p.C1 + p.S0 * p.S0;
  p.truncation_order = std::min(own.order, next.order);
  p.trunc_error_estimate = own.sums.first_omitted + next.sums.first_omitted;
  return p;
}

Complex assembled_deviation(const AsymptoticParts& p) {
  return p.A * p.c * p.c + 2.0 * p.H * p.c * p.s + p.B * p.s * p.s;
}

}  // namespace lommelcheck
