#pragma once

#include <vector>

#include "lommelcheck/bessel.hpp"

namespace lommelcheck {

// Entry m holds the Hankel symbol (nu, m); entry 0 is 1.
struct HankelSymbolTable {
  Order nu;
  std::vector<Complex> values;
};

/// (nu, m) = (4nu^2 - 1^2)(4nu^2 - 3^2)...(4nu^2 - (2m-1)^2) / (2^(2m) m!)
/// for m = 0..m_max, built with the ratio (4nu^2 - (2m-1)^2) / (4m).
HankelSymbolTable hankel_symbols(const Order& nu, int m_max);

// a + i b = -nu pi / 2 - pi / 4.
struct PhaseShift {
  double a;
  double b;
};

PhaseShift phase_shift(const Order& nu);

struct PhaseFactors {
  Complex c;  // cos(z - nu pi/2 - pi/4)
  Complex s;  // sin(z - nu pi/2 - pi/4)
};

inline constexpr double kMaxPhaseImag = 700.0;

/// Throws OverflowError when |im(z - nu pi/2 - pi/4)| > 700.
PhaseFactors phase_factors(const Order& nu, const CutPlanePoint& z);

/// Phase factors multiplied by exp(i sigma z), sigma = +1 in the closed upper
/// half-plane and -1 below, so their magnitudes stay O(1) on every ray.
struct ScaledPhaseFactors {
  Complex c;
  Complex s;
  Complex q;  // exp(2 i sigma z), |q| <= 1
  int sigma;
};

ScaledPhaseFactors scaled_phase_factors(const Order& nu, const CutPlanePoint& z);

struct CSSums {
  Complex C;
  Complex S;
  double first_omitted;  // |(nu, 2p) / (2z)^(2p)|
};

/// Partial sums with exactly p terms each:
///   C = sum_{m<p} (-1)^m (nu, 2m) / (2z)^(2m)
///   S = sum_{m<p} (-1)^m (nu, 2m+1) / (2z)^(2m+1)
CSSums cs_sums(const Order& nu, const CutPlanePoint& z, int p);

/// The block m in [p_from, p_to) of the same sums, added without forming the
/// leading terms (used to measure remainders that sit far below 1).
CSSums cs_tail(const Order& nu, const CutPlanePoint& z, int p_from, int p_to);

inline constexpr int kMaxHankelIndex = 200;

/// Least-term truncation point m* in [1, 200]: the first index minimizing
/// |(nu, m) / (2z)^m|. The expansion keeps the terms m < m*. When the symbols
/// vanish from some index on (half-odd nu) this is the last nonzero index + 1.
int optimal_truncation(const Order& nu, const CutPlanePoint& z);

/// J_nu(z) = sqrt(2 / (pi z)) (c C - s S), C and S truncated at m*.
EvalResult bessel_j_asymptotic(const Order& nu, const CutPlanePoint& z);

/// exp(i sigma z) J_nu(z) from the same expansion, without overflow on rays
/// off the real axis. Result method is Asymptotic.
EvalResult bessel_j_asymptotic_scaled(const Order& nu, const CutPlanePoint& z);

/// Everything that enters the square-and-add decomposition
///   (pi z / 2)(J_nu^2 + J_{nu+1}^2) - 1 = A c^2 + 2 H c s + B s^2.
struct AsymptoticParts {
  Complex c;
  Complex s;
  Complex C0;  // C(z; nu) - 1
  Complex S0;  // S(z; nu)
  Complex C1;  // C(z; nu + 1) - 1
  Complex S1;  // S(z; nu + 1)
  Complex A;
  Complex H;
  Complex B;
  int truncation_order;
  double trunc_error_estimate;
};

AsymptoticParts asymptotic_parts(const Order& nu, const CutPlanePoint& z);

// A c^2 + 2 H c s + B s^2.
Complex assembled_deviation(const AsymptoticParts& parts);

}  // namespace lommelcheck
