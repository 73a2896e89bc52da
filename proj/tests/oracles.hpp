#pragma once

// Reference values computed outside the library: closed forms and hand
// evaluated recursions.

#include <array>
#include <cmath>
#include <numbers>

namespace oracle {

// tanh x = sum_j t_j x^(2j+1)
inline constexpr std::array<double, 9> kTanhTaylor = {
    1.0,
    -1.0 / 3.0,
    2.0 / 15.0,
    -17.0 / 315.0,
    62.0 / 2835.0,
    -1382.0 / 155925.0,
    21844.0 / 6081075.0,
    -929569.0 / 638512875.0,
    6404582.0 / 10854718875.0,
};

// Series at q = 1/2, c0 = 1, by hand from the recursion.
inline constexpr double kHalfC1 = -0.2;
inline constexpr double kHalfC2 = 14.0 / 225.0;

// Normalized Hermite function for W = x (E_n = 2n).
inline double hermite_function(int n, double x) {
  double h0 = 1.0, h1 = 2.0 * x;
  double hn = n == 0 ? h0 : h1;
  for (int k = 1; k < n; ++k) {
    hn = 2.0 * x * h1 - 2.0 * k * h0;
    h0 = h1;
    h1 = hn;
  }
  const double norm = std::sqrt(std::pow(2.0, n) * std::tgamma(n + 1.0) * std::sqrt(std::numbers::pi));
  return hn * std::exp(-0.5 * x * x) / norm;
}

// Morse ground state exp(-A x - e^{-x}) with norm^2 = Gamma(2A) / 2^{2A}.
inline double morse_ground(double a, double x) {
  const double norm2 = std::tgamma(2.0 * a) / std::pow(2.0, 2.0 * a);
  return std::exp(-a * x - std::exp(-x)) / std::sqrt(norm2);
}

// Morse levels E_n = A^2 - (A - n)^2.
inline double morse_level(double a, int n) { return a * a - (a - n) * (a - n); }

// Oscillator-like levels R1 (1 - q^n) / (1 - q).
inline double scaling_level(double q, double r1, int n) {
  return q == 1.0 ? r1 * n : r1 * (1.0 - std::pow(q, n)) / (1.0 - q);
}

// Gaussian exp(-x^2/2) / pi^{1/4} dilated by s: sqrt(s) exp(-s^2 x^2 / 2) / pi^{1/4}.
inline double dilated_gaussian(double s, double x) {
  return std::sqrt(s) * std::exp(-0.5 * s * s * x * x) / std::pow(std::numbers::pi, 0.25);
}

}  // namespace oracle
