#pragma once

// Self-similar superpotential: odd power series around the origin plus
// outward continuation of the delayed-argument equation
//
//   W'(x) = -W(x)^2 + q W(sqrt(q) x)^2 - q W'(sqrt(q) x) + R,   R = (1 + q) c0,
//
// which is the shape-invariance condition with W(x; a2) = sqrt(q) W(sqrt(q) x; a1).

#include <cstddef>
#include <vector>

namespace siqm {

// Coefficients c_j of W(x) = sum_j c_j x^(2j+1).
struct SeriesCoefficients {
  double q = 0.0;
  double c0 = 0.0;
  std::vector<double> coeffs;
  double radius_estimate = 0.0;

  double remainder() const { return (1.0 + q) * c0; }
};

struct RadiusEstimate {
  double radius = 0.0;  // +inf for a terminating series, NaN below 6 nonzero terms
  bool monotone_tail = true;
};

SeriesCoefficients series_coefficients(double q, double c0, int order);

// Ratio test sqrt|c_k / c_{k+1}| over the tail of the coefficient list.
RadiusEstimate radius_estimate(const SeriesCoefficients& coeffs);

struct ContinuationOptions {
  double horizon = 100.0;     // table extends over [0, horizon]
  double step = 0.01;         // outward step, shortened where the delay requires it
  double series_fraction = 0.8;
};

// W on [-horizon, horizon]: direct summation inside the series region, cubic
// Hermite lookup in the continued table outside it. Immutable once built.
class SelfSimilarSolution {
 public:
  SelfSimilarSolution(SeriesCoefficients coeffs, ContinuationOptions options = {});

  double W(double x) const;
  double dW(double x) const;
  double d2W(double x) const;

  // |W^2 + W' - q W^2(sqrt(q) x) + q W'(sqrt(q) x) - R| at x.
  double defining_residual(double x) const;

  double asymptote() const;  // sqrt(R / (1 - q)); +inf when q = 1
  double series_switch() const { return x_switch_; }
  double horizon() const { return options_.horizon; }
  const SeriesCoefficients& coefficients() const { return coeffs_; }

 private:
  struct Node {
    double x, w, dw, d2w;
  };

  void continue_outward();
  double series_value(double x, int derivative) const;
  double lookup(double x, int derivative) const;  // x >= 0
  double rhs(double x, double w) const;

  SeriesCoefficients coeffs_;
  ContinuationOptions options_;
  double x_switch_ = 0.0;
  std::vector<Node> table_;
};

// One-shot evaluation; builds a continuation table reaching |x|.
double eval_W_selfsimilar(const SeriesCoefficients& coeffs, double x);

}  // namespace siqm
