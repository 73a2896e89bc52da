#include "siqm/selfsimilar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "siqm/error.hpp"

namespace siqm {

SeriesCoefficients series_coefficients(double q, double c0, int order) {
  if (!(q >= 0.0 && q <= 1.0)) {
    throw Error(ErrorKind::InvalidParameter, "series requires 0 <= q <= 1");
  }
  if (order < 1) throw Error(ErrorKind::InvalidParameter, "series order must be at least 1");
  if (!std::isfinite(c0)) throw Error(ErrorKind::InvalidParameter, "c0 must be finite");

  SeriesCoefficients out;
  out.q = q;
  out.c0 = c0;
  out.coeffs.assign(static_cast<std::size_t>(order) + 1, 0.0);
  out.coeffs[0] = c0;

  // Matching x^(2k+2) in W^2 + W' = q W^2(sqrt(q) x) - q W'(sqrt(q) x) + R.
  for (int k = 0; k < order; ++k) {
    double cauchy = 0.0;
    for (int i = 0; i <= k; ++i) cauchy += out.coeffs[static_cast<std::size_t>(i)] * out.coeffs[static_cast<std::size_t>(k - i)];
    const double qk = std::pow(q, k + 2);
    out.coeffs[static_cast<std::size_t>(k) + 1] = -(1.0 - qk) / ((2.0 * k + 3.0) * (1.0 + qk)) * cauchy;
  }
  out.radius_estimate = radius_estimate(out).radius;
  return out;
}

RadiusEstimate radius_estimate(const SeriesCoefficients& coeffs) {
  const auto& c = coeffs.coeffs;
  std::size_t nonzero = 0;
  for (double v : c) nonzero += (v != 0.0);

  bool terminating = true;
  for (std::size_t j = 1; j < c.size(); ++j) terminating = terminating && c[j] == 0.0;
  if (terminating) return {std::numeric_limits<double>::infinity(), true};
  if (nonzero < 6) return {std::numeric_limits<double>::quiet_NaN(), false};

  std::vector<double> ratios;
  for (std::size_t k = 0; k + 1 < c.size(); ++k) {
    if (c[k] != 0.0 && c[k + 1] != 0.0) ratios.push_back(std::sqrt(std::abs(c[k] / c[k + 1])));
  }
  const std::size_t tail = std::min<std::size_t>(4, ratios.size());
  double log_sum = 0.0;
  for (std::size_t i = ratios.size() - tail; i < ratios.size(); ++i) log_sum += std::log(ratios[i]);

  RadiusEstimate est;
  est.radius = std::exp(log_sum / static_cast<double>(tail));

  const std::size_t window = std::min<std::size_t>(8, ratios.size());
  int rising = 0;
  int falling = 0;
  for (std::size_t i = ratios.size() - window + 1; i < ratios.size(); ++i) {
    if (ratios[i] > ratios[i - 1]) ++rising;
    if (ratios[i] < ratios[i - 1]) ++falling;
  }
  est.monotone_tail = rising == 0 || falling == 0;
  return est;
}

SelfSimilarSolution::SelfSimilarSolution(SeriesCoefficients coeffs, ContinuationOptions options)
    : coeffs_(std::move(coeffs)), options_(options) {
  if (!(options_.horizon > 0.0) || !(options_.step > 0.0)) {
    throw Error(ErrorKind::InvalidParameter, "continuation horizon and step must be positive");
  }
  if (std::isnan(coeffs_.radius_estimate)) {
    throw Error(ErrorKind::InvalidParameter, "continuation needs a series long enough for a radius estimate");
  }
  if (!std::isfinite(coeffs_.radius_estimate)) {
    x_switch_ = std::numeric_limits<double>::infinity();
    return;
  }

  // Shrink the series region until the last retained term is negligible.
  x_switch_ = options_.series_fraction * coeffs_.radius_estimate;
  const auto order = static_cast<int>(coeffs_.coeffs.size()) - 1;
  while (x_switch_ > 1e-3) {
    const double last = std::abs(coeffs_.coeffs.back()) * std::pow(x_switch_, 2 * order + 1);
    if (last <= 1e-16 * std::max(1.0, std::abs(series_value(x_switch_, 0)))) break;
    x_switch_ *= 0.95;
  }
  if (x_switch_ < options_.horizon) continue_outward();
}

double SelfSimilarSolution::series_value(double x, int derivative) const {
  const auto& c = coeffs_.coeffs;
  const double y = x * x;
  double acc = 0.0;
  if (derivative == 2) {
    // W'' = sum_{j>=1} (2j+1)(2j) c_j x^(2j-1)
    for (std::size_t j = c.size(); j-- > 1;) {
      const double k = 2.0 * static_cast<double>(j) + 1.0;
      acc = acc * y + k * (k - 1.0) * c[j];
    }
    return acc * x;
  }
  for (std::size_t j = c.size(); j-- > 0;) {
    const double k = 2.0 * static_cast<double>(j) + 1.0;
    acc = acc * y + (derivative == 1 ? k : 1.0) * c[j];
  }
  return derivative == 1 ? acc : acc * x;
}

double SelfSimilarSolution::lookup(double x, int derivative) const {
  if (x <= x_switch_) return series_value(x, derivative);
  if (table_.empty() || x > table_.back().x * (1.0 + 1e-14)) {
    std::ostringstream os;
    os << "x = " << x << " lies beyond the continuation table";
    throw Error(ErrorKind::HorizonExceeded, os.str());
  }
  auto it = std::upper_bound(table_.begin(), table_.end(), x,
                             [](double v, const Node& n) { return v < n.x; });
  std::size_t i = it == table_.begin() ? 0 : static_cast<std::size_t>(it - table_.begin()) - 1;
  if (i + 1 >= table_.size()) i = table_.size() - 2;

  if (derivative == 2) {
    // Cubic Lagrange through the nearest four nodes.
    std::size_t lo = i > 0 ? i - 1 : 0;
    lo = std::min(lo, table_.size() >= 4 ? table_.size() - 4 : 0);
    const std::size_t hi = std::min(table_.size(), lo + 4);
    double acc = 0.0;
    for (std::size_t a = lo; a < hi; ++a) {
      double w = 1.0;
      for (std::size_t b = lo; b < hi; ++b) {
        if (a != b) w *= (x - table_[b].x) / (table_[a].x - table_[b].x);
      }
      acc += w * table_[a].d2w;
    }
    return acc;
  }

  const Node& a = table_[i];
  const Node& b = table_[i + 1];
  const double dx = b.x - a.x;
  const double t = (x - a.x) / dx;
  const double h00 = (1.0 + 2.0 * t) * (1.0 - t) * (1.0 - t);
  const double h10 = t * (1.0 - t) * (1.0 - t);
  const double h01 = t * t * (3.0 - 2.0 * t);
  const double h11 = t * t * (t - 1.0);
  if (derivative == 0) return h00 * a.w + h10 * dx * a.dw + h01 * b.w + h11 * dx * b.dw;
  return h00 * a.dw + h10 * dx * a.d2w + h01 * b.dw + h11 * dx * b.d2w;
}

double SelfSimilarSolution::rhs(double x, double w) const {
  const double q = coeffs_.q;
  double value = -w * w + coeffs_.remainder();
  if (q > 0.0) {
    const double xd = std::sqrt(q) * x;
    const double wd = lookup(xd, 0);
    value += q * wd * wd - q * lookup(xd, 1);
  }
  return value;
}

void SelfSimilarSolution::continue_outward() {
  const double q = coeffs_.q;
  const double sq = std::sqrt(q);
  const double q32 = q * sq;

  auto second_derivative = [&](double x, double w, double dw) {
    double value = -2.0 * w * dw;
    if (q > 0.0) {
      const double xd = sq * x;
      value += 2.0 * q32 * lookup(xd, 0) * lookup(xd, 1) - q32 * lookup(xd, 2);
    }
    return value;
  };

  double x = x_switch_;
  table_.push_back({x, series_value(x, 0), series_value(x, 1), lookup(x, 2)});

  while (x < options_.horizon) {
    double h = options_.step;
    // The delayed argument sqrt(q)(x + h) must stay inside the known region.
    if (q > 0.0 && sq < 1.0) h = std::min(h, x * (1.0 - sq) / sq);
    h = std::min(h, options_.horizon - x);

    const double w = table_.back().w;
    const double k1 = table_.back().dw;
    const double k2 = rhs(x + 0.5 * h, w + 0.5 * h * k1);
    const double k3 = rhs(x + 0.5 * h, w + 0.5 * h * k2);
    const double k4 = rhs(x + h, w + h * k3);
    const double w_next = w + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    const double x_next = x + h;

    if (!std::isfinite(w_next) || std::abs(w_next) > 1e8) {
      std::ostringstream os;
      os << "continuation diverged at x = " << x_next;
      throw Error(ErrorKind::HorizonExceeded, os.str());
    }
    const double dw_next = rhs(x_next, w_next);
    table_.push_back({x_next, w_next, dw_next, second_derivative(x_next, w_next, dw_next)});
    x = x_next;
  }
}

double SelfSimilarSolution::W(double x) const {
  if (std::abs(x) > options_.horizon * (1.0 + 1e-14)) {
    std::ostringstream os;
    os << "|x| = " << std::abs(x) << " exceeds the continuation horizon " << options_.horizon;
    throw Error(ErrorKind::HorizonExceeded, os.str());
  }
  const double v = lookup(std::abs(x), 0);
  return x < 0.0 ? -v : v;
}

double SelfSimilarSolution::dW(double x) const {
  if (std::abs(x) > options_.horizon * (1.0 + 1e-14)) {
    throw Error(ErrorKind::HorizonExceeded, "derivative requested beyond the continuation horizon");
  }
  return lookup(std::abs(x), 1);
}

double SelfSimilarSolution::d2W(double x) const {
  if (std::abs(x) > options_.horizon * (1.0 + 1e-14)) {
    throw Error(ErrorKind::HorizonExceeded, "derivative requested beyond the continuation horizon");
  }
  const double v = lookup(std::abs(x), 2);
  return x < 0.0 ? -v : v;
}

double SelfSimilarSolution::defining_residual(double x) const {
  const double q = coeffs_.q;
  const double xd = std::sqrt(q) * x;
  const double w = W(x);
  const double wd = W(xd);
  return std::abs(w * w + dW(x) - q * wd * wd + q * dW(xd) - coeffs_.remainder());
}

double SelfSimilarSolution::asymptote() const {
  if (coeffs_.q >= 1.0) return std::numeric_limits<double>::infinity();
  return std::sqrt(coeffs_.remainder() / (1.0 - coeffs_.q));
}

double eval_W_selfsimilar(const SeriesCoefficients& coeffs, double x) {
  ContinuationOptions options;
  options.horizon = std::max(1.0, std::abs(x) * 1.001 + options.step);
  return SelfSimilarSolution(coeffs, options).W(x);
}

}  // namespace siqm
