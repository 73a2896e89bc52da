#include <cmath>
#include <limits>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "siqm/error.hpp"
#include "siqm/selfsimilar.hpp"

using namespace siqm;

TEST_CASE("q = 1 terminates after the linear term") {
  const auto s = series_coefficients(1.0, 0.7, 8);
  CHECK(s.coeffs[0] == 0.7);
  for (std::size_t k = 1; k < s.coeffs.size(); ++k) CHECK(s.coeffs[k] == 0.0);
  CHECK(std::isinf(radius_estimate(s).radius));
  CHECK(s.remainder() == doctest::Approx(1.4));
}

TEST_CASE("q = 0 gives the tanh series") {
  const auto s = series_coefficients(0.0, 1.0, 8);
  REQUIRE(s.coeffs.size() >= 9);
  for (std::size_t k = 0; k < oracle::kTanhTaylor.size(); ++k)
    CHECK(std::abs(s.coeffs[k] - oracle::kTanhTaylor[k]) <= 1e-12 * std::abs(oracle::kTanhTaylor[k]));
}

TEST_CASE("q = 1/2 first coefficients") {
  const auto s = series_coefficients(0.5, 1.0, 4);
  CHECK(s.coeffs[1] == doctest::Approx(oracle::kHalfC1).epsilon(1e-15));
  CHECK(s.coeffs[2] == doctest::Approx(oracle::kHalfC2).epsilon(1e-15));
}

TEST_CASE("c0 scaling of the coefficients") {
  // W(x; c0) = sqrt(c0) W(sqrt(c0) x; 1), so c_k(c0) = c0^{k+1} c_k(1)
  const auto one = series_coefficients(0.4, 1.0, 10);
  const auto two = series_coefficients(0.4, 2.0, 10);
  for (std::size_t k = 0; k < one.coeffs.size(); ++k)
    CHECK(two.coeffs[k] == doctest::Approx(std::pow(2.0, k + 1.0) * one.coeffs[k]).epsilon(1e-12));
}

TEST_CASE("radius estimate") {
  const auto tanh_r = radius_estimate(series_coefficients(0.0, 1.0, 40)).radius;
  CHECK(tanh_r == doctest::Approx(std::numbers::pi / 2).epsilon(0.05));
  double previous = 0.0;
  for (double q : {0.3, 0.5, 0.7, 0.9}) {
    const double r = radius_estimate(series_coefficients(q, 1.0, 60)).radius;
    CHECK(std::isfinite(r));
    CHECK(r > previous);
    previous = r;
  }
}

TEST_CASE("continued solution") {
  const SelfSimilarSolution tanh_like(series_coefficients(0.0, 1.0, 120), {20.0, 0.01, 0.8});
  for (double x : {0.0, 0.5, 1.2, 3.0, 8.0}) CHECK(tanh_like.W(x) == doctest::Approx(std::tanh(x)).epsilon(1e-6));

  const SelfSimilarSolution half(series_coefficients(0.5, 1.0, 120), {500.0, 0.01, 0.8});
  CHECK(half.W(0.0) == 0.0);
  CHECK(half.asymptote() == doctest::Approx(std::sqrt(1.5 / 0.5)));
  CHECK(half.W(400.0) == doctest::Approx(half.asymptote()).epsilon(1e-4));
  double prev = 0.0;
  for (double x = 0.5; x < 60.0; x += 0.5) {
    CHECK(half.W(x) > prev);
    CHECK(half.W(-x) == -half.W(x));
    prev = half.W(x);
  }
  for (double x = -50.0; x <= 50.0; x += 0.37) CHECK(half.defining_residual(x) <= 1e-6 * 1.5);

  CHECK_THROWS_AS(half.W(600.0), Error);
}

TEST_CASE("q close to 1 approaches the linear superpotential") {
  const SelfSimilarSolution s(series_coefficients(0.999, 1.0, 120), {10.0, 0.01, 0.8});
  double worst = 0.0;
  for (double x = -3.0; x <= 3.0; x += 0.01) worst = std::max(worst, std::abs(s.W(x) - x));
  CHECK(worst < 1e-2);
}

TEST_CASE("invalid inputs") {
  CHECK_THROWS_AS(series_coefficients(-0.1, 1.0, 8), Error);
  CHECK_THROWS_AS(series_coefficients(1.1, 1.0, 8), Error);
  CHECK_THROWS_AS(series_coefficients(0.5, 1.0, 0), Error);
}
