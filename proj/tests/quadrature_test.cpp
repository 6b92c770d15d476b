#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "lwaudit/errors.hpp"
#include "lwaudit/quadrature.hpp"

using namespace lwaudit;

TEST(Quadrature, PolynomialsAreExact) {
  const auto r = integrate_adaptive([](double x) { return 3 * x * x - 2 * x + 1; }, -1.0, 2.0, 1e-12);
  EXPECT_NEAR(r.value, 9.0 - 3.0 + 3.0, 1e-13);
  EXPECT_EQ(r.intervals, 1);
}

TEST(Quadrature, Sine) {
  const auto r = integrate_adaptive([](double x) { return std::sin(x); }, 0.0, std::numbers::pi, 1e-12);
  EXPECT_NEAR(r.value, 2.0, 1e-12);
  EXPECT_LE(r.error, 1e-12);
}

TEST(Quadrature, NearLogSingularity) {
  const double eps = 1e-3;
  const auto f = [eps](double x) { return std::log(x + eps); };
  const auto F = [eps](double x) { return (x + eps) * std::log(x + eps) - x; };
  const auto r = integrate_adaptive(f, 0.0, 1.0, 1e-10);
  EXPECT_NEAR(r.value, F(1.0) - F(0.0), 1e-10);
  EXPECT_GT(r.intervals, 1);
}

TEST(Quadrature, ReversedLimitsFlipSign) {
  const auto f = [](double x) { return std::exp(x); };
  EXPECT_NEAR(integrate_adaptive(f, 1.0, 0.0, 1e-12).value, -(std::exp(1.0) - 1.0), 1e-12);
}

TEST(Quadrature, BudgetExhaustionIsAnAccuracyError) {
  const auto f = [](double x) { return std::sin(1.0 / (x + 1e-4)); };
  EXPECT_THROW(integrate_adaptive(f, 0.0, 1.0, 1e-14, 8), AccuracyError);
}

TEST(Quadrature, PiecesAreThreadIndependent) {
  std::vector<double> cuts;
  for (int i = 0; i <= 40; ++i) cuts.push_back(0.25 * i);
  const auto f = [](double x) { return std::cos(x * x) * std::exp(-0.1 * x); };
  const auto one = integrate_pieces(f, cuts, 1e-12, 1);
  for (unsigned t : {2u, 4u, 8u}) {
    const auto many = integrate_pieces(f, cuts, 1e-12, t);
    EXPECT_EQ(one.value, many.value);
    EXPECT_EQ(one.error, many.error);
  }
  const auto whole = integrate_adaptive(f, 0.0, 10.0, 1e-12);
  EXPECT_NEAR(one.value, whole.value, 1e-11);
}
