#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "lwaudit/argument_tracker.hpp"
#include "lwaudit/constants.hpp"
#include "lwaudit/errors.hpp"
#include "lwaudit/littlewood_auditor.hpp"
#include "lwaudit/quadrature.hpp"
#include "lwaudit/special_functions.hpp"

using namespace lwaudit;
using lwaudit::constants::pi;

namespace {

AuditOptions opts_for(double T) {
  AuditOptions o;
  o.eval = EvalConfig::for_height(T);
  return o;
}

double residual_asymptotic_only(double alpha, double T) {
  const auto o = opts_for(T);
  const auto h = rhs_horizontal_integral({alpha, T}, o);
  const auto m = n_mangoldt(T, o.eval);
  return std::abs(h.reduced / (1 - 2 * alpha) - m.with_s);
}

}  // namespace

TEST(AuditRectangle, Validation) {
  EXPECT_NO_THROW((AuditRectangle{0.45, 100.0}.validate()));
  EXPECT_THROW((AuditRectangle{0.6, 100.0}.validate()), PreconditionError);
  EXPECT_THROW((AuditRectangle{0.0, 100.0}.validate()), PreconditionError);
  EXPECT_THROW((AuditRectangle{0.5, 100.0}.validate()), PreconditionError);
  EXPECT_THROW((AuditRectangle{0.3, -1.0}.validate()), PreconditionError);
}

TEST(LhsSumDistances, Values) {
  const auto o50 = opts_for(50.0);
  const auto c50 = make_census_input(50.0, o50);
  EXPECT_NEAR(lhs_sum_distances({0.45, 50.0}, c50), 1.0, 1e-12);
  const auto c100 = make_census_input(100.0, opts_for(100.0));
  EXPECT_NEAR(lhs_sum_distances({0.45, 100.0}, c100), 2.9, 1e-12);
  EXPECT_NEAR(lhs_sum_distances({0.4999999, 100.0}, c100), 0.0, 1e-5);
}

TEST(LhsSumDistances, RefusesIncompleteCensus) {
  auto c = make_census_input(50.0, opts_for(50.0));
  c.complete = false;
  EXPECT_THROW(lhs_sum_distances({0.45, 50.0}, c), InconsistencyError);
}

TEST(RhsVertical, VanishesBySymmetry) {
  EXPECT_LT(std::abs(rhs_vertical_integral({0.45, 50.0}, opts_for(50.0)).value), 1e-8);
  const auto v = rhs_vertical_integral({0.3, 100.0}, opts_for(100.0));
  EXPECT_LT(std::abs(v.value), 1e-8);
  EXPECT_LT(v.max_asymmetry, 1e-6);
}

TEST(RhsVertical, PointwiseModulusSymmetry) {
  const EvalConfig cfg;
  const double a = log_xi({0.3, 37.0}, cfg).real();
  const double b = log_xi({0.7, 37.0}, cfg).real();
  EXPECT_LT(std::abs(std::expm1(a - b)), 1e-10);
}

TEST(RhsHorizontal, ReducedEqualsFull) {
  const auto h = rhs_horizontal_integral({0.45, 100.0}, opts_for(100.0));
  EXPECT_NEAR(h.full, h.reduced, 1e-8);
  EXPECT_NEAR(h.full, 2.9, 1e-7);
}

TEST(RhsHorizontal, NarrowRectangle) {
  const auto h = rhs_horizontal_integral({0.49, 50.0}, opts_for(50.0));
  EXPECT_NEAR(h.full, 0.2, 1e-7);
}

TEST(Antiderivative, VanishesAtZero) {
  for (double T : {1.0, 10.0, 1000.0}) EXPECT_EQ(closed_form_antiderivative(0.0, T), 0.0);
}

TEST(Antiderivative, DerivativeMatchesIntegrand) {
  const double h = 1e-4;
  for (double T : {10.0, 100.0, 1000.0}) {
    for (double s : {0.1, 0.5, 0.9}) {
      const double fd =
          (closed_form_antiderivative(s + h, T) - closed_form_antiderivative(s - h, T)) / (2 * h);
      EXPECT_NEAR(fd, std::log(s * s / 4 + T * T / 4), 1e-8) << "sigma " << s << " T " << T;
    }
  }
}

TEST(Antiderivative, MatchesQuadrature) {
  const double T = 100.0;
  const double closed = closed_form_antiderivative(0.55, T) - closed_form_antiderivative(0.45, T);
  const auto q = integrate_adaptive(
      [T](double s) { return std::log(s * s / 4 + T * T / 4); }, 0.45, 0.55, 1e-13);
  EXPECT_NEAR(closed, q.value, 1e-10);
}

TEST(AsymptoticRhs, Values) {
  const auto o100 = opts_for(100.0);
  EXPECT_NEAR(asymptotic_rhs({0.45, 100.0}, o100), 2.9, 1e-3);
  EXPECT_NEAR(asymptotic_rhs({0.45, 100.0}, o100), 0.1 * n_mangoldt(100.0, o100.eval).with_s, 1e-12);
  EXPECT_NEAR(asymptotic_rhs({0.49, 1000.0}, opts_for(1000.0)), 0.02 * 649, 1e-3);
  EXPECT_NEAR(asymptotic_rhs({0.4999999, 100.0}, o100), 0.0, 1e-5);
  EXPECT_THROW(asymptotic_rhs({0.45, 14.134725}, o100), OrdinateCollisionError);
}

TEST(TermBreakdown, ComponentEstimates) {
  const AuditRectangle rect{0.45, 100.0};
  const auto b = term_breakdown(rect, opts_for(100.0));
  ASSERT_EQ(b.samples.size(), 3u);
  EXPECT_NEAR(b.c_sigma_polynomial.exact, (1 - 2 * rect.alpha) * 7 * pi / 8, 1e-12);
  EXPECT_LT(b.c_sigma_polynomial.abs_error, 1e-12);
  EXPECT_NEAR(b.samples[1].arg_pi_power.exact, -57.2364942924700, 1e-12);
  EXPECT_EQ(b.samples[1].arg_pi_power.abs_error, 0.0);
  EXPECT_LT(b.arg_pi_power.abs_error, 1e-12);
  EXPECT_LT(b.arctan_difference.abs_error, 1.0 / rect.T);
  for (const auto& s : b.samples) {
    EXPECT_LT(s.arg_quadratic.abs_error, 0.01);
    EXPECT_EQ(s.arg_pi_power.abs_error, 0.0);
    // below pi to the right of the critical line, above it to the left
    if (s.sigma > 0.5) EXPECT_LT(s.arg_quadratic.exact, pi);
    if (s.sigma < 0.5) EXPECT_GT(s.arg_quadratic.exact, pi);
    EXPECT_LT(s.arg_gamma.abs_error, 0.01);
  }
  EXPECT_LT(b.assembled_rhs.abs_error, 0.01);
}

TEST(TermBreakdown, ArctanErrorBelowOneOverT) {
  for (double T : {10.0, 30.0, 100.0, 1000.0}) {
    for (double a : {0.1, 0.3, 0.49}) {
      const double exact = T * (std::atan((1 - a) / T) - std::atan(a / T));
      EXPECT_LT(std::abs(exact - (1 - 2 * a)), 1.0 / T);
    }
  }
}

TEST(TermBreakdown, StirlingErrorHalvesWithT) {
  std::vector<double> err;
  for (double T : {250.0, 500.0, 1000.0, 2000.0}) {
    const auto b = term_breakdown({0.45, T}, opts_for(T));
    err.push_back(b.samples[1].arg_gamma.abs_error);
  }
  for (std::size_t i = 1; i < err.size(); ++i) {
    const double ratio = err[i] / err[i - 1];
    EXPECT_GE(ratio, 0.375) << i;
    EXPECT_LE(ratio, 0.625) << i;
  }
}

TEST(TermBreakdown, CConstantWithinRange) {
  for (double a : {0.1, 0.3, 0.49}) {
    const auto b = term_breakdown({a, 200.0}, opts_for(200.0));
    EXPECT_NEAR(b.c_sigma_polynomial.exact, (1 - 2 * a) * 7 * pi / 8, 1e-12);
    EXPECT_LT(b.c_sigma_integral.abs_error, 0.01);
  }
}

TEST(Mvt, DeviationShrinksTowardsCriticalLine) {
  const std::vector<double> alphas = {0.40, 0.45, 0.49, 0.499, 0.4999};
  const auto t = mvt_limit_check(100.0, alphas, opts_for(100.0));
  ASSERT_EQ(t.rows.size(), alphas.size());
  EXPECT_TRUE(t.monotone);
  EXPECT_LT(t.rows[3].deviation, t.rows[1].deviation);
  EXPECT_LT(t.rows[4].deviation, 1e-3 * std::abs(t.center) + 1e-6);
}

TEST(Mvt, ConstantIntegrand) {
  for (double a : {0.1, 0.3, 0.45, 0.499}) {
    EXPECT_NEAR(mvt_mean([](double) { return 1.0; }, a, 1e-12), 1.0, 1e-14);
  }
}

TEST(Mvt, Preconditions) {
  const std::vector<double> bad = {0.7};
  EXPECT_THROW(mvt_limit_check(100.0, bad, opts_for(100.0)), PreconditionError);
  const std::vector<double> ok = {0.45};
  EXPECT_THROW(mvt_limit_check(14.134725, ok, opts_for(100.0)), OrdinateCollisionError);
}

TEST(Audit, CalibrationRectangle) {
  const auto r = audit({0.45, 50.0}, opts_for(50.0));
  EXPECT_NEAR(r.lhs_sum_distances, 1.0, 1e-12);
  EXPECT_GT(r.rhs_total, 0.0);
  EXPECT_LT(r.residual_identity, 1e-7);
}

TEST(Audit, Hundred) {
  const auto r = audit({0.45, 100.0}, opts_for(100.0));
  EXPECT_LT(r.residual_identity, 1e-6);
  EXPECT_EQ(r.residual_theorem, 0);
  EXPECT_DOUBLE_EQ(r.rhs_total, r.rhs_vertical + r.rhs_horizontal);
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(r.flags.empty());
}

TEST(Audit, IdentityHoldsForEveryAlpha) {
  const auto o = opts_for(50.0);
  const auto census = make_census_input(50.0, o);
  std::vector<double> residuals;
  for (double a : {0.1, 0.25, 0.4, 0.45, 0.49}) {
    const auto r = audit({a, 50.0}, o, &census);
    EXPECT_LT(r.residual_identity, 10 * o.quadrature_tol) << "alpha " << a;
    EXPECT_LT(std::abs(r.rhs_vertical), 10 * o.quadrature_tol) << "alpha " << a;
    residuals.push_back(r.residual_identity);
  }
  // No growth with alpha beyond the tolerance floor.
  for (double r : residuals) EXPECT_LT(r, 10 * o.quadrature_tol);
}

TEST(Audit, AsymptoticTrend) {
  const double r100 = audit({0.49, 100.0}, opts_for(100.0)).residual_asymptotic;
  const double r1000 = audit({0.49, 1000.0}, opts_for(1000.0)).residual_asymptotic;
  EXPECT_LT(r1000, r100);
}

TEST(Audit, AsymptoticResidualWeaklyDecreasing) {
  std::vector<double> r;
  for (double T : {250.0, 500.0, 1000.0, 2000.0}) r.push_back(residual_asymptotic_only(0.49, T));
  int inversions = 0;
  for (std::size_t i = 1; i < r.size(); ++i) inversions += r[i] > r[i - 1];
  EXPECT_LE(inversions, 1);
}

TEST(Audit, RejectsOrdinateHeight) {
  EXPECT_THROW(audit({0.45, 14.134725}, opts_for(20.0)), PreconditionError);
}

TEST(Audit, Deterministic) {
  auto o = opts_for(100.0);
  o.threads = 1;
  const auto one = audit({0.45, 100.0}, o);
  o.threads = 4;
  EXPECT_EQ(one, audit({0.45, 100.0}, o));
}
