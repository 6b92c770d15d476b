#include "lwaudit/special_functions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "lwaudit/constants.hpp"
#include "lwaudit/errors.hpp"

namespace lwaudit {
namespace {

constexpr int kMaxBernoulliTerms = 30;

// B_{2k} for k = 1..15 as numerator / denominator.
constexpr std::array<std::array<double, 2>, 15> kBernoulli = {{
    {1.0, 6.0},
    {-1.0, 30.0},
    {1.0, 42.0},
    {-1.0, 30.0},
    {5.0, 66.0},
    {-691.0, 2730.0},
    {7.0, 6.0},
    {-3617.0, 510.0},
    {43867.0, 798.0},
    {-174611.0, 330.0},
    {854513.0, 138.0},
    {-236364091.0, 2730.0},
    {8553103.0, 6.0},
    {-23749461029.0, 870.0},
    {8615841276005.0, 14322.0},
}};

// B_{2k} / (2k)! for k = 1..kMaxBernoulliTerms. Beyond the exact table we use
// B_{2k} / (2k)! = (-1)^{k+1} 2 zeta(2k) / (2 pi)^{2k}; zeta(2k) for 2k >= 32
// is 1 + 2^{-2k} + ... to double precision after a handful of terms.
const std::array<double, kMaxBernoulliTerms + 1>& bernoulli_over_factorial() {
  static const auto table = [] {
    std::array<double, kMaxBernoulliTerms + 1> t{};
    double factorial = 1.0;
    for (int k = 1; k <= kMaxBernoulliTerms; ++k) {
      factorial *= static_cast<double>(2 * k - 1) * static_cast<double>(2 * k);
      if (k <= static_cast<int>(kBernoulli.size())) {
        t[k] = kBernoulli[k - 1][0] / kBernoulli[k - 1][1] / factorial;
      } else {
        double z = 0.0;
        for (int n = 12; n >= 1; --n) z += std::pow(static_cast<double>(n), -2.0 * k);
        const double sign = (k % 2 == 1) ? 1.0 : -1.0;
        t[k] = sign * 2.0 * z / std::pow(constants::two_pi, 2.0 * k);
      }
    }
    return t;
  }();
  return table;
}

// Neumaier-compensated complex accumulator.
class CompensatedSum {
 public:
  void add(Complex x) {
    add_part(re_, re_c_, x.real());
    add_part(im_, im_c_, x.imag());
  }
  Complex value() const { return {re_ + re_c_, im_ + im_c_}; }

 private:
  static void add_part(double& sum, double& comp, double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }
  double re_ = 0.0, re_c_ = 0.0, im_ = 0.0, im_c_ = 0.0;
};

// n^{-s} with the phase formed from t * log(n) directly.
inline Complex power_minus_s(double log_n, Complex s) {
  const double mag = std::exp(-s.real() * log_n);
  const double phase = s.imag() * log_n;
  return {mag * std::cos(phase), -mag * std::sin(phase)};
}

bool is_nonpositive_integer(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

struct EulerMaclaurinParts {
  Complex head;      // sum_{n<N} n^{-s} + N^{-s}/2 + Bernoulli corrections
  Complex integral;  // N^{1-s}, still to be divided by (s - 1)
};

EulerMaclaurinParts euler_maclaurin_parts(Complex s, const EvalConfig& cfg) {
  cfg.validate();
  if (!(s.real() > -1.0)) {
    throw DomainError("Euler-Maclaurin zeta requires Re(s) > -1, got Re(s) = " +
                      std::to_string(s.real()));
  }
  const long cutoff = cfg.cutoff_for(s.imag());

  CompensatedSum sum;
  for (long n = 1; n < cutoff; ++n) {
    sum.add(power_minus_s(std::log(static_cast<double>(n)), s));
  }
  const double log_cutoff = std::log(static_cast<double>(cutoff));
  const Complex w = power_minus_s(log_cutoff, s);
  sum.add(0.5 * w);

  const auto& coeff = bernoulli_over_factorial();
  const double inv_n = 1.0 / static_cast<double>(cutoff);
  const double inv_n2 = inv_n * inv_n;
  Complex poch = s;
  double scale = inv_n;
  double last = 0.0;
  bool converged = false;
  const int max_terms = std::min(cfg.em_bernoulli_terms, kMaxBernoulliTerms);
  for (int k = 1; k <= max_terms; ++k) {
    const Complex term = coeff[k] * poch * w * scale;
    sum.add(term);
    last = std::abs(term);
    if (last < 1e-3 * cfg.abs_tol) {
      converged = true;
      break;
    }
    poch *= (s + static_cast<double>(2 * k - 1)) * (s + static_cast<double>(2 * k));
    scale *= inv_n2;
  }
  if (!converged && last > cfg.abs_tol) {
    throw AccuracyError("Euler-Maclaurin tail did not converge (last term " +
                        std::to_string(last) + "); raise em_cutoff or em_bernoulli_terms");
  }
  return {sum.value(), static_cast<double>(cutoff) * w};
}

}  // namespace

Complex require_finite(Complex z, const char* what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw RangeError(std::string(what) + ": result is not finite");
  }
  return z;
}

Complex zeta_dirichlet(Complex s, const EvalConfig& cfg) {
  cfg.validate();
  if (!(s.real() > 1.0)) {
    throw DomainError("Dirichlet series requires Re(s) > 1, got Re(s) = " +
                      std::to_string(s.real()));
  }
  CompensatedSum sum;
  // Smallest terms first.
  for (long n = cfg.dirichlet_terms; n >= 1; --n) {
    sum.add(power_minus_s(std::log(static_cast<double>(n)), s));
  }
  return require_finite(sum.value(), "zeta_dirichlet");
}

double dirichlet_truncation_bound(double sigma, long terms) {
  if (!(sigma > 1.0)) throw DomainError("truncation bound requires sigma > 1");
  return std::pow(static_cast<double>(terms), 1.0 - sigma) / (sigma - 1.0);
}

Complex zeta_euler_maclaurin(Complex s, const EvalConfig& cfg) {
  if (s == Complex(1.0, 0.0)) throw PoleError("zeta has a pole at s = 1");
  const auto parts = euler_maclaurin_parts(s, cfg);
  return require_finite(parts.head + parts.integral / (s - 1.0), "zeta_euler_maclaurin");
}

Complex zeta_times_s_minus_one(Complex s, const EvalConfig& cfg) {
  const auto parts = euler_maclaurin_parts(s, cfg);
  return require_finite((s - 1.0) * parts.head + parts.integral, "zeta_times_s_minus_one");
}

Complex log_gamma(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("log_gamma: argument is not finite");
  }
  if (is_nonpositive_integer(z)) {
    throw PoleError("Gamma has a pole at z = " + std::to_string(z.real()));
  }

  // Shift into the region where eleven Stirling terms reach double precision.
  constexpr double kStirlingRadius = 15.0;
  constexpr long kMaxShift = 1'000'000;
  long shift = 0;
  Complex w = z;
  CompensatedSum shift_logs;
  while (w.real() < 1.0 || std::abs(w) < kStirlingRadius) {
    shift_logs.add(std::log(w));
    w += 1.0;
    if (++shift > kMaxShift) throw DomainError("log_gamma: argument too far left");
  }

  static constexpr std::array<double, 10> kStirling = {
      1.0 / 12.0,           -1.0 / 360.0,        1.0 / 1260.0,      -1.0 / 1680.0,
      1.0 / 1188.0,         -691.0 / 360360.0,   1.0 / 156.0,       -3617.0 / 122400.0,
      43867.0 / 244188.0,   -174611.0 / 125400.0};
  const Complex inv = 1.0 / w;
  const Complex inv2 = inv * inv;
  Complex series = 0.0;
  Complex power = inv;
  for (double c : kStirling) {
    series += c * power;
    power *= inv2;
  }
  const Complex stirling =
      (w - 0.5) * std::log(w) - w + 0.5 * constants::log_two_pi + series;
  return require_finite(stirling - shift_logs.value(), "log_gamma");
}

Complex gamma_weierstrass(Complex z, const EvalConfig& cfg) {
  cfg.validate();
  if (is_nonpositive_integer(z)) {
    throw PoleError("Gamma has a pole at z = " + std::to_string(z.real()));
  }
  // log of e^{z/k} / (1 + z/k), summed; w - log(1 + w) by series when small.
  CompensatedSum sum;
  for (long k = cfg.weierstrass_terms; k >= 1; --k) {
    const Complex w = z / static_cast<double>(k);
    if (std::abs(w) < 0.25) {
      Complex acc = 0.0;
      Complex power = w * w;
      for (int j = 2; j < 40; ++j) {
        const Complex term = power / static_cast<double>(j);
        acc += (j % 2 == 0) ? term : -term;
        if (std::abs(term) < 1e-18 * std::max(1.0, std::abs(acc))) break;
        power *= w;
      }
      sum.add(acc);
    } else {
      sum.add(w - std::log(1.0 + w));
    }
  }
  const Complex log_value = -constants::euler_mascheroni * z - std::log(z) + sum.value();
  return require_finite(std::exp(log_value), "gamma_weierstrass");
}

Complex log_xi(Complex s, const EvalConfig& cfg) {
  // xi(s) = pi^{-s/2} Gamma(1 + s/2) (s - 1) zeta(s): no removable
  // singularities left, so s = 0 and s = 1 need no special treatment beyond
  // returning the exact limit.
  if (s == Complex(0.0, 0.0) || s == Complex(1.0, 0.0)) {
    return {-std::log(2.0), 0.0};
  }
  const Complex q = zeta_times_s_minus_one(s, cfg);
  if (q == Complex(0.0, 0.0)) {
    throw OnPathZeroError("xi vanishes at the evaluation point", s.real(), s.imag());
  }
  return require_finite(-0.5 * s * constants::log_pi + log_gamma(1.0 + 0.5 * s) + std::log(q),
                        "log_xi");
}

Complex xi(Complex s, const EvalConfig& cfg) {
  if (s == Complex(0.0, 0.0) || s == Complex(1.0, 0.0)) return {0.5, 0.0};
  const Complex q = zeta_times_s_minus_one(s, cfg);
  if (q == Complex(0.0, 0.0)) return {0.0, 0.0};
  const Complex l =
      -0.5 * s * constants::log_pi + log_gamma(1.0 + 0.5 * s) + std::log(q);
  constexpr double kLogMax = 709.0;
  const double kLogMin = std::log(std::numeric_limits<double>::min());
  if (l.real() > kLogMax || l.real() < kLogMin) {
    throw RangeError("xi: |xi(s)| = exp(" + std::to_string(l.real()) +
                     ") is outside double range; use log_xi");
  }
  return require_finite(std::exp(l), "xi");
}

double riemann_siegel_theta(double t) {
  if (!std::isfinite(t)) throw DomainError("riemann_siegel_theta: t is not finite");
  if (t == 0.0) return 0.0;
  return log_gamma(Complex(0.25, 0.5 * t)).imag() - 0.5 * t * constants::log_pi;
}

HardyZValue hardy_z_detail(double t, const EvalConfig& cfg) {
  const Complex zeta = zeta_euler_maclaurin(Complex(0.5, t), cfg);
  const Complex rotated = std::polar(1.0, riemann_siegel_theta(t)) * zeta;
  if (std::abs(rotated.imag()) >= 10.0 * cfg.abs_tol) {
    throw AccuracyError("hardy_z: imaginary residue " + std::to_string(rotated.imag()) +
                        " at t = " + std::to_string(t) + " exceeds 10 * abs_tol");
  }
  return {rotated.real(), rotated.imag()};
}

void EvalConfig::validate() const {
  if (dirichlet_terms < 1 || em_cutoff < 1 || em_bernoulli_terms < 1 || weierstrass_terms < 1) {
    throw ConfigError("EvalConfig: all term counts must be >= 1");
  }
  if (em_bernoulli_terms > kMaxBernoulliTerms) {
    throw ConfigError("EvalConfig: em_bernoulli_terms must be <= " +
                      std::to_string(kMaxBernoulliTerms));
  }
  if (!(abs_tol > 0.0) || !std::isfinite(abs_tol)) {
    throw ConfigError("EvalConfig: abs_tol must be positive and finite");
  }
}

long EvalConfig::cutoff_for(double t) const {
  const long required = static_cast<long>(std::ceil(std::abs(t) / 2.0)) + 10;
  if (auto_cutoff) return std::max(em_cutoff, required);
  if (em_cutoff < required) {
    throw ConfigError("EvalConfig: em_cutoff " + std::to_string(em_cutoff) +
                      " is below |t|/2 + 10 = " + std::to_string(required) +
                      " at t = " + std::to_string(t));
  }
  return em_cutoff;
}

EvalConfig EvalConfig::for_height(double t_max) {
  EvalConfig cfg;
  cfg.abs_tol = std::abs(t_max) <= 1000.0 ? 1e-10 : 1e-8;
  return cfg;
}

}  // namespace lwaudit
