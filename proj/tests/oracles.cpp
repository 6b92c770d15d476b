#include "oracles.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace oracle {
namespace {

constexpr int kTerms = 14;
constexpr long double kPi = std::numbers::pi_v<long double>;

// B_{2k}/(2k)! = (-1)^{k+1} 2 zeta(2k) / (2 pi)^{2k}
const std::array<long double, kTerms>& bernoulli_ratio() {
  static const std::array<long double, kTerms> c = [] {
    std::array<long double, kTerms> out{};
    for (int k = 1; k <= kTerms; ++k) {
      const int p = 2 * k;
      long double z;
      if (k == 1) {
        z = kPi * kPi / 6.0L;
      } else {
        const long n_max = 2000;
        z = 0.0L;
        for (long n = n_max - 1; n >= 1; --n) z += std::pow(static_cast<long double>(n), -p);
        const long double N = n_max;
        z += std::pow(N, 1 - p) / (p - 1) + 0.5L * std::pow(N, -p);
      }
      const long double mag = 2.0L * z / std::pow(2.0L * kPi, p);
      out[k - 1] = (k % 2 == 1) ? mag : -mag;
    }
    return out;
  }();
  return c;
}

}  // namespace

CLD zeta(CLD s) {
  const long N = 40 + static_cast<long>(std::abs(s.imag()));
  CLD sum = 0.0L;
  for (long n = N - 1; n >= 1; --n) sum += std::exp(-s * std::log(static_cast<long double>(n)));
  const long double n = N;
  const CLD n_pow = std::exp(-s * std::log(n));
  sum += n_pow * n / (s - 1.0L) + 0.5L * n_pow;
  // tail: sum_k B_2k/(2k)! * s(s+1)...(s+2k-2) N^{-s-2k+1}
  CLD rising = s;
  CLD power = n_pow / n;
  const auto& c = bernoulli_ratio();
  for (int k = 1; k <= kTerms; ++k) {
    sum += c[k - 1] * rising * power;
    rising *= (s + static_cast<long double>(2 * k - 1)) * (s + static_cast<long double>(2 * k));
    power /= n * n;
  }
  return sum;
}

long double zeta_half_eta() {
  constexpr int start = 2000;
  constexpr int depth = 40;
  std::array<long double, depth + 1> partial{};
  long double s = 0.0L;
  for (int n = 1; n < start; ++n) s += ((n % 2) ? 1.0L : -1.0L) / std::sqrt(static_cast<long double>(n));
  for (int i = 0; i <= depth; ++i) {
    const int n = start + i;
    s += ((n % 2) ? 1.0L : -1.0L) / std::sqrt(static_cast<long double>(n));
    partial[i] = s;
  }
  for (int level = depth; level > 0; --level) {
    for (int i = 0; i < level; ++i) partial[i] = 0.5L * (partial[i] + partial[i + 1]);
  }
  const long double eta = partial[0];
  return eta / (1.0L - std::sqrt(2.0L));
}

long double theta_asymptotic(long double t) {
  const long double t2 = t * t;
  return t / 2.0L * std::log(t / (2.0L * kPi)) - t / 2.0L - kPi / 8.0L + 1.0L / (48.0L * t) +
         7.0L / (5760.0L * t * t2) + 31.0L / (80640.0L * t * t2 * t2) +
         127.0L / (430080.0L * t * t2 * t2 * t2) + 511.0L / (1216512.0L * t * t2 * t2 * t2 * t2);
}

long double hardy_z(long double t) {
  const CLD z = zeta(CLD(0.5L, t));
  const long double th = theta_asymptotic(t);
  return (std::polar(1.0L, th) * z).real();
}

long double bisect_zero(long double lo, long double hi, long double tol) {
  long double flo = hardy_z(lo);
  if (flo * hardy_z(hi) > 0) throw std::invalid_argument("bisect_zero: no sign change");
  while (hi - lo > tol) {
    const long double mid = 0.5L * (lo + hi);
    const long double fm = hardy_z(mid);
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5L * (lo + hi);
}

CLD log_gamma_weierstrass(CLD z, long K) {
  constexpr long double gamma = 0.577215664901532860606512090082L;
  auto truncated = [&](long k_max) {
    CLD sum = -gamma * z - std::log(z);
    for (long k = k_max; k >= 1; --k) {
      const CLD w = z / static_cast<long double>(k);
      sum += w - std::log(1.0L + w);
    }
    return sum;
  };
  return 2.0L * truncated(2 * K) - truncated(K);
}

}  // namespace oracle
