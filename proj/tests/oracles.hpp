#pragma once

#include <complex>

// Independent reference implementations used only by the tests. None of them
// share code with the library.
namespace oracle {

using CLD = std::complex<long double>;

// Euler-Maclaurin zeta in long double with its own Bernoulli coefficients
// (derived from even zeta values) and a larger cutoff than the library.
CLD zeta(CLD s);

// zeta(1/2) from the alternating eta series with repeated averaging.
long double zeta_half_eta();

// Asymptotic expansion of theta(t); good to ~1e-12 for t >= 10.
long double theta_asymptotic(long double t);

// Z(t) from the two oracles above.
long double hardy_z(long double t);

// Bisection of hardy_z on [lo, hi]; requires a sign change.
long double bisect_zero(long double lo, long double hi, long double tol);

// log Gamma(z) from the Weierstrass product with K and 2K factors combined by
// Richardson extrapolation. Branch is arbitrary; compare through exp.
CLD log_gamma_weierstrass(CLD z, long K);

// Exact values computed with mpmath at 30 digits.
inline constexpr long double kZeros[] = {
    14.1347251417346937904572519836L, 21.0220396387715549926284795939L,
    25.0108575801456887632137909926L, 30.4248761258595132103118975306L,
    32.9350615877391896906623689641L};
inline constexpr long double kZetaHalf = -1.46035450880958681288949915252L;
inline constexpr long double kTheta10 = -3.06707439628989529170201353481L;
inline constexpr long double kArgZetaHalf10 = -0.0745182572998979L;
inline constexpr long double kLogGamma2p3iRe = -2.09285175309273334956L;
inline constexpr long double kLogGamma2p3iIm = 2.30239654346686762615L;

}  // namespace oracle
