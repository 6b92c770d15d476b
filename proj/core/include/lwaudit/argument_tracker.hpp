#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "lwaudit/config.hpp"

namespace lwaudit {

using ComplexFunction = std::function<Complex(Complex)>;

/// Returns a logarithm of f: real part log|f|, imaginary part any argument of
/// f (the tracker only uses it modulo 2*pi). Lets the tracker follow
/// functions whose modulus under- or overflows double.
using LogFunction = std::function<Complex(Complex)>;

/// A polyline along which an argument is continued.
struct PathSpec {
  std::vector<Complex> vertices;
  double initial_arg = 0.0;
  double max_step = 0.05;
  /// |f| below this at a sample is treated as a zero on the path.
  double zero_guard = 1e-6;
  /// Halvings allowed below max_step before giving up.
  int max_depth = 40;

  void validate() const;
};

struct ArgSample {
  Complex point;
  double unwrapped_arg = 0.0;
  double log_modulus = 0.0;
};

struct ArgTrace {
  std::vector<ArgSample> samples;
  /// samples[vertex_samples[k]] is the sample at vertices[k].
  std::vector<std::size_t> vertex_samples;
  long refinements = 0;

  double final_arg() const { return samples.back().unwrapped_arg; }
  double arg_at_vertex(std::size_t k) const { return samples[vertex_samples[k]].unwrapped_arg; }
};

/// Continues arg f along the path from path.initial_arg. Each segment is cut
/// into pieces no longer than max_step; a piece whose raw phase jump reaches
/// pi/2 is halved until the jump is smaller, so consecutive samples always
/// differ by less than pi/2.
///
/// Throws OnPathZeroError when |f| < zero_guard at a sample and
/// ResolutionError when max_depth halvings do not suffice.
ArgTrace continuous_arg(const ComplexFunction& f, const PathSpec& path);
ArgTrace continuous_log_arg(const LogFunction& log_f, const PathSpec& path);

/// Options for the zeta/xi argument helpers below.
struct ArgOptions {
  double max_step = 0.05;
  /// Step along the vertical leg of xi paths; arg xi grows like theta(t) there.
  double xi_vertical_step = 0.1;
  /// Distance in t to the nearest zero ordinate that counts as a collision.
  double ordinate_guard = 1e-6;
  double zero_guard = 1e-6;
};

/// Throws OrdinateCollisionError carrying the zero ordinate when Z changes
/// sign (or vanishes) within ordinate_guard of T.
void ensure_not_ordinate(double T, const EvalConfig& cfg, double ordinate_guard);

/// Log-function whose modulus is |zeta(s)| (up to a factor max(1,|s-1|)) and
/// whose argument is arg xi(s). Dividing xi by the positive quantity
/// |pi^{-s/2} Gamma(s/2) s(s-1)/2| leaves the argument and the zeros intact.
LogFunction normalized_xi(const EvalConfig& cfg);

/// arg zeta(sigma + iT) continued along anchor -> anchor + iT -> sigma + iT,
/// with arg zeta(anchor) fixed at its principal value. Every leg is tracked.
double arg_zeta_via(double anchor, double sigma, double T, const EvalConfig& cfg,
                    const ArgOptions& opts = {});

/// arg zeta(1/2 + iT) continued from s = 2, so that S(T) = arg / pi.
/// Rejects T within the ordinate guard of a zero.
double arg_zeta_critical(double T, const EvalConfig& cfg, const ArgOptions& opts = {});

/// Continuous arg zeta at each sigma on the horizontal line Im s = T, anchored
/// at s = 2. sigmas may be in any order; results follow the input order.
std::vector<double> arg_zeta_on_line(double T, const std::vector<double>& sigmas,
                                     const EvalConfig& cfg, const ArgOptions& opts = {});

struct XiArgument {
  double direct = 0.0;         // arg xi tracked as one function
  double component_sum = 0.0;  // sum of the four tracked factor arguments
};

/// arg xi(sigma + iT) along 2 -> 2 + iT -> sigma + iT, anchored at
/// arg xi(2) = 0, by both routes. Throws AccuracyError when the routes differ
/// by more than 1e-6.
XiArgument arg_xi_at(double sigma, double T, const EvalConfig& cfg, const ArgOptions& opts = {});

/// arg(s) + arg(s - 1) continued from s = 2 (principal parts, T != 0).
double arg_quadratic_factor(double sigma, double T);

/// The direct route for many sigma on one horizontal line, sharing the
/// vertical leg: args at `sigmas` (any order) continued from s = 2.
std::vector<double> arg_xi_on_line(double T, const std::vector<double>& sigmas,
                                   const EvalConfig& cfg, const ArgOptions& opts = {});

}  // namespace lwaudit
