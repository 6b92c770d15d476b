#include "lwaudit/argument_tracker.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "lwaudit/constants.hpp"
#include "lwaudit/errors.hpp"
#include "lwaudit/special_functions.hpp"

namespace lwaudit {
namespace {

constexpr double kJumpLimit = constants::pi / 2.0;
constexpr double kRouteAgreement = 1e-6;

double wrap_phase(double x) { return std::remainder(x, constants::two_pi); }

std::string point_str(Complex p) {
  return "(" + std::to_string(p.real()) + ", " + std::to_string(p.imag()) + ")";
}

struct Evaluation {
  double phase;
  double log_modulus;
};

class Tracker {
 public:
  Tracker(const LogFunction& log_f, const PathSpec& path)
      : log_f_(log_f), path_(path), log_guard_(std::log(path.zero_guard)) {}

  ArgTrace run() {
    const Complex start = path_.vertices.front();
    Evaluation e0 = evaluate(start);
    trace_.samples.push_back({start, path_.initial_arg, e0.log_modulus});
    trace_.vertex_samples.push_back(0);

    for (std::size_t k = 1; k < path_.vertices.size(); ++k) {
      const Complex a = path_.vertices[k - 1];
      const Complex b = path_.vertices[k];
      const auto pieces = static_cast<long>(std::ceil(std::abs(b - a) / path_.max_step));
      Complex prev = a;
      for (long j = 1; j <= pieces; ++j) {
        const Complex next =
            (j == pieces) ? b : a + (b - a) * (static_cast<double>(j) / static_cast<double>(pieces));
        const Evaluation e1 = evaluate(next);
        advance(prev, e0, next, e1, 0);
        prev = next;
        e0 = e1;
      }
      trace_.vertex_samples.push_back(trace_.samples.size() - 1);
    }
    return std::move(trace_);
  }

 private:
  Evaluation evaluate(Complex p) const {
    const Complex l = log_f_(p);
    if (std::isnan(l.real()) || l.real() < log_guard_) {
      throw OnPathZeroError("tracked function vanishes near " + point_str(p), p.real(), p.imag());
    }
    if (!std::isfinite(l.real()) || !std::isfinite(l.imag())) {
      throw RangeError("tracked function is not finite at " + point_str(p));
    }
    return {l.imag(), l.real()};
  }

  void advance(Complex p0, const Evaluation& e0, Complex p1, const Evaluation& e1, int depth) {
    const double jump = wrap_phase(e1.phase - e0.phase);
    if (std::abs(jump) < kJumpLimit) {
      const double prev = trace_.samples.back().unwrapped_arg;
      trace_.samples.push_back({p1, prev + jump, e1.log_modulus});
      return;
    }
    if (depth >= path_.max_depth) {
      throw ResolutionError("argument jump not resolved after " + std::to_string(depth) +
                            " halvings near " + point_str(p1) + "; a zero lies on the path");
    }
    ++trace_.refinements;
    const Complex mid = 0.5 * (p0 + p1);
    const Evaluation em = evaluate(mid);
    advance(p0, e0, mid, em, depth + 1);
    advance(mid, em, p1, e1, depth + 1);
  }

  const LogFunction& log_f_;
  const PathSpec& path_;
  double log_guard_;
  ArgTrace trace_;
};

// Sorted, de-duplicated sigma values (descending) and the input->sorted map.
struct LineOrder {
  std::vector<double> descending;
  std::vector<std::size_t> slot;  // slot[i] = index into descending for input i
};

LineOrder order_descending(const std::vector<double>& sigmas) {
  LineOrder o;
  o.descending = sigmas;
  std::sort(o.descending.begin(), o.descending.end(), std::greater<>());
  o.descending.erase(std::unique(o.descending.begin(), o.descending.end()), o.descending.end());
  o.slot.reserve(sigmas.size());
  for (double s : sigmas) {
    const auto it = std::find(o.descending.begin(), o.descending.end(), s);
    o.slot.push_back(static_cast<std::size_t>(it - o.descending.begin()));
  }
  return o;
}

// Continues from `start` (where the argument is `start_arg`) through the
// points sigma + iT in descending sigma; returns args in descending order.
std::vector<double> sweep_line(const LogFunction& log_f, Complex start, double start_arg,
                               double T, const std::vector<double>& descending,
                               double max_step, double zero_guard) {
  std::vector<double> out(descending.size());
  PathSpec path;
  path.vertices.push_back(start);
  std::vector<std::size_t> vertex_of(descending.size());
  for (std::size_t i = 0; i < descending.size(); ++i) {
    const Complex p(descending[i], T);
    if (p != path.vertices.back()) path.vertices.push_back(p);
    vertex_of[i] = path.vertices.size() - 1;
  }
  if (path.vertices.size() == 1) {
    std::fill(out.begin(), out.end(), start_arg);
    return out;
  }
  path.initial_arg = start_arg;
  path.max_step = max_step;
  path.zero_guard = zero_guard;
  const ArgTrace trace = continuous_log_arg(log_f, path);
  for (std::size_t i = 0; i < descending.size(); ++i) out[i] = trace.arg_at_vertex(vertex_of[i]);
  return out;
}

LogFunction log_of(const ComplexFunction& f) {
  return [&f](Complex p) -> Complex {
    const Complex v = f(p);
    if (v == Complex(0.0, 0.0)) return {-std::numeric_limits<double>::infinity(), 0.0};
    return std::log(v);
  };
}

LogFunction log_zeta(const EvalConfig& cfg) {
  return [cfg](Complex s) -> Complex {
    const Complex v = zeta_euler_maclaurin(s, cfg);
    if (v == Complex(0.0, 0.0)) return {-std::numeric_limits<double>::infinity(), 0.0};
    return std::log(v);
  };
}

// arg xi(2 + iT) by tracking normalized xi up the line Re s = 2 from arg 0.
double xi_vertical_leg(double T, const EvalConfig& cfg, const ArgOptions& opts) {
  if (T == 0.0) return 0.0;
  PathSpec path;
  path.vertices = {Complex(2.0, 0.0), Complex(2.0, T)};
  path.max_step = opts.xi_vertical_step;
  path.zero_guard = opts.zero_guard;
  return continuous_log_arg(normalized_xi(cfg), path).final_arg();
}

// arg zeta(2 + iT) is its principal value: |zeta(s) - 1| <= zeta(2) - 1 < 1
// for Re s >= 2, so zeta never leaves the right half-plane on that line.
double zeta_arg_at_two(double T, const EvalConfig& cfg) {
  return std::arg(zeta_euler_maclaurin(Complex(2.0, T), cfg));
}

}  // namespace

void PathSpec::validate() const {
  if (vertices.size() < 2) throw DomainError("PathSpec: need at least two vertices");
  for (std::size_t k = 1; k < vertices.size(); ++k) {
    if (vertices[k] == vertices[k - 1]) {
      throw DomainError("PathSpec: consecutive vertices must be distinct");
    }
  }
  for (const auto& v : vertices) require_finite(v, "PathSpec vertex");
  if (!(max_step > 0.0)) throw DomainError("PathSpec: max_step must be positive");
  if (!(zero_guard > 0.0)) throw DomainError("PathSpec: zero_guard must be positive");
  if (max_depth < 0) throw DomainError("PathSpec: max_depth must be >= 0");
  if (!std::isfinite(initial_arg)) throw DomainError("PathSpec: initial_arg must be finite");
}

ArgTrace continuous_log_arg(const LogFunction& log_f, const PathSpec& path) {
  path.validate();
  return Tracker(log_f, path).run();
}

ArgTrace continuous_arg(const ComplexFunction& f, const PathSpec& path) {
  return continuous_log_arg(log_of(f), path);
}

void ensure_not_ordinate(double T, const EvalConfig& cfg, double guard) {
  if (!(guard > 0.0)) return;
  const double lo = T - guard;
  const double hi = T + guard;
  double z_lo = hardy_z(lo, cfg);
  const double z_mid = hardy_z(T, cfg);
  const double z_hi = hardy_z(hi, cfg);
  const auto collide = [&](double gamma) {
    throw OrdinateCollisionError("T = " + std::to_string(T) + " lies within " +
                                     std::to_string(guard) + " of the zero ordinate gamma = " +
                                     std::to_string(gamma),
                                 gamma);
  };
  if (z_mid == 0.0) collide(T);
  if ((z_lo < 0.0) == (z_hi < 0.0) && z_lo != 0.0 && z_hi != 0.0) return;

  double a = lo;
  double b = hi;
  for (int i = 0; i < 60 && b - a > 1e-13; ++i) {
    const double m = 0.5 * (a + b);
    const double z_m = hardy_z(m, cfg);
    if (z_m == 0.0) {
      a = b = m;
      break;
    }
    if ((z_m < 0.0) == (z_lo < 0.0)) {
      a = m;
      z_lo = z_m;
    } else {
      b = m;
    }
  }
  collide(0.5 * (a + b));
}

LogFunction normalized_xi(const EvalConfig& cfg) {
  return [cfg](Complex s) -> Complex {
    const Complex q = zeta_times_s_minus_one(s, cfg);
    if (q == Complex(0.0, 0.0)) return {-std::numeric_limits<double>::infinity(), 0.0};
    const double phase =
        -0.5 * s.imag() * constants::log_pi + log_gamma(1.0 + 0.5 * s).imag() + std::arg(q);
    const double log_mod = std::log(std::abs(q)) - std::log(std::max(1.0, std::abs(s - 1.0)));
    return {log_mod, phase};
  };
}

double arg_zeta_via(double anchor, double sigma, double T, const EvalConfig& cfg,
                    const ArgOptions& opts) {
  if (!(anchor > 1.0)) throw DomainError("arg_zeta_via: anchor must lie on the real axis right of 1");
  PathSpec path;
  path.vertices.push_back(Complex(anchor, 0.0));
  if (T != 0.0) path.vertices.push_back(Complex(anchor, T));
  if (sigma != anchor) path.vertices.push_back(Complex(sigma, T));
  if (path.vertices.size() == 1) return 0.0;
  path.max_step = opts.max_step;
  path.zero_guard = opts.zero_guard;
  return continuous_log_arg(log_zeta(cfg), path).final_arg();
}

double arg_zeta_critical(double T, const EvalConfig& cfg, const ArgOptions& opts) {
  if (!(T > 0.0)) throw DomainError("arg_zeta_critical requires T > 0");
  ensure_not_ordinate(T, cfg, opts.ordinate_guard);
  return arg_zeta_on_line(T, {0.5}, cfg, opts).front();
}

std::vector<double> arg_zeta_on_line(double T, const std::vector<double>& sigmas,
                                     const EvalConfig& cfg, const ArgOptions& opts) {
  for (double s : sigmas) {
    if (!(s <= 2.0)) throw DomainError("arg_zeta_on_line: sigma must be <= 2");
  }
  const LineOrder order = order_descending(sigmas);
  const Complex start(2.0, T);
  const auto args = sweep_line(log_zeta(cfg), start, zeta_arg_at_two(T, cfg), T,
                               order.descending, opts.max_step, opts.zero_guard);
  std::vector<double> out;
  out.reserve(sigmas.size());
  for (std::size_t slot : order.slot) out.push_back(args[slot]);
  return out;
}

double arg_quadratic_factor(double sigma, double T) {
  if (T == 0.0) {
    if (sigma > 1.0 || sigma < 0.0) return 0.0;
    throw DomainError("arg_quadratic_factor: s(s-1) is negative on (0, 1); argument undefined");
  }
  return std::arg(Complex(sigma, T)) + std::arg(Complex(sigma - 1.0, T));
}

std::vector<double> arg_xi_on_line(double T, const std::vector<double>& sigmas,
                                   const EvalConfig& cfg, const ArgOptions& opts) {
  for (double s : sigmas) {
    if (!(s <= 2.0)) throw DomainError("arg_xi_on_line: sigma must be <= 2");
  }
  const LineOrder order = order_descending(sigmas);
  const double vertical = xi_vertical_leg(T, cfg, opts);
  const auto args = sweep_line(normalized_xi(cfg), Complex(2.0, T), vertical, T, order.descending,
                               opts.max_step, opts.zero_guard);
  std::vector<double> out;
  out.reserve(sigmas.size());
  for (std::size_t slot : order.slot) out.push_back(args[slot]);
  return out;
}

XiArgument arg_xi_at(double sigma, double T, const EvalConfig& cfg, const ArgOptions& opts) {
  if (T == 0.0) return {0.0, 0.0};
  XiArgument result;
  result.direct = arg_xi_on_line(T, {sigma}, cfg, opts).front();

  const Complex s(sigma, T);
  const double zeta_arg = arg_zeta_on_line(T, {sigma}, cfg, opts).front();
  result.component_sum = arg_quadratic_factor(sigma, T) - 0.5 * T * constants::log_pi +
                         log_gamma(0.5 * s).imag() + zeta_arg;

  if (std::abs(result.direct - result.component_sum) > kRouteAgreement) {
    throw AccuracyError("arg xi routes disagree at " + point_str(s) + ": direct " +
                        std::to_string(result.direct) + " vs components " +
                        std::to_string(result.component_sum));
  }
  return result;
}

}  // namespace lwaudit
