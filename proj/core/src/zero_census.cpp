#include "lwaudit/zero_census.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lwaudit/argument_tracker.hpp"
#include "lwaudit/constants.hpp"
#include "lwaudit/errors.hpp"
#include "lwaudit/parallel.hpp"
#include "lwaudit/special_functions.hpp"

namespace lwaudit {
namespace {

constexpr double kStripLeft = -0.1;
constexpr double kStripRight = 1.1;
constexpr double kStripChunk = 25.0;
constexpr double kWindingSlack = 0.01;
constexpr double kSPlausible = 3.0;

bool negative(double z) { return z < 0.0; }

std::vector<ZeroRecord> dedupe(std::vector<ZeroRecord> zeros, double zero_tol) {
  std::sort(zeros.begin(), zeros.end(),
            [](const ZeroRecord& a, const ZeroRecord& b) { return a.ordinate < b.ordinate; });
  std::vector<ZeroRecord> out;
  out.reserve(zeros.size());
  for (const auto& z : zeros) {
    if (!out.empty() && z.ordinate - out.back().ordinate <= 2.0 * zero_tol) continue;
    out.push_back(z);
  }
  return out;
}

// Polyline pieces of the counterclockwise strip rectangle; each vertical side
// is cut into chunks so the pieces can be tracked independently.
std::vector<std::vector<Complex>> strip_pieces(double T) {
  std::vector<std::vector<Complex>> pieces;
  pieces.push_back({Complex(kStripLeft, 0.0), Complex(kStripRight, 0.0)});
  const auto chunks = static_cast<long>(std::ceil(T / kStripChunk));
  for (long k = 0; k < chunks; ++k) {
    const double t0 = T * static_cast<double>(k) / static_cast<double>(chunks);
    const double t1 = T * static_cast<double>(k + 1) / static_cast<double>(chunks);
    pieces.push_back({Complex(kStripRight, t0), Complex(kStripRight, t1)});
  }
  pieces.push_back({Complex(kStripRight, T), Complex(kStripLeft, T)});
  for (long k = chunks; k > 0; --k) {
    const double t1 = T * static_cast<double>(k) / static_cast<double>(chunks);
    const double t0 = T * static_cast<double>(k - 1) / static_cast<double>(chunks);
    pieces.push_back({Complex(kStripLeft, t1), Complex(kStripLeft, t0)});
  }
  return pieces;
}

}  // namespace

void CensusOptions::validate() const {
  eval.validate();
  if (!(zero_tol > 0.0)) throw ConfigError("CensusOptions: zero_tol must be positive");
  if (!(residual_tol > 0.0)) throw ConfigError("CensusOptions: residual_tol must be positive");
  if (!(ordinate_guard >= 0.0)) throw ConfigError("CensusOptions: ordinate_guard must be >= 0");
  if (!(scan_step >= 0.0)) throw ConfigError("CensusOptions: scan_step must be >= 0");
  if (max_rescans < 0) throw ConfigError("CensusOptions: max_rescans must be >= 0");
  if (!(track_step > 0.0)) throw ConfigError("CensusOptions: track_step must be positive");
}

double default_scan_step(double t_hi) {
  const double x = std::max(t_hi / constants::two_pi, std::exp(1.0));
  return std::min(0.25, constants::two_pi / std::log(x) / 4.0);
}

std::vector<Bracket> scan_sign_changes(double t_lo, double t_hi, double step,
                                       const EvalConfig& cfg, unsigned threads) {
  if (!(t_lo >= 0.0) || !(t_lo < t_hi)) {
    throw DomainError("scan_sign_changes requires 0 <= t_lo < t_hi");
  }
  if (!(step > 0.0)) step = default_scan_step(t_hi);
  const auto cells = static_cast<std::size_t>(std::ceil((t_hi - t_lo) / step));
  const auto grid_at = [&](std::size_t k) {
    return k >= cells ? t_hi : t_lo + static_cast<double>(k) * step;
  };
  const auto values = parallel_map<double>(cells + 1, threads,
                                           [&](std::size_t k) { return hardy_z(grid_at(k), cfg); });
  std::vector<Bracket> out;
  for (std::size_t k = 0; k < cells; ++k) {
    if (negative(values[k]) != negative(values[k + 1]) || values[k + 1] == 0.0) {
      out.push_back({grid_at(k), grid_at(k + 1)});
    }
  }
  return out;
}

ZeroRecord refine_zero(Bracket bracket, double zero_tol, const EvalConfig& cfg,
                       double residual_tol) {
  if (!(zero_tol > 0.0)) throw DomainError("refine_zero: zero_tol must be positive");
  if (!(bracket.lo < bracket.hi)) throw InvalidBracketError("refine_zero: need lo < hi");
  double lo = bracket.lo;
  double hi = bracket.hi;
  double z_lo = hardy_z(lo, cfg);
  const double z_hi = hardy_z(hi, cfg);
  if (z_lo != 0.0 && z_hi != 0.0 && negative(z_lo) == negative(z_hi)) {
    throw InvalidBracketError("refine_zero: Z has the same sign at t = " + std::to_string(lo) +
                              " and t = " + std::to_string(hi));
  }
  if (z_lo == 0.0) {
    hi = lo + 0.5 * zero_tol;
    lo -= 0.5 * zero_tol;
  } else if (z_hi == 0.0) {
    lo = hi - 0.5 * zero_tol;
    hi += 0.5 * zero_tol;
  }
  while (hi - lo > zero_tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double z_mid = hardy_z(mid, cfg);
    if (z_mid == 0.0) {
      lo = mid - 0.25 * zero_tol;
      hi = mid + 0.25 * zero_tol;
      break;
    }
    if (negative(z_mid) == negative(z_lo)) {
      lo = mid;
      z_lo = z_mid;
    } else {
      hi = mid;
    }
  }
  ZeroRecord rec;
  rec.bracket_lo = lo;
  rec.bracket_hi = hi;
  rec.ordinate = 0.5 * (lo + hi);
  rec.residual = std::abs(hardy_z(rec.ordinate, cfg));
  if (rec.residual > residual_tol) {
    throw AccuracyError("refine_zero: residual " + std::to_string(rec.residual) + " at gamma = " +
                        std::to_string(rec.ordinate) + " exceeds residual_tol");
  }
  return rec;
}

double mangoldt_main_term(double T) {
  if (!(T > 0.0)) throw DomainError("mangoldt_main_term requires T > 0");
  const double x = T / constants::two_pi;
  return x * std::log(x) - x + 7.0 / 8.0;
}

MangoldtCount n_mangoldt(double T, const EvalConfig& cfg, double ordinate_guard) {
  MangoldtCount m;
  m.main_term = mangoldt_main_term(T);
  ArgOptions arg_opts;
  arg_opts.ordinate_guard = ordinate_guard;
  m.s_of_T = arg_zeta_critical(T, cfg, arg_opts) / constants::pi;
  m.with_s = m.main_term + m.s_of_T;
  return m;
}

LineCount count_on_line(double T, const CensusOptions& opts) {
  opts.validate();
  if (!(T > 0.0)) throw DomainError("count_on_line requires T > 0");
  const MangoldtCount m = n_mangoldt(T, opts.eval, opts.ordinate_guard);

  LineCount out;
  out.expected = std::max(0, static_cast<int>(std::lround(m.with_s)));
  out.step_used = opts.scan_step > 0.0 ? opts.scan_step : default_scan_step(T);
  std::vector<Bracket> brackets = scan_sign_changes(0.0, T, out.step_used, opts.eval, opts.threads);
  while (static_cast<int>(brackets.size()) < out.expected && out.rescans < opts.max_rescans) {
    out.step_used /= 4.0;
    ++out.rescans;
    brackets = scan_sign_changes(0.0, T, out.step_used, opts.eval, opts.threads);
  }

  auto zeros = parallel_map<ZeroRecord>(brackets.size(), opts.threads, [&](std::size_t i) {
    return refine_zero(brackets[i], opts.zero_tol, opts.eval, opts.residual_tol);
  });
  out.zeros = dedupe(std::move(zeros), opts.zero_tol);
  out.n0 = static_cast<int>(out.zeros.size());
  out.complete = out.n0 == out.expected;
  if (out.n0 < out.expected) {
    out.flags.push_back("census: " + std::to_string(out.expected - out.n0) +
                        " zero(s) below T missing from the sign-change scan");
  } else if (out.n0 > out.expected) {
    out.flags.push_back("census: " + std::to_string(out.n0) + " sign changes exceed the " +
                        "von Mangoldt count " + std::to_string(out.expected));
  }
  return out;
}

int count_in_strip(double T, const CensusOptions& opts) {
  opts.validate();
  if (!(T > 0.0)) throw DomainError("count_in_strip requires T > 0");
  try {
    ensure_not_ordinate(T, opts.eval, opts.ordinate_guard);
  } catch (const OrdinateCollisionError& e) {
    throw OnPathZeroError(std::string("strip contour passes through a zero: ") + e.what(), 0.5,
                          e.gamma());
  }

  const auto pieces = strip_pieces(T);
  const LogFunction f = normalized_xi(opts.eval);
  const auto changes = parallel_map<double>(pieces.size(), opts.threads, [&](std::size_t i) {
    PathSpec path;
    path.vertices = pieces[i];
    path.max_step = opts.track_step;
    return continuous_log_arg(f, path).final_arg();
  });
  double total = 0.0;
  for (double c : changes) total += c;
  const double winding = total / constants::two_pi;
  const double rounded = std::round(winding);
  if (std::abs(winding - rounded) > kWindingSlack) {
    throw AccuracyError("count_in_strip: winding " + std::to_string(winding) +
                        " is not an integer");
  }
  return static_cast<int>(rounded);
}

CensusReport ratio_report(double T, const CensusOptions& opts) {
  opts.validate();
  ensure_not_ordinate(T, opts.eval, opts.ordinate_guard);
  if (!(T > 20.0)) throw DomainError("ratio_report requires T > 20");
  return ratio_report(T, opts, count_on_line(T, opts));
}

CensusReport ratio_report(double T, const CensusOptions& opts, const LineCount& line) {
  if (!(T > 20.0)) throw DomainError("ratio_report requires T > 20");
  CensusReport r;
  r.T = T;
  r.n0 = line.n0;
  r.n_argument_principle = count_in_strip(T, opts);
  const MangoldtCount m = n_mangoldt(T, opts.eval, opts.ordinate_guard);
  r.n_mangoldt_main = m.main_term;
  r.n_mangoldt_real = m.with_s;
  r.s_of_T = m.s_of_T;
  r.ratio = r.n_argument_principle > 0
                ? static_cast<double>(r.n0) / static_cast<double>(r.n_argument_principle)
                : 0.0;
  r.theorem_bound_product = std::abs(r.ratio - 1.0) * T * std::log(T);

  r.flags = line.flags;
  if (r.n0 != r.n_argument_principle) {
    r.flags.push_back("N0 = " + std::to_string(r.n0) + " differs from strip count " +
                      std::to_string(r.n_argument_principle));
  }
  if (std::abs(r.n_mangoldt_real - r.n_argument_principle) >= 0.5) {
    r.flags.push_back("von Mangoldt value " + std::to_string(r.n_mangoldt_real) +
                      " is not within 0.5 of strip count " +
                      std::to_string(r.n_argument_principle));
  }
  if (r.n0 > r.n_argument_principle) {
    r.flags.push_back("more critical-line zeros than strip zeros");
  }
  if (std::abs(r.s_of_T) >= kSPlausible) {
    r.flags.push_back("|S(T)| = " + std::to_string(std::abs(r.s_of_T)) + " >= 3");
  }
  return r;
}

}  // namespace lwaudit
