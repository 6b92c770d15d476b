#include "lwaudit/report/run_config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include <fmt/format.h>

#include "lwaudit/errors.hpp"

namespace lwaudit::report {
namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

double parse_double(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty()) {
    throw ConfigError("config: '" + key + "' expects a number, got '" + text + "'");
  }
  return v;
}

long parse_long(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  long v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty()) {
    throw ConfigError("config: '" + key + "' expects an integer, got '" + text + "'");
  }
  return v;
}

struct Field {
  std::function<void(RunConfig&, const std::string&, const std::string&)> set;
  std::function<std::string(const RunConfig&)> get;
  bool echoed = true;
};

template <class M>
Field real_field(M RunConfig::*member) {
  return {[member](RunConfig& c, const std::string& k, const std::string& v) {
            c.*member = parse_double(k, v);
          },
          [member](const RunConfig& c) { return format_short(c.*member); }};
}

template <class M>
Field int_field(M RunConfig::*member) {
  return {[member](RunConfig& c, const std::string& k, const std::string& v) {
            const long x = parse_long(k, v);
            if (x < 0) throw ConfigError("config: '" + k + "' must be non-negative");
            c.*member = static_cast<M>(x);
          },
          [member](const RunConfig& c) { return std::to_string(c.*member); }};
}

Field list_field(std::vector<double> RunConfig::*member) {
  return {[member](RunConfig& c, const std::string&, const std::string& v) {
            c.*member = parse_list(v);
          },
          [member](const RunConfig& c) { return join_list(c.*member); }};
}

Field string_field(std::string RunConfig::*member, bool echoed) {
  return {[member](RunConfig& c, const std::string&, const std::string& v) { c.*member = trim(v); },
          [member](const RunConfig& c) { return c.*member; }, echoed};
}

const std::map<std::string, Field>& fields() {
  static const std::map<std::string, Field> table = [] {
    std::map<std::string, Field> m;
    m["T"] = real_field(&RunConfig::T);
    m["t_max"] = real_field(&RunConfig::t_max);
    m["alpha"] = real_field(&RunConfig::alpha);
    m["alphas"] = list_field(&RunConfig::alphas);
    m["Ts"] = list_field(&RunConfig::Ts);
    m["kind"] = string_field(&RunConfig::kind, true);
    m["t_from"] = real_field(&RunConfig::t_from);
    m["t_to"] = real_field(&RunConfig::t_to);
    m["t_step"] = real_field(&RunConfig::t_step);
    m["abs_tol"] = real_field(&RunConfig::abs_tol);
    m["em_cutoff"] = int_field(&RunConfig::em_cutoff);
    m["em_bernoulli_terms"] = int_field(&RunConfig::em_bernoulli_terms);
    m["zero_tol"] = real_field(&RunConfig::zero_tol);
    m["residual_tol"] = real_field(&RunConfig::residual_tol);
    m["ordinate_guard"] = real_field(&RunConfig::ordinate_guard);
    m["scan_step"] = real_field(&RunConfig::scan_step);
    m["quadrature_tol"] = real_field(&RunConfig::quadrature_tol);
    m["identity_tol"] = real_field(&RunConfig::identity_tol);
    m["vertical_tol"] = real_field(&RunConfig::vertical_tol);
    m["asymptotic_tol"] = real_field(&RunConfig::asymptotic_tol);
    m["threads"] = int_field(&RunConfig::threads);
    m["threads"].echoed = false;
    m["out"] = string_field(&RunConfig::out, false);
    m["timestamp"] = string_field(&RunConfig::timestamp, false);
    return m;
  }();
  return table;
}

void require_positive(const char* name, double v) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw ConfigError(fmt::format("config: {} must be positive, got {}", name, v));
  }
}

void require_alpha(double a) {
  if (!(a > 0.0 && a < 0.5)) {
    throw ConfigError(fmt::format("config: alpha must lie in (0, 1/2), got {}", a));
  }
}

}  // namespace

std::string format_double(double v) { return fmt::format("{:.17g}", v); }

std::string format_short(double v) { return fmt::format("{}", v); }

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (trim(item).empty()) continue;
    out.push_back(parse_double("list", item));
  }
  return out;
}

std::string join_list(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += format_short(values[i]);
  }
  return out;
}

void RunConfig::validate() const {
  require_positive("T", T);
  require_positive("t_max", t_max);
  require_alpha(alpha);
  for (double a : alphas) require_alpha(a);
  std::set<double> seen;
  for (double t : Ts) {
    require_positive("Ts entry", t);
    if (!seen.insert(t).second) {
      throw ConfigError(fmt::format("config: Ts contains {} twice", t));
    }
  }
  if (!std::isfinite(t_from) || !std::isfinite(t_to) || t_to < t_from) {
    throw ConfigError("config: need t_from <= t_to");
  }
  require_positive("t_step", t_step);
  if (abs_tol != 0.0) require_positive("abs_tol", abs_tol);
  if (em_cutoff < 1 || em_bernoulli_terms < 1) {
    throw ConfigError("config: em_cutoff and em_bernoulli_terms must be >= 1");
  }
  require_positive("zero_tol", zero_tol);
  require_positive("residual_tol", residual_tol);
  require_positive("ordinate_guard", ordinate_guard);
  if (scan_step != 0.0) require_positive("scan_step", scan_step);
  require_positive("quadrature_tol", quadrature_tol);
  require_positive("identity_tol", identity_tol);
  require_positive("vertical_tol", vertical_tol);
  require_positive("asymptotic_tol", asymptotic_tol);
}

EvalConfig RunConfig::eval_for(double height) const {
  EvalConfig cfg = EvalConfig::for_height(height);
  if (abs_tol != 0.0) cfg.abs_tol = abs_tol;
  cfg.em_cutoff = em_cutoff;
  cfg.em_bernoulli_terms = em_bernoulli_terms;
  cfg.validate();
  return cfg;
}

CensusOptions RunConfig::census_options(double height) const {
  CensusOptions o;
  o.eval = eval_for(height);
  o.zero_tol = zero_tol;
  o.residual_tol = residual_tol;
  o.ordinate_guard = ordinate_guard;
  o.scan_step = scan_step;
  o.threads = threads;
  o.validate();
  return o;
}

AuditOptions RunConfig::audit_options(double height) const {
  AuditOptions o;
  o.eval = eval_for(height);
  o.quadrature_tol = quadrature_tol;
  o.identity_tol = identity_tol;
  o.vertical_tol = vertical_tol;
  o.asymptotic_tol = asymptotic_tol;
  o.ordinate_guard = ordinate_guard;
  o.threads = threads;
  o.validate();
  return o;
}

std::map<std::string, std::string> RunConfig::echo() const {
  std::map<std::string, std::string> out;
  for (const auto& [key, field] : fields()) {
    if (field.echoed) out[key] = field.get(*this);
  }
  return out;
}

void RunConfig::set(const std::string& key, const std::string& value) {
  const auto it = fields().find(key);
  if (it == fields().end()) throw ConfigError("config: unknown key '" + key + "'");
  it->second.set(*this, key, value);
}

std::optional<std::string> RunConfig::get(const std::string& key) const {
  const auto it = fields().find(key);
  if (it == fields().end()) return std::nullopt;
  return it->second.get(*this);
}

const std::vector<std::string>& RunConfig::keys() {
  static const std::vector<std::string> all = [] {
    std::vector<std::string> k;
    for (const auto& [key, field] : fields()) k.push_back(key);
    return k;
  }();
  return all;
}

std::string RunConfig::to_file_text() const {
  std::string out;
  for (const auto& [key, field] : fields()) {
    out += key + " = " + field.get(*this) + "\n";
  }
  return out;
}

RunConfig RunConfig::from_file_text(const std::string& text, RunConfig base) {
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(fmt::format("config line {}: expected key = value", lineno));
    }
    base.set(trim(line.substr(0, eq)), line.substr(eq + 1));
  }
  return base;
}

RunConfig RunConfig::from_file_text(const std::string& text) {
  return from_file_text(text, RunConfig{});
}

RunConfig RunConfig::load_file(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return from_file_text(buf.str(), std::move(base));
}

void RunConfig::apply_environment() {
  for (const auto& key : keys()) {
    std::string name = "LWAUDIT_";
    for (char c : key) name += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (const char* v = std::getenv(name.c_str())) set(key, v);
  }
}

}  // namespace lwaudit::report
