#include "lwaudit/report/serialization.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "lwaudit/errors.hpp"
#include "lwaudit/report/run_config.hpp"

using nlohmann::json;

namespace lwaudit {

void to_json(json& j, const CensusReport& r) {
  j = json{{"T", r.T},
           {"n0", r.n0},
           {"n_strip", r.n_argument_principle},
           {"n_mangoldt", r.n_mangoldt_real},
           {"n_mangoldt_main", r.n_mangoldt_main},
           {"s_of_T", r.s_of_T},
           {"ratio", r.ratio},
           {"theorem_bound_product", r.theorem_bound_product},
           {"flags", r.flags}};
}

void from_json(const json& j, CensusReport& r) {
  j.at("T").get_to(r.T);
  j.at("n0").get_to(r.n0);
  j.at("n_strip").get_to(r.n_argument_principle);
  j.at("n_mangoldt").get_to(r.n_mangoldt_real);
  j.at("n_mangoldt_main").get_to(r.n_mangoldt_main);
  j.at("s_of_T").get_to(r.s_of_T);
  j.at("ratio").get_to(r.ratio);
  j.at("theorem_bound_product").get_to(r.theorem_bound_product);
  j.at("flags").get_to(r.flags);
}

void to_json(json& j, const TermEstimate& e) {
  j = json{{"exact", e.exact}, {"predicted", e.predicted}, {"abs_error", e.abs_error}};
}

void from_json(const json& j, TermEstimate& e) {
  j.at("exact").get_to(e.exact);
  j.at("predicted").get_to(e.predicted);
  j.at("abs_error").get_to(e.abs_error);
}

void to_json(json& j, const SigmaTerms& s) {
  j = json{{"sigma", s.sigma},
           {"arg_quadratic", s.arg_quadratic},
           {"arg_pi_power", s.arg_pi_power},
           {"arg_gamma", s.arg_gamma},
           {"arg_zeta", s.arg_zeta}};
}

void from_json(const json& j, SigmaTerms& s) {
  j.at("sigma").get_to(s.sigma);
  j.at("arg_quadratic").get_to(s.arg_quadratic);
  j.at("arg_pi_power").get_to(s.arg_pi_power);
  j.at("arg_gamma").get_to(s.arg_gamma);
  j.at("arg_zeta").get_to(s.arg_zeta);
}

void to_json(json& j, const TermBreakdown& b) {
  j = json{{"samples", b.samples},
           {"arg_quadratic", b.arg_quadratic},
           {"arg_pi_power", b.arg_pi_power},
           {"arg_gamma", b.arg_gamma},
           {"arg_zeta_integral", b.arg_zeta_integral},
           {"c_sigma_integral", b.c_sigma_integral},
           {"c_sigma_polynomial", b.c_sigma_polynomial},
           {"log_skip", b.log_skip},
           {"arctan_difference", b.arctan_difference},
           {"assembled_rhs", b.assembled_rhs}};
}

void from_json(const json& j, TermBreakdown& b) {
  j.at("samples").get_to(b.samples);
  j.at("arg_quadratic").get_to(b.arg_quadratic);
  j.at("arg_pi_power").get_to(b.arg_pi_power);
  j.at("arg_gamma").get_to(b.arg_gamma);
  j.at("arg_zeta_integral").get_to(b.arg_zeta_integral);
  j.at("c_sigma_integral").get_to(b.c_sigma_integral);
  j.at("c_sigma_polynomial").get_to(b.c_sigma_polynomial);
  j.at("log_skip").get_to(b.log_skip);
  j.at("arctan_difference").get_to(b.arctan_difference);
  j.at("assembled_rhs").get_to(b.assembled_rhs);
}

void to_json(json& j, const LittlewoodReport& r) {
  j = json{{"alpha", r.rectangle.alpha},
           {"T", r.rectangle.T},
           {"n0", r.n0},
           {"n_of_T", r.n_of_T},
           {"lhs_sum_distances", r.lhs_sum_distances},
           {"rhs_vertical", r.rhs_vertical},
           {"rhs_horizontal", r.rhs_horizontal},
           {"rhs_horizontal_reduced", r.rhs_horizontal_reduced},
           {"rhs_total", r.rhs_total},
           {"arg_xi_integral", r.arg_xi_integral},
           {"asymptotic_rhs", r.asymptotic_rhs},
           {"n_mangoldt_with_s", r.n_mangoldt_with_s},
           {"s_of_T", r.s_of_T},
           {"residual_identity", r.residual_identity},
           {"residual_asymptotic", r.residual_asymptotic},
           {"residual_theorem", r.residual_theorem},
           {"vertical_asymmetry", r.vertical_asymmetry},
           {"quadrature_error", r.quadrature_error},
           {"identity_pass", r.identity_pass},
           {"vertical_pass", r.vertical_pass},
           {"asymptotic_pass", r.asymptotic_pass},
           {"theorem_pass", r.theorem_pass},
           {"breakdown", r.breakdown},
           {"flags", r.flags}};
}

void from_json(const json& j, LittlewoodReport& r) {
  j.at("alpha").get_to(r.rectangle.alpha);
  j.at("T").get_to(r.rectangle.T);
  j.at("n0").get_to(r.n0);
  j.at("n_of_T").get_to(r.n_of_T);
  j.at("lhs_sum_distances").get_to(r.lhs_sum_distances);
  j.at("rhs_vertical").get_to(r.rhs_vertical);
  j.at("rhs_horizontal").get_to(r.rhs_horizontal);
  j.at("rhs_horizontal_reduced").get_to(r.rhs_horizontal_reduced);
  j.at("rhs_total").get_to(r.rhs_total);
  j.at("arg_xi_integral").get_to(r.arg_xi_integral);
  j.at("asymptotic_rhs").get_to(r.asymptotic_rhs);
  j.at("n_mangoldt_with_s").get_to(r.n_mangoldt_with_s);
  j.at("s_of_T").get_to(r.s_of_T);
  j.at("residual_identity").get_to(r.residual_identity);
  j.at("residual_asymptotic").get_to(r.residual_asymptotic);
  j.at("residual_theorem").get_to(r.residual_theorem);
  j.at("vertical_asymmetry").get_to(r.vertical_asymmetry);
  j.at("quadrature_error").get_to(r.quadrature_error);
  j.at("identity_pass").get_to(r.identity_pass);
  j.at("vertical_pass").get_to(r.vertical_pass);
  j.at("asymptotic_pass").get_to(r.asymptotic_pass);
  j.at("theorem_pass").get_to(r.theorem_pass);
  j.at("breakdown").get_to(r.breakdown);
  j.at("flags").get_to(r.flags);
}

}  // namespace lwaudit

namespace lwaudit::report {

std::vector<TrendRow> SweepTable::trend() const {
  std::vector<double> alphas;
  for (const auto& r : rows) {
    if (std::find(alphas.begin(), alphas.end(), r.alpha) == alphas.end()) alphas.push_back(r.alpha);
  }
  std::vector<TrendRow> out;
  for (double a : alphas) {
    const SweepRow* prev = nullptr;
    for (const auto& r : rows) {
      if (r.alpha != a || !r.ok()) continue;
      if (prev) out.push_back({a, prev->T, r.T, r.residual_asymptotic - prev->residual_asymptotic});
      prev = &r;
    }
  }
  return out;
}

void to_json(json& j, const SweepRow& r) {
  j = json{{"alpha", r.alpha},
           {"T", r.T},
           {"n0", r.n0},
           {"n_strip", r.n_strip},
           {"lhs", r.lhs},
           {"rhs_vertical", r.rhs_vertical},
           {"rhs_horizontal", r.rhs_horizontal},
           {"rhs_total", r.rhs_total},
           {"arg_xi_integral", r.arg_xi_integral},
           {"asymptotic_rhs", r.asymptotic_rhs},
           {"n_mangoldt", r.n_mangoldt},
           {"residual_identity", r.residual_identity},
           {"residual_asymptotic", r.residual_asymptotic},
           {"residual_theorem", r.residual_theorem},
           {"pass", r.pass},
           {"error", r.error}};
}

void from_json(const json& j, SweepRow& r) {
  j.at("alpha").get_to(r.alpha);
  j.at("T").get_to(r.T);
  j.at("n0").get_to(r.n0);
  j.at("n_strip").get_to(r.n_strip);
  j.at("lhs").get_to(r.lhs);
  j.at("rhs_vertical").get_to(r.rhs_vertical);
  j.at("rhs_horizontal").get_to(r.rhs_horizontal);
  j.at("rhs_total").get_to(r.rhs_total);
  j.at("arg_xi_integral").get_to(r.arg_xi_integral);
  j.at("asymptotic_rhs").get_to(r.asymptotic_rhs);
  j.at("n_mangoldt").get_to(r.n_mangoldt);
  j.at("residual_identity").get_to(r.residual_identity);
  j.at("residual_asymptotic").get_to(r.residual_asymptotic);
  j.at("residual_theorem").get_to(r.residual_theorem);
  j.at("pass").get_to(r.pass);
  j.at("error").get_to(r.error);
}

void to_json(json& j, const SweepTable& t) { j = json{{"rows", t.rows}}; }

void from_json(const json& j, SweepTable& t) { j.at("rows").get_to(t.rows); }

json to_json_value(const ReportEnvelope& env) {
  json payload;
  std::string type;
  std::visit(
      [&](const auto& p) {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, CensusReport>) type = "census";
        if constexpr (std::is_same_v<P, LittlewoodReport>) type = "audit";
        if constexpr (std::is_same_v<P, SweepTable>) type = "sweep";
        payload = p;
      },
      env.payload);
  return json{{"tool", env.tool},
              {"tool_version", env.tool_version},
              {"command", env.command},
              {"timestamp", env.timestamp},
              {"config", env.config},
              {"payload_type", type},
              {"payload", payload},
              {"flags", env.flags}};
}

ReportEnvelope envelope_from_json(const json& j) {
  ReportEnvelope env;
  j.at("tool").get_to(env.tool);
  j.at("tool_version").get_to(env.tool_version);
  j.at("command").get_to(env.command);
  j.at("timestamp").get_to(env.timestamp);
  j.at("config").get_to(env.config);
  j.at("flags").get_to(env.flags);
  const auto type = j.at("payload_type").get<std::string>();
  const auto& p = j.at("payload");
  if (type == "census") {
    env.payload = p.get<CensusReport>();
  } else if (type == "audit") {
    env.payload = p.get<LittlewoodReport>();
  } else if (type == "sweep") {
    env.payload = p.get<SweepTable>();
  } else {
    throw ConfigError("envelope: unknown payload_type '" + type + "'");
  }
  return env;
}

std::string dump(const ReportEnvelope& env) { return to_json_value(env).dump(2) + "\n"; }

ReportEnvelope parse_envelope(const std::string& text) {
  try {
    return envelope_from_json(json::parse(text));
  } catch (const json::exception& e) {
    throw ConfigError(std::string("envelope: ") + e.what());
  }
}

std::string zeros_csv(const std::vector<ZeroRecord>& zeros) {
  std::string out = "index,gamma,bracket_lo,bracket_hi,residual\n";
  for (std::size_t i = 0; i < zeros.size(); ++i) {
    const auto& z = zeros[i];
    out += fmt::format("{},{},{},{},{}\n", i + 1, format_double(z.ordinate),
                       format_double(z.bracket_lo), format_double(z.bracket_hi),
                       format_double(z.residual));
  }
  return out;
}

std::string sweep_csv(const SweepTable& table) {
  std::string out =
      "alpha,T,n0,n_strip,lhs,rhs_vertical,rhs_horizontal,rhs_total,arg_xi_integral,"
      "asymptotic_rhs,n_mangoldt,residual_identity,residual_asymptotic,residual_theorem,"
      "pass,error\n";
  for (const auto& r : table.rows) {
    out += format_double(r.alpha) + "," + format_double(r.T) + ",";
    if (r.ok()) {
      out += fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{},", r.n0, r.n_strip,
                         format_double(r.lhs), format_double(r.rhs_vertical),
                         format_double(r.rhs_horizontal), format_double(r.rhs_total),
                         format_double(r.arg_xi_integral), format_double(r.asymptotic_rhs),
                         format_double(r.n_mangoldt), format_double(r.residual_identity),
                         format_double(r.residual_asymptotic), r.residual_theorem,
                         r.pass ? 1 : 0);
    } else {
      out += ",,,,,,,,,,,,,";
    }
    std::string err = r.error;
    for (char& c : err) {
      if (c == ',' || c == '\n' || c == '"') c = ';';
    }
    out += err + "\n";
  }
  out += "\n# trend: first differences of residual_asymptotic over T at fixed alpha\n";
  out += "alpha,T_from,T_to,delta_residual_asymptotic\n";
  for (const auto& t : table.trend()) {
    out += fmt::format("{},{},{},{}\n", format_double(t.alpha), format_double(t.T_from),
                       format_double(t.T_to), format_double(t.delta));
  }
  return out;
}

}  // namespace lwaudit::report
