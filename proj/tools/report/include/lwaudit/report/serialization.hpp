#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "lwaudit/littlewood_auditor.hpp"
#include "lwaudit/zero_census.hpp"

namespace lwaudit {

void to_json(nlohmann::json& j, const CensusReport& r);
void from_json(const nlohmann::json& j, CensusReport& r);
void to_json(nlohmann::json& j, const TermEstimate& e);
void from_json(const nlohmann::json& j, TermEstimate& e);
void to_json(nlohmann::json& j, const SigmaTerms& s);
void from_json(const nlohmann::json& j, SigmaTerms& s);
void to_json(nlohmann::json& j, const TermBreakdown& b);
void from_json(const nlohmann::json& j, TermBreakdown& b);
void to_json(nlohmann::json& j, const LittlewoodReport& r);
void from_json(const nlohmann::json& j, LittlewoodReport& r);

}  // namespace lwaudit

namespace lwaudit::report {

struct SweepRow {
  double alpha = 0.0;
  double T = 0.0;
  int n0 = 0;
  int n_strip = 0;
  double lhs = 0.0;
  double rhs_vertical = 0.0;
  double rhs_horizontal = 0.0;
  double rhs_total = 0.0;
  double arg_xi_integral = 0.0;
  double asymptotic_rhs = 0.0;
  double n_mangoldt = 0.0;
  double residual_identity = 0.0;
  double residual_asymptotic = 0.0;
  int residual_theorem = 0;
  bool pass = false;
  std::string error;  // empty when the cell succeeded

  bool ok() const { return error.empty(); }
  bool operator==(const SweepRow&) const = default;
};

struct TrendRow {
  double alpha = 0.0;
  double T_from = 0.0;
  double T_to = 0.0;
  double delta = 0.0;  // residual_asymptotic(T_to) - residual_asymptotic(T_from)
  bool operator==(const TrendRow&) const = default;
};

struct SweepTable {
  std::vector<SweepRow> rows;

  // First differences over consecutive successful T at each alpha, in row order.
  std::vector<TrendRow> trend() const;
  bool operator==(const SweepTable&) const = default;
};

void to_json(nlohmann::json& j, const SweepRow& r);
void from_json(const nlohmann::json& j, SweepRow& r);
void to_json(nlohmann::json& j, const SweepTable& t);
void from_json(const nlohmann::json& j, SweepTable& t);

using Payload = std::variant<CensusReport, LittlewoodReport, SweepTable>;

struct ReportEnvelope {
  std::string tool = "lwaudit";
  std::string tool_version;
  std::string command;
  std::string timestamp;
  std::map<std::string, std::string> config;
  Payload payload;
  std::vector<std::string> flags;

  bool operator==(const ReportEnvelope&) const = default;
};

nlohmann::json to_json_value(const ReportEnvelope& env);
ReportEnvelope envelope_from_json(const nlohmann::json& j);

std::string dump(const ReportEnvelope& env);
ReportEnvelope parse_envelope(const std::string& text);

// Census JSON payload: T, n0, n_strip, n_mangoldt, s_of_T, ratio,
// theorem_bound_product, n_mangoldt_main, flags.
std::string zeros_csv(const std::vector<ZeroRecord>& zeros);
std::string sweep_csv(const SweepTable& table);

}  // namespace lwaudit::report
