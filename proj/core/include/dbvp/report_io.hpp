#pragma once

#include "dbvp/analysis.hpp"
#include "dbvp/emden.hpp"
#include "dbvp/solver.hpp"

#include <nlohmann/json_fwd.hpp>
#include <string>

namespace dbvp {

/// Round-trip-safe decimal rendering: '.' decimal point, 17 significant digits.
std::string format_real(double v);

nlohmann::json solve_report_to_json(const SolveReport& rep);
nlohmann::json assumption_report_to_json(const AssumptionReport& rep);
nlohmann::json continuation_report_to_json(const ContinuationReport& rep);

/// Solution CSV: header "k,x" then one row per grid point.
std::string solution_to_csv(const GridFunction& x);

/// Sweep CSV: header "n,sup_distance,objective,residual_inf_norm,distance_to_limit".
std::string continuation_to_csv(const ContinuationReport& rep);

/// Spectrum CSV: header "lambda_min,lambda_max,positive_definite".
std::string spectrum_to_csv(const StructuralMatrices& sm);

/// Oracle-vs-solver CSV: one data row.
std::string oracle_comparison_to_csv(const SolveReport& solver_rep,
                                     const SolveReport& oracle_rep);

void write_text_file(const std::string& path, const std::string& content);

} // namespace dbvp
