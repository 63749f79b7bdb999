#include "dbvp/report_io.hpp"

#include "dbvp/errors.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace dbvp {

using nlohmann::json;

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

json solve_report_to_json(const SolveReport& rep) {
    json doc;
    doc["objective"] = rep.objective;
    doc["residual_inf_norm"] = rep.residual_inf_norm;
    doc["iterations"] = rep.iterations;
    doc["converged"] = rep.converged;
    doc["minimizer"] = std::vector<double>(rep.minimizer.values().begin(),
                                           rep.minimizer.values().end());
    json trace = json::array();
    for (const auto& t : rep.method_trace)
        trace.push_back({{"iteration", t.iteration}, {"objective", t.objective}, {"step", t.step}});
    doc["method_trace"] = trace;
    return doc;
}

json assumption_report_to_json(const AssumptionReport& rep) {
    json entries = json::array();
    for (const auto& e : rep.entries) {
        json witnesses = json::array();
        for (const auto& w : e.witnesses)
            witnesses.push_back({{"k", w.k}, {"y", w.y}, {"u", w.u}, {"value", w.value}});
        entries.push_back({{"id", e.id},
                           {"status", to_string(e.status)},
                           {"witnesses", witnesses},
                           {"notes", e.notes}});
    }
    return json{{"entries", entries}};
}

json continuation_report_to_json(const ContinuationReport& rep) {
    json steps = json::array();
    for (const auto& s : rep.steps)
        steps.push_back({{"n", s.n},
                         {"param_sup_distance", s.param_sup_distance},
                         {"objective", s.solve.objective},
                         {"residual_inf_norm", s.solve.residual_inf_norm},
                         {"converged", s.solve.converged},
                         {"distance_to_limit", s.distance_to_limit},
                         {"limit_objective_at_step", s.limit_objective_at_step}});
    return json{{"steps", steps},
                {"limit", solve_report_to_json(rep.limit_record)},
                {"convergence_observed", rep.convergence_observed},
                {"limit_optimality", rep.limit_optimality},
                {"aborted", rep.aborted}};
}

std::string solution_to_csv(const GridFunction& x) {
    std::ostringstream out;
    out << "k,x\n";
    for (size_t k = 0; k < x.size(); ++k)
        out << k << "," << format_real(x(static_cast<int>(k))) << "\n";
    return out.str();
}

std::string continuation_to_csv(const ContinuationReport& rep) {
    std::ostringstream out;
    out << "n,sup_distance,objective,residual_inf_norm,distance_to_limit\n";
    for (const auto& s : rep.steps)
        out << s.n << "," << format_real(s.param_sup_distance) << ","
            << format_real(s.solve.objective) << ","
            << format_real(s.solve.residual_inf_norm) << ","
            << format_real(s.distance_to_limit) << "\n";
    return out.str();
}

std::string spectrum_to_csv(const StructuralMatrices& sm) {
    std::ostringstream out;
    out << "lambda_min,lambda_max,positive_definite\n";
    out << format_real(sm.lambda_min) << "," << format_real(sm.lambda_max) << ","
        << (sm.lambda_min > 0.0 ? "true" : "false") << "\n";
    return out.str();
}

std::string oracle_comparison_to_csv(const SolveReport& solver_rep,
                                     const SolveReport& oracle_rep) {
    std::ostringstream out;
    out << "solver_objective,oracle_objective,difference,solver_residual,oracle_residual\n";
    out << format_real(solver_rep.objective) << "," << format_real(oracle_rep.objective) << ","
        << format_real(solver_rep.objective - oracle_rep.objective) << ","
        << format_real(solver_rep.residual_inf_norm) << ","
        << format_real(oracle_rep.residual_inf_norm) << "\n";
    return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open output file: " + path);
    out << content;
    if (!out) throw Error("failed writing output file: " + path);
}

} // namespace dbvp
