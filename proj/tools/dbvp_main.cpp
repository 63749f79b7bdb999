// Command-line front end: load a problem file, run solves, sweeps, validators,
// spectrum queries, or the brute-force oracle, and emit CSV/JSON reports.

#include "dbvp/analysis.hpp"
#include "dbvp/emden.hpp"
#include "dbvp/errors.hpp"
#include "dbvp/problem_io.hpp"
#include "dbvp/report_io.hpp"
#include "dbvp/solver.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

namespace {

using dbvp::Problem;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitValidationFailure = 1;
constexpr int kExitNotConverged = 2;
constexpr int kExitIoError = 3;

int problem_horizon(const Problem& prob) {
    return std::visit([](const auto& p) { return p.T; }, prob);
}

double problem_bound(const Problem& prob) {
    return std::visit([](const auto& p) { return p.M_param; }, prob);
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw dbvp::SchemaError("cannot open file: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw dbvp::SchemaError("file '" + path + "': " + e.what());
    }
    return doc;
}

std::vector<double> spread(const json& v, int T, const std::string& field) {
    if (v.is_number()) return std::vector<double>(static_cast<size_t>(T), v.get<double>());
    if (v.is_array()) {
        if (v.size() != static_cast<size_t>(T))
            throw dbvp::SchemaError("sequence spec: field '" + field + "' must have T entries");
        return v.get<std::vector<double>>();
    }
    throw dbvp::SchemaError("sequence spec: field '" + field + "' must be number or array");
}

// "--param" accepts a literal number (constant parameter) or a path to a JSON
// document {"values": [...]}.
dbvp::ParameterFunction parse_param(const std::string& spec, const Problem& prob) {
    const int T = problem_horizon(prob);
    const double M = problem_bound(prob);
    if (spec.empty()) return dbvp::ParameterFunction::constant(T, 0.0, M);
    try {
        size_t pos = 0;
        const double v = std::stod(spec, &pos);
        if (pos == spec.size()) return dbvp::ParameterFunction::constant(T, v, M);
    } catch (const std::exception&) {
        // not a number; treat as a path
    }
    const json doc = load_json(spec);
    if (!doc.contains("values") || !doc.at("values").is_array())
        throw dbvp::SchemaError("parameter file '" + spec + "': missing array field 'values'");
    return dbvp::ParameterFunction(doc.at("values").get<std::vector<double>>(), M);
}

// Sweep sequence spec: {"base": num|[...], "direction": num|[...],
//   "count": int, "schedule": [...] | "harmonic"}.
std::vector<dbvp::ParameterFunction> parse_sequence(const std::string& path, const Problem& prob) {
    const int T = problem_horizon(prob);
    const double M = problem_bound(prob);
    const json doc = load_json(path);
    if (!doc.is_object()) throw dbvp::SchemaError("sequence spec: root must be an object");
    if (!doc.contains("base")) throw dbvp::SchemaError("sequence spec: missing field 'base'");
    if (!doc.contains("direction")) throw dbvp::SchemaError("sequence spec: missing field 'direction'");
    if (!doc.contains("count") || !doc.at("count").is_number_integer())
        throw dbvp::SchemaError("sequence spec: missing integer field 'count'");
    const int count = doc.at("count").get<int>();
    if (count < 1) throw dbvp::SchemaError("sequence spec: field 'count' must be >= 1");

    dbvp::ParameterFunction base(spread(doc.at("base"), T, "base"), M);
    const std::vector<double> direction = spread(doc.at("direction"), T, "direction");

    std::vector<double> schedule;
    if (!doc.contains("schedule") || doc.at("schedule") == "harmonic") {
        for (int n = 1; n <= count; ++n) schedule.push_back(1.0 / n);
    } else if (doc.at("schedule").is_array()) {
        schedule = doc.at("schedule").get<std::vector<double>>();
    } else {
        throw dbvp::SchemaError("sequence spec: field 'schedule' must be an array or \"harmonic\"");
    }

    bool clipped = false;
    auto seq = dbvp::make_parameter_sequence(base, direction, schedule, count, &clipped);
    if (clipped)
        std::cerr << "warning: parameter sequence clipped to the L_M ball (M = " << M << ")\n";
    return seq;
}

int run_solve(const Problem& prob, const dbvp::ParameterFunction& u,
              const dbvp::SolveOptions& opts, const std::string& out) {
    const dbvp::SolveReport rep = dbvp::minimize(prob, u, opts);
    dbvp::write_text_file(out + ".json", dbvp::solve_report_to_json(rep).dump(2) + "\n");
    dbvp::write_text_file(out + ".csv", dbvp::solution_to_csv(rep.minimizer));
    if (!rep.converged) {
        std::cerr << "solve did not converge: residual " << rep.residual_inf_norm << " after "
                  << rep.iterations << " iterations\n";
        return kExitNotConverged;
    }
    return kExitOk;
}

int run_sweep(const Problem& prob, const std::vector<dbvp::ParameterFunction>& seq,
              bool warm_start, const dbvp::SolveOptions& opts, const std::string& out) {
    const dbvp::ContinuationReport rep = dbvp::continuation_run(prob, seq, warm_start, opts);
    dbvp::write_text_file(out + ".csv", dbvp::continuation_to_csv(rep));
    dbvp::write_text_file(out + ".json", dbvp::continuation_report_to_json(rep).dump(2) + "\n");
    if (rep.aborted) {
        std::cerr << "sweep aborted: a step did not converge (partial report written)\n";
        return kExitNotConverged;
    }
    return kExitOk;
}

int run_validate(const Problem& prob, std::uint64_t seed, const std::string& out) {
    dbvp::SamplingOptions sopts;
    sopts.seed = seed;
    const dbvp::AssumptionReport rep = dbvp::validate_assumptions(prob, sopts);
    dbvp::write_text_file(out + ".json", dbvp::assumption_report_to_json(rep).dump(2) + "\n");
    for (const auto& e : rep.entries)
        if (e.status == dbvp::AssumptionStatus::Fails) {
            std::cerr << "assumption " << e.id << " fails: " << e.notes << "\n";
            return kExitValidationFailure;
        }
    return kExitOk;
}

int run_spectrum(const Problem& prob, const std::string& out) {
    const auto* e = std::get_if<dbvp::EmdenProblem>(&prob);
    if (!e)
        throw dbvp::InvalidInputError("spectrum: requires an Emden problem (kind = \"emden\")");
    const dbvp::StructuralMatrices sm = dbvp::build_matrices(*e);
    dbvp::write_text_file(out + ".csv", dbvp::spectrum_to_csv(sm));
    return kExitOk;
}

int run_oracle(const Problem& prob, const dbvp::ParameterFunction& u,
               const dbvp::SolveOptions& opts, double box_radius, int grid_points,
               const std::string& out) {
    const dbvp::SolveReport solver_rep = dbvp::minimize(prob, u, opts);
    const dbvp::SolveReport oracle_rep = dbvp::oracle_minimize(prob, u, box_radius, grid_points, opts);
    dbvp::write_text_file(out + ".csv", dbvp::oracle_comparison_to_csv(solver_rep, oracle_rep));
    if (!solver_rep.converged) return kExitNotConverged;
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Variational solver for parameter-dependent discrete second-order BVPs"};
    app.require_subcommand(1);

    std::string problem_path, out_path, param_spec;
    double tol = 1e-10;
    int max_iter = 500;
    std::uint64_t seed = 12345;
    double box_radius = 10.0;
    int grid_points = 21;
    bool no_warm_start = false;

    auto add_common = [&](CLI::App* cmd, bool needs_param) {
        cmd->add_option("--problem", problem_path, "problem JSON file")->required();
        cmd->add_option("--out", out_path, "output path stem")->required();
        cmd->add_option("--tol", tol, "residual tolerance");
        cmd->add_option("--max-iter", max_iter, "iteration cap");
        cmd->add_option("--seed", seed, "seed for randomized validators");
        if (needs_param)
            cmd->add_option("--param", param_spec,
                            "parameter: number (constant) or JSON file path");
    };

    CLI::App* solve = app.add_subcommand("solve", "minimize the action for one parameter");
    add_common(solve, true);
    CLI::App* sweep = app.add_subcommand("sweep", "continuation run over a parameter sequence");
    add_common(sweep, true);
    sweep->add_flag("--no-warm-start", no_warm_start, "start every solve from zero");
    CLI::App* validate = app.add_subcommand("validate", "check the structural assumptions");
    add_common(validate, false);
    CLI::App* spectrum = app.add_subcommand("spectrum", "extremal eigenvalues of M+Q");
    add_common(spectrum, false);
    CLI::App* oracle = app.add_subcommand("oracle", "brute-force grid search vs the solver");
    add_common(oracle, true);
    oracle->add_option("--box-radius", box_radius, "half-width of the search box");
    oracle->add_option("--grid-points", grid_points, "grid points per axis (<= 41)");

    CLI11_PARSE(app, argc, argv);

    try {
        const Problem prob = dbvp::load_problem(problem_path);
        dbvp::SolveOptions opts;
        opts.tol = tol;
        opts.max_iter = max_iter;

        if (solve->parsed()) return run_solve(prob, parse_param(param_spec, prob), opts, out_path);
        if (sweep->parsed())
            return run_sweep(prob, parse_sequence(param_spec, prob), !no_warm_start, opts, out_path);
        if (validate->parsed()) return run_validate(prob, seed, out_path);
        if (spectrum->parsed()) return run_spectrum(prob, out_path);
        if (oracle->parsed())
            return run_oracle(prob, parse_param(param_spec, prob), opts, box_radius, grid_points,
                              out_path);
    } catch (const dbvp::SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIoError;
    } catch (const dbvp::DivergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNotConverged;
    } catch (const dbvp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidationFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIoError;
    }
    return kExitOk;
}
