#pragma once

#include "dbvp/functional.hpp"
#include "dbvp/grid.hpp"
#include "dbvp/problem.hpp"

namespace dbvp {

struct TraceEntry {
    int iteration;
    double objective;
    double step; // accepted step length, 0 for the initial record
};

struct SolveReport {
    GridFunction minimizer = GridFunction::dirichlet_zero(1);
    double objective = 0.0;
    double residual_inf_norm = 0.0;
    int iterations = 0;
    bool converged = false;
    std::vector<TraceEntry> method_trace;
};

struct SolveOptions {
    double tol = 1e-10; // residual inf-norm
    int max_iter = 500;
    double armijo_c = 1e-4;
    double backtrack = 0.5;
    std::optional<GridFunction> initial; // default: zero function
    bool allow_indefinite = false;       // Emden: override the lambda_min > 0 gate
};

/// Damped Newton with Armijo backtracking on the action functional; gradient
/// descent fallback when the Newton direction is not a descent direction.
SolveReport minimize(const DirichletProblem& prob, const ParameterFunction& u,
                     const SolveOptions& opts = {});
SolveReport minimize(const EmdenProblem& prob, const ParameterFunction& u,
                     const SolveOptions& opts = {});
SolveReport minimize(const Problem& prob, const ParameterFunction& u,
                     const SolveOptions& opts = {});

struct CriticalPointCheck {
    bool is_critical;
    double residual_inf_norm;
    double objective;
};

CriticalPointCheck verify_critical_point(const DirichletProblem& prob, const GridFunction& x,
                                         const ParameterFunction& u, double tol);
CriticalPointCheck verify_critical_point(const EmdenProblem& prob, const GridFunction& x,
                                         const ParameterFunction& u, double tol);
CriticalPointCheck verify_critical_point(const Problem& prob, const GridFunction& x,
                                         const ParameterFunction& u, double tol);

/// Exhaustive tensor-grid search over [-box_radius, box_radius]^T followed by
/// one Newton polish from the best grid point. Supports T <= 4 only.
SolveReport oracle_minimize(const Problem& prob, const ParameterFunction& u,
                            double box_radius, int grid_points_per_axis,
                            const SolveOptions& opts = {});

} // namespace dbvp
