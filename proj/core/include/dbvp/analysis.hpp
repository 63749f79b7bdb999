#pragma once

#include "dbvp/grid.hpp"
#include "dbvp/problem.hpp"
#include "dbvp/solver.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dbvp {

enum class AssumptionStatus { Holds, HoldsEmpirically, Fails, Unverifiable };

std::string to_string(AssumptionStatus s);

struct Witness {
    int k;
    double y;
    double u;
    double value;
};

struct AssumptionEntry {
    std::string id; // "A1".."A8"
    AssumptionStatus status;
    std::vector<Witness> witnesses;
    std::string notes;
};

struct AssumptionReport {
    std::vector<AssumptionEntry> entries;
    const AssumptionEntry* find(const std::string& id) const;
};

struct SamplingOptions {
    double y_range = 10.0;  // A2 is sampled on |y| in [alpha, alpha + y_range]
    int y_samples = 101;    // per decade / per interval
    int u_samples = 21;
    std::uint64_t seed = 12345;
};

/// Sampled validators. Exact checks (A3, A7's g(k1) != 0) report Holds/Fails;
/// limit-type checks (A2, A6, A8) can at best report HoldsEmpirically.
AssumptionReport validate_assumptions(const DirichletProblem& prob,
                                      const SamplingOptions& opts = {});
AssumptionReport validate_assumptions(const EmdenProblem& prob,
                                      const SamplingOptions& opts = {});
AssumptionReport validate_assumptions(const Problem& prob,
                                      const SamplingOptions& opts = {});

/// Constants of the a-priori estimate: the largest root of
/// (m/2) t^2 - (g_norm/gamma) t - C = 0 bounds the energy norm of every
/// minimizer reached from the zero start.
struct AprioriBound {
    double C;
    double g_norm;
    double gamma;
    double m;
    double bound;
};

AprioriBound apriori_bound(const DirichletProblem& prob);

struct PositivityResult {
    bool positive;
    double min_interior;
    int argmin;
};

/// positive iff min over interior k in [1,T] of x(k) > 0 strictly.
PositivityResult positivity_check(const GridFunction& x);

struct ContinuationStep {
    int n;
    double param_sup_distance; // ||u_n - u_bar||_C
    SolveReport solve;
    double distance_to_limit;  // ||x_n - x_bar|| (energy norm; Euclidean for Emden)
    double limit_objective_at_step; // J_{u_bar}(x_n)
};

struct ContinuationReport {
    std::vector<ContinuationStep> steps;
    SolveReport limit_record;
    bool convergence_observed = false;
    bool limit_optimality = false; // J_ubar(x_bar) <= J_ubar(x_n) + 1e-8 for all n
    bool aborted = false;          // some solve failed; report is partial
};

/// Solves along the parameter sequence (last element is the limit u_bar) and
/// records distances of each minimizer to the limit minimizer.
ContinuationReport continuation_run(const Problem& prob,
                                    const std::vector<ParameterFunction>& sequence,
                                    bool warm_start,
                                    const SolveOptions& opts = {});

struct EmdenCoercivityBound {
    double A;
    double B;
    double epsilon;
    double a; // a_{M+Q}
    double solution_bound;
    /// (a/2) t^2 - T(AB + (eps/r) t^r) - t * g_norm
    double lower_envelope(double t) const;
    double T_count;
    double g_norm;
    double r;
};

/// Realizes the coercivity estimate for the Emden action: every computed
/// minimizer has Euclidean norm <= solution_bound (up to 1e-6 slack).
/// epsilon defaults to a*r/(4T) when not given.
EmdenCoercivityBound emden_coercivity_bound(const EmdenProblem& prob,
                                            std::optional<double> epsilon = std::nullopt);

} // namespace dbvp
