#pragma once

#include "dbvp/functional.hpp"
#include "dbvp/grid.hpp"
#include "dbvp/problem.hpp"

#include <optional>
#include <vector>

namespace dbvp {

/// The T x T structural matrices of the Emden-Fowler formulation and the
/// extremal eigenvalues of their sum. M_mat annihilates constants; Q_mat is
/// diag(-q(1), ..., -q(T)).
struct StructuralMatrices {
    int T;
    std::vector<double> M_mat; // row-major T x T, symmetric
    std::vector<double> Q_mat; // row-major T x T, diagonal
    double lambda_min;
    double lambda_max;
    double a; // = lambda_min; the coercivity constant a_{M+Q} when positive

    double mq_at(int i, int j) const {
        return M_mat[static_cast<size_t>(i) * T + j] + Q_mat[static_cast<size_t>(i) * T + j];
    }
    std::vector<double> mq_apply(const std::vector<double>& x) const;
};

StructuralMatrices build_matrices(const EmdenProblem& prob);

/// value = 1/2 <(M+Q)x, x> - sum F + sum g*x over the T independent values x(1..T).
ActionEvaluation action_emden(const EmdenProblem& prob, const GridFunction& x,
                              const ParameterFunction& u);

/// Wraparound stencil residual on [1,T]; identical to -(M+Q)x + f - g, so the
/// gradient of the Emden action is -res.
std::vector<double> residual_emden(const EmdenProblem& prob, const GridFunction& x,
                                   const ParameterFunction& u);

struct NontrivialityCheck {
    bool nontrivial;
    std::optional<int> witness;   // some k1 with g(k1) != 0, when present
    double zero_residual_at_witness; // residual of the zero function at k1
};

/// A converged critical point under A7 cannot be the zero function: its
/// residual at k1 would be f(k1,0,u) - g(k1).
NontrivialityCheck nontriviality_check(const EmdenProblem& prob, const GridFunction& x,
                                       const ParameterFunction& u, double tol = 1e-10);

} // namespace dbvp
