#pragma once

#include "dbvp/grid.hpp"
#include "dbvp/problem.hpp"
#include "dbvp/tridiag.hpp"

namespace dbvp {

/// One evaluation of an action functional, split into its three sums.
/// value = quadratic_part - potential_part + linear_part.
struct ActionEvaluation {
    double value;
    double quadratic_part;
    double potential_part; // sum of F(k, x(k), u(k))
    double linear_part;    // sum of g(k) x(k)
};

/// F(k, y, u) = int_0^y f(k, t, u) dt: the closed form when the handle carries
/// one, adaptive Simpson quadrature otherwise.
double primitive_F(const Nonlinearity& f, int k, double y, double u, double tol = 1e-10);

ActionEvaluation action_dirichlet(const DirichletProblem& prob, const GridFunction& x,
                                  const ParameterFunction& u);

/// res[k] = p(k+1)(x(k+1)-x(k)) - p(k)(x(k)-x(k-1)) + f(k,x(k),u(k)) - g(k),
/// k = 1..T. The gradient of the action at x is -res componentwise.
std::vector<double> residual_dirichlet(const DirichletProblem& prob, const GridFunction& x,
                                       const ParameterFunction& u);

/// Hessian of the Dirichlet action at x: diag p(k)+p(k+1) - df/dy, off-diag
/// -p(k+1). df/dy by central difference with step fd_step*(1+|y|) when the
/// handle has no analytic derivative.
SymTridiag hessian_dirichlet(const DirichletProblem& prob, const GridFunction& x,
                             const ParameterFunction& u, double fd_step = 1e-6);

/// df/dy at one point, analytic when registered, central difference otherwise.
double nonlinearity_dfdy(const Nonlinearity& f, int k, double y, double u,
                         double fd_step = 1e-6);

} // namespace dbvp
