#include "dbvp/functional.hpp"

#include "dbvp/errors.hpp"
#include "dbvp/quadrature.hpp"

#include <cmath>

namespace dbvp {

double primitive_F(const Nonlinearity& f, int k, double y, double u, double tol) {
    if (!(tol > 0.0)) throw InvalidInputError("primitive_F: tol must be positive");
    if (y == 0.0) return 0.0;
    if (f.primitive) return f.primitive(k, y, u);
    return adaptive_simpson([&](double t) { return f.eval(k, t, u); }, 0.0, y, tol);
}

namespace {

void check_dirichlet_shapes(const DirichletProblem& prob, const GridFunction& x,
                            const ParameterFunction& u) {
    prob.validate();
    if (x.bc_kind() != BcKind::DirichletZero)
        throw InvalidInputError("Dirichlet action: grid function must be DirichletZero");
    if (x.horizon() != prob.T)
        throw InvalidInputError("Dirichlet action: grid function horizon mismatch");
    if (u.horizon() != prob.T)
        throw InvalidInputError("Dirichlet action: parameter function horizon mismatch");
}

} // namespace

ActionEvaluation action_dirichlet(const DirichletProblem& prob, const GridFunction& x,
                                  const ParameterFunction& u) {
    check_dirichlet_shapes(prob, x, u);
    const int T = prob.T;
    double quad = 0.0, pot = 0.0, lin = 0.0;
    for (int k = 1; k <= T + 1; ++k) {
        const double d = x(k) - x(k - 1);
        quad += prob.p_at(k) / 2.0 * d * d;
    }
    for (int k = 1; k <= T; ++k) {
        pot += primitive_F(prob.f, k, x(k), u(k));
        lin += prob.g_at(k) * x(k);
    }
    return ActionEvaluation{quad - pot + lin, quad, pot, lin};
}

std::vector<double> residual_dirichlet(const DirichletProblem& prob, const GridFunction& x,
                                       const ParameterFunction& u) {
    check_dirichlet_shapes(prob, x, u);
    const int T = prob.T;
    std::vector<double> res(static_cast<size_t>(T));
    for (int k = 1; k <= T; ++k) {
        res[static_cast<size_t>(k - 1)] =
            prob.p_at(k + 1) * (x(k + 1) - x(k)) - prob.p_at(k) * (x(k) - x(k - 1)) +
            prob.f.eval(k, x(k), u(k)) - prob.g_at(k);
    }
    return res;
}

double nonlinearity_dfdy(const Nonlinearity& f, int k, double y, double u, double fd_step) {
    if (f.dfdy) return f.dfdy(k, y, u);
    const double h = fd_step * (1.0 + std::abs(y));
    return (f.eval(k, y + h, u) - f.eval(k, y - h, u)) / (2.0 * h);
}

SymTridiag hessian_dirichlet(const DirichletProblem& prob, const GridFunction& x,
                             const ParameterFunction& u, double fd_step) {
    check_dirichlet_shapes(prob, x, u);
    if (!(fd_step > 0.0)) throw InvalidInputError("hessian_dirichlet: fd_step must be positive");
    const int T = prob.T;
    SymTridiag h;
    h.diag.resize(static_cast<size_t>(T));
    h.off.resize(static_cast<size_t>(T) - 1);
    for (int k = 1; k <= T; ++k) {
        h.diag[static_cast<size_t>(k - 1)] =
            prob.p_at(k) + prob.p_at(k + 1) - nonlinearity_dfdy(prob.f, k, x(k), u(k), fd_step);
        if (k < T) h.off[static_cast<size_t>(k - 1)] = -prob.p_at(k + 1);
    }
    return h;
}

} // namespace dbvp
