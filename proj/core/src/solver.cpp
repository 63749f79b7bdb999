#include "dbvp/solver.hpp"

#include "dbvp/emden.hpp"
#include "dbvp/errors.hpp"
#include "dbvp/tridiag.hpp"

#include <cmath>
#include <functional>

namespace dbvp {

namespace {

double inf_norm(const std::vector<double>& v) {
    double n = 0.0;
    for (double x : v) {
        const double a = std::abs(x);
        if (std::isnan(a)) return a; // std::max would silently drop NaN
        n = std::max(n, a);
    }
    return n;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Interior-vector view of one problem instance.
struct Model {
    std::function<double(const std::vector<double>&)> value;
    std::function<std::vector<double>(const std::vector<double>&)> residual;
    // Solves H(x) d = res; nullopt when the factorization breaks down.
    std::function<std::optional<std::vector<double>>(const std::vector<double>&,
                                                     const std::vector<double>&)> newton_dir;
    std::function<GridFunction(const std::vector<double>&)> wrap;
};

Model dirichlet_model(const DirichletProblem& prob, const ParameterFunction& u) {
    Model m;
    m.wrap = [](const std::vector<double>& x) { return GridFunction::dirichlet(x); };
    m.value = [&prob, &u, wrap = m.wrap](const std::vector<double>& x) {
        return action_dirichlet(prob, wrap(x), u).value;
    };
    m.residual = [&prob, &u, wrap = m.wrap](const std::vector<double>& x) {
        return residual_dirichlet(prob, wrap(x), u);
    };
    m.newton_dir = [&prob, &u, wrap = m.wrap](const std::vector<double>& x,
                                              const std::vector<double>& res)
        -> std::optional<std::vector<double>> {
        const SymTridiag h = hessian_dirichlet(prob, wrap(x), u);
        return thomas_solve(h.off, h.diag, h.off, res);
    };
    return m;
}

Model emden_model(const EmdenProblem& prob, const ParameterFunction& u) {
    Model m;
    m.wrap = [](const std::vector<double>& x) { return GridFunction::periodic(x); };
    m.value = [&prob, &u, wrap = m.wrap](const std::vector<double>& x) {
        return action_emden(prob, wrap(x), u).value;
    };
    m.residual = [&prob, &u, wrap = m.wrap](const std::vector<double>& x) {
        return residual_emden(prob, wrap(x), u);
    };
    m.newton_dir = [&prob, &u, wrap = m.wrap](const std::vector<double>& x,
                                              const std::vector<double>& res)
        -> std::optional<std::vector<double>> {
        const int T = prob.T;
        const GridFunction gx = wrap(x);
        std::vector<double> diag(static_cast<size_t>(T));
        for (int k = 1; k <= T; ++k) {
            const double p_right = (k == T) ? prob.p_at(0) : prob.p_at(k);
            diag[static_cast<size_t>(k - 1)] = prob.p_at(k - 1) + p_right - prob.q_at(k) -
                                               nonlinearity_dfdy(prob.f, k, gx(k), u(k));
        }
        if (T == 1) {
            // No difference terms on a single point.
            const double h = -prob.q_at(1) - nonlinearity_dfdy(prob.f, 1, gx(1), u(1));
            if (std::abs(h) < 1e-300) return std::nullopt;
            return std::vector<double>{res[0] / h};
        }
        if (T == 2) {
            const double off = -(prob.p_at(0) + prob.p_at(1));
            const double det = diag[0] * diag[1] - off * off;
            if (std::abs(det) < 1e-300) return std::nullopt;
            return std::vector<double>{(diag[1] * res[0] - off * res[1]) / det,
                                       (diag[0] * res[1] - off * res[0]) / det};
        }
        std::vector<double> sub(static_cast<size_t>(T) - 1), sup(static_cast<size_t>(T) - 1);
        for (int k = 1; k < T; ++k) {
            sub[static_cast<size_t>(k - 1)] = -prob.p_at(k);
            sup[static_cast<size_t>(k - 1)] = -prob.p_at(k);
        }
        const double corner = -prob.p_at(0);
        return cyclic_tridiag_solve(sub, diag, sup, corner, corner, res);
    };
    return m;
}

SolveReport run_minimize(const Model& model, const SolveOptions& opts,
                         const std::vector<double>& start) {
    if (!(opts.tol > 0.0)) throw InvalidInputError("minimize: tol must be positive");
    std::vector<double> x = start;
    double J = model.value(x);
    if (!std::isfinite(J)) throw DivergenceError("minimize: non-finite objective at start");

    SolveReport rep;
    rep.method_trace.push_back({0, J, 0.0});

    std::vector<double> res = model.residual(x);
    double rn = inf_norm(res);
    if (!std::isfinite(rn)) throw DivergenceError("minimize: non-finite residual at start");
    int it = 0;
    while (rn > opts.tol && it < opts.max_iter) {
        auto dir = model.newton_dir(x, res);
        double slope = 0.0;
        if (dir) slope = -dot(res, *dir);
        if (!dir || !(slope < 0.0)) {
            dir = res; // gradient descent: -grad J = res
            slope = -dot(res, res);
        }
        // Armijo backtracking.
        double t = 1.0;
        bool accepted = false;
        std::vector<double> xn(x.size());
        double Jn = J;
        for (int bt = 0; bt < 80; ++bt) {
            for (size_t i = 0; i < x.size(); ++i) xn[i] = x[i] + t * (*dir)[i];
            Jn = model.value(xn);
            if (std::isfinite(Jn) && Jn <= J + opts.armijo_c * t * slope) {
                accepted = true;
                break;
            }
            // Near the minimum the predicted decrease ~ ||res||^2 drops below
            // the objective's floating-point resolution and the Armijo test
            // can only tie; accept on sufficient residual reduction instead.
            if (std::isfinite(Jn) && Jn <= J + 1e-12 * (1.0 + std::abs(J))) {
                const double rtn = inf_norm(model.residual(xn));
                if (std::isfinite(rtn) && rtn <= 0.9 * rn) {
                    accepted = true;
                    break;
                }
            }
            t *= opts.backtrack;
        }
        if (!accepted) break; // stalled line search
        x = xn;
        J = Jn;
        ++it;
        rep.method_trace.push_back({it, J, t});
        res = model.residual(x);
        rn = inf_norm(res);
        if (!std::isfinite(rn)) throw DivergenceError("minimize: non-finite residual");
    }

    rep.minimizer = model.wrap(x);
    rep.objective = J;
    rep.residual_inf_norm = rn;
    rep.iterations = it;
    rep.converged = rn <= opts.tol;
    return rep;
}

std::vector<double> start_point(const SolveOptions& opts, int T, BcKind bc) {
    if (!opts.initial) return std::vector<double>(static_cast<size_t>(T), 0.0);
    const GridFunction& g = *opts.initial;
    if (g.bc_kind() != bc || g.horizon() != T)
        throw InvalidInputError("minimize: initial point has the wrong shape");
    return g.interior();
}

} // namespace

SolveReport minimize(const DirichletProblem& prob, const ParameterFunction& u,
                     const SolveOptions& opts) {
    prob.validate();
    const Model m = dirichlet_model(prob, u);
    return run_minimize(m, opts, start_point(opts, prob.T, BcKind::DirichletZero));
}

SolveReport minimize(const EmdenProblem& prob, const ParameterFunction& u,
                     const SolveOptions& opts) {
    prob.validate();
    if (!opts.allow_indefinite) {
        const StructuralMatrices sm = build_matrices(prob);
        if (!(sm.lambda_min > 0.0))
            throw PreconditionError(
                "minimize: M+Q is not positive definite (lambda_min <= 0); "
                "set allow_indefinite to override");
    }
    const Model m = emden_model(prob, u);
    return run_minimize(m, opts, start_point(opts, prob.T, BcKind::PeriodicType));
}

SolveReport minimize(const Problem& prob, const ParameterFunction& u, const SolveOptions& opts) {
    return std::visit([&](const auto& p) { return minimize(p, u, opts); }, prob);
}

CriticalPointCheck verify_critical_point(const DirichletProblem& prob, const GridFunction& x,
                                         const ParameterFunction& u, double tol) {
    const double rn = inf_norm(residual_dirichlet(prob, x, u));
    return CriticalPointCheck{rn <= tol, rn, action_dirichlet(prob, x, u).value};
}

CriticalPointCheck verify_critical_point(const EmdenProblem& prob, const GridFunction& x,
                                         const ParameterFunction& u, double tol) {
    const double rn = inf_norm(residual_emden(prob, x, u));
    return CriticalPointCheck{rn <= tol, rn, action_emden(prob, x, u).value};
}

CriticalPointCheck verify_critical_point(const Problem& prob, const GridFunction& x,
                                         const ParameterFunction& u, double tol) {
    return std::visit([&](const auto& p) { return verify_critical_point(p, x, u, tol); }, prob);
}

SolveReport oracle_minimize(const Problem& prob, const ParameterFunction& u,
                            double box_radius, int grid_points_per_axis,
                            const SolveOptions& opts) {
    if (!(box_radius > 0.0)) throw InvalidInputError("oracle_minimize: box_radius must be positive");
    if (grid_points_per_axis < 2 || grid_points_per_axis > 41)
        throw InvalidInputError("oracle_minimize: grid_points_per_axis must be in [2, 41]");
    const int T = std::visit([](const auto& p) { return p.T; }, prob);
    if (T > 4) throw UnsupportedSizeError("oracle_minimize: supports T <= 4 only");

    const bool dirichlet = std::holds_alternative<DirichletProblem>(prob);
    const Model model = dirichlet ? dirichlet_model(std::get<DirichletProblem>(prob), u)
                                  : emden_model(std::get<EmdenProblem>(prob), u);

    std::vector<int> idx(static_cast<size_t>(T), 0);
    std::vector<double> x(static_cast<size_t>(T));
    std::vector<double> best_x(static_cast<size_t>(T), 0.0);
    double best = model.value(best_x);
    const int n = grid_points_per_axis;
    const double step = 2.0 * box_radius / (n - 1);
    bool done = false;
    while (!done) {
        for (int i = 0; i < T; ++i) x[static_cast<size_t>(i)] = -box_radius + step * idx[static_cast<size_t>(i)];
        const double v = model.value(x);
        if (std::isfinite(v) && v < best) {
            best = v;
            best_x = x;
        }
        // odometer increment
        int pos = 0;
        while (pos < T) {
            if (++idx[static_cast<size_t>(pos)] < n) break;
            idx[static_cast<size_t>(pos)] = 0;
            ++pos;
        }
        done = (pos == T);
    }

    SolveOptions polish = opts;
    polish.initial = model.wrap(best_x);
    polish.allow_indefinite = true; // grid search already established the landscape
    return minimize(prob, u, polish);
}

} // namespace dbvp
