#include "dbvp/analysis.hpp"

#include "dbvp/emden.hpp"
#include "dbvp/errors.hpp"
#include "dbvp/functional.hpp"
#include "dbvp/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dbvp {

std::string to_string(AssumptionStatus s) {
    switch (s) {
        case AssumptionStatus::Holds: return "holds";
        case AssumptionStatus::HoldsEmpirically: return "holds-empirically";
        case AssumptionStatus::Fails: return "fails";
        case AssumptionStatus::Unverifiable: return "unverifiable";
    }
    return "unknown";
}

const AssumptionEntry* AssumptionReport::find(const std::string& id) const {
    for (const auto& e : entries)
        if (e.id == id) return &e;
    return nullptr;
}

namespace {

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> v(static_cast<size_t>(n));
    if (n == 1) {
        v[0] = 0.5 * (a + b);
        return v;
    }
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = a + (b - a) * i / (n - 1);
    return v;
}

// Sum over k of F(k, y, u); tolerant of quadrature budget exhaustion since the
// limit checks are qualitative.
double potential_sum(const Nonlinearity& f, int T, double y, double u) {
    double s = 0.0;
    for (int k = 1; k <= T; ++k) {
        try {
            s += primitive_F(f, k, y, u, 1e-6);
        } catch (const QuadratureError& e) {
            s += e.best_estimate();
        }
    }
    return s;
}

AssumptionEntry check_finiteness(const std::string& id, const Nonlinearity& f, int T,
                                 double M, const SamplingOptions& opts) {
    AssumptionEntry e{id, AssumptionStatus::HoldsEmpirically, {},
                      "finite on the sampled grid; continuity itself is not machine-checkable"};
    const auto ys = linspace(-opts.y_range, opts.y_range, opts.y_samples);
    const auto us = linspace(-M, M, opts.u_samples);
    for (int k = 1; k <= T; ++k)
        for (double y : ys)
            for (double u : us) {
                const double v = f.eval(k, y, u);
                if (!std::isfinite(v)) {
                    e.status = AssumptionStatus::Fails;
                    e.witnesses.push_back({k, y, u, v});
                    e.notes = "non-finite value on the sampled grid";
                    return e;
                }
            }
    return e;
}

AssumptionEntry check_a2(const Nonlinearity& f, int T, double M,
                         std::optional<double> alpha, const SamplingOptions& opts) {
    AssumptionEntry e{"A2", AssumptionStatus::HoldsEmpirically, {}, ""};
    if (!alpha) {
        e.status = AssumptionStatus::Unverifiable;
        e.notes = "no sign-condition threshold alpha declared";
        return e;
    }
    const double a = *alpha;
    const auto us = linspace(-M, M, opts.u_samples);
    const auto offs = linspace(0.0, opts.y_range, opts.y_samples);
    for (int k = 1; k <= T; ++k)
        for (double off : offs)
            for (double sgn : {1.0, -1.0})
                for (double u : us) {
                    const double y = sgn * (a + off);
                    const double v = f.eval(k, y, u);
                    if (y * v > 1e-12 * (1.0 + std::abs(v))) {
                        e.status = AssumptionStatus::Fails;
                        e.witnesses.push_back({k, y, u, y * v});
                        e.notes = "y*f(k,y,u) > 0 at a sample with |y| >= alpha";
                        return e;
                    }
                }
    e.notes = "y*f <= 0 on the sampled region |y| in [alpha, alpha + y_range]";
    return e;
}

} // namespace

AssumptionReport validate_assumptions(const DirichletProblem& prob,
                                      const SamplingOptions& opts) {
    prob.validate();
    if (opts.y_samples < 10 || opts.u_samples < 2)
        throw InvalidInputError("validate_assumptions: sampling budget too small");
    AssumptionReport rep;
    const int T = prob.T;
    const double M = prob.M_param;

    rep.entries.push_back(check_finiteness("A1", prob.f, T, M, opts));

    const auto alpha = prob.alpha ? prob.alpha : prob.f.alpha;
    rep.entries.push_back(check_a2(prob.f, T, M, alpha, opts));

    // A3: exact finite minimum of p.
    {
        AssumptionEntry e{"A3", AssumptionStatus::Holds, {}, ""};
        int argmin = 1;
        double m = prob.p_at(1);
        for (int k = 2; k <= T + 1; ++k)
            if (prob.p_at(k) < m) {
                m = prob.p_at(k);
                argmin = k;
            }
        if (!(m > 0.0)) {
            e.status = AssumptionStatus::Fails;
            e.witnesses.push_back({argmin, 0.0, 0.0, m});
            e.notes = "min p(k) <= 0";
        } else {
            e.notes = "m = min p(k) = " + std::to_string(m);
        }
        rep.entries.push_back(e);
    }

    // A5: f(k,y,u) - g(k) >= 0 sampled; witness k1 with strict positivity.
    {
        AssumptionEntry e{"A5", AssumptionStatus::HoldsEmpirically, {}, ""};
        const auto ys = linspace(-opts.y_range, opts.y_range, opts.y_samples);
        const auto us = linspace(-M, M, opts.u_samples);
        std::optional<int> strict_k1;
        double strict_margin = 0.0;
        bool failed = false;
        for (int k = 1; k <= T && !failed; ++k) {
            double row_min = std::numeric_limits<double>::infinity();
            Witness row_argmin{k, 0.0, 0.0, 0.0};
            for (double y : ys)
                for (double u : us) {
                    const double v = prob.f.eval(k, y, u) - prob.g_at(k);
                    if (v < row_min) {
                        row_min = v;
                        row_argmin = {k, y, u, v};
                    }
                }
            if (row_min < -1e-12) {
                e.status = AssumptionStatus::Fails;
                e.witnesses.push_back(row_argmin);
                e.notes = "f(k,y,u) - g(k) < 0 at a sample";
                failed = true;
            } else if (row_min > 0.0 && (!strict_k1 || row_min > strict_margin)) {
                strict_k1 = k;
                strict_margin = row_min;
            }
        }
        if (!failed) {
            if (strict_k1) {
                e.witnesses.push_back({*strict_k1, 0.0, 0.0, strict_margin});
                e.notes = "nonnegative on the sample; strict row k1 = " +
                          std::to_string(*strict_k1);
            } else {
                e.status = AssumptionStatus::Unverifiable;
                e.notes = "nonnegative on the sample but no strictly positive row found";
            }
        }
        rep.entries.push_back(e);
    }

    // A6: sum_k F(k,y,u) must diverge to -inf as y -> +inf and stabilize as
    // y -> -inf, uniformly over the u-grid.
    {
        AssumptionEntry e{"A6", AssumptionStatus::HoldsEmpirically, {}, ""};
        const auto us = linspace(-M, M, opts.u_samples);
        bool ok = true;
        for (double u : us) {
            double prev = potential_sum(prob.f, T, 10.0, u);
            for (int j = 2; j <= 6 && ok; ++j) {
                const double cur = potential_sum(prob.f, T, std::pow(10.0, j), u);
                if (!(cur < prev)) {
                    ok = false;
                    e.witnesses.push_back({0, std::pow(10.0, j), u, cur});
                    e.notes = "sum F not monotonically diverging to -inf as y -> +inf";
                }
                prev = cur;
            }
            if (!ok) break;
            double inc_prev = std::numeric_limits<double>::infinity();
            double sprev = potential_sum(prob.f, T, -10.0, u);
            for (int j = 2; j <= 6 && ok; ++j) {
                const double cur = potential_sum(prob.f, T, -std::pow(10.0, j), u);
                const double inc = std::abs(cur - sprev);
                if (inc > inc_prev + 1e-9) {
                    ok = false;
                    e.witnesses.push_back({0, -std::pow(10.0, j), u, cur});
                    e.notes = "sum F not stabilizing as y -> -inf";
                }
                inc_prev = inc;
                sprev = cur;
            }
            if (!ok) break;
        }
        if (!ok) e.status = AssumptionStatus::Fails;
        rep.entries.push_back(e);
    }

    return rep;
}

AssumptionReport validate_assumptions(const EmdenProblem& prob, const SamplingOptions& opts) {
    prob.validate();
    if (opts.y_samples < 10 || opts.u_samples < 2)
        throw InvalidInputError("validate_assumptions: sampling budget too small");
    AssumptionReport rep;
    const int T = prob.T;
    const double M = prob.M_param;

    // A7: finiteness of f on the sample plus the exact nontriviality clause.
    {
        AssumptionEntry e = check_finiteness("A7", prob.f, T, M, opts);
        if (e.status != AssumptionStatus::Fails) {
            std::optional<int> k1;
            for (int k = 1; k <= T; ++k)
                if (prob.g_at(k) != 0.0) {
                    k1 = k;
                    break;
                }
            if (k1) {
                e.witnesses.push_back({*k1, 0.0, 0.0, prob.g_at(*k1)});
                e.notes = "g(k1) != 0 at k1 = " + std::to_string(*k1);
            } else {
                e.status = AssumptionStatus::Fails;
                e.notes = "g vanishes identically; no k1 with g(k1) != 0";
            }
        }
        rep.entries.push_back(e);
    }

    // A8: max over the u-grid of f(k,y,u)/|y|^(r-1) at |y| = 10^j, j = 2..6.
    {
        AssumptionEntry e{"A8", AssumptionStatus::HoldsEmpirically, {}, ""};
        const auto us = linspace(-M, M, opts.u_samples);
        double worst = -std::numeric_limits<double>::infinity();
        Witness worst_w{0, 0.0, 0.0, 0.0};
        const double yj = std::pow(10.0, 6);
        for (int k = 1; k <= T; ++k)
            for (double sgn : {1.0, -1.0})
                for (double u : us) {
                    const double y = sgn * yj;
                    const double ratio =
                        prob.f.eval(k, y, u) / std::pow(std::abs(y), prob.r - 1.0);
                    if (ratio > worst) {
                        worst = ratio;
                        worst_w = {k, y, u, ratio};
                    }
                }
        if (worst > 1e-3) {
            e.status = AssumptionStatus::Fails;
            e.witnesses.push_back(worst_w);
            e.notes = "f/|y|^(r-1) exceeds tolerance 1e-3 at |y| = 1e6";
        } else {
            e.witnesses.push_back(worst_w);
            e.notes = "limsup proxy at |y| = 1e6 within tolerance 1e-3";
        }
        rep.entries.push_back(e);
    }

    return rep;
}

AssumptionReport validate_assumptions(const Problem& prob, const SamplingOptions& opts) {
    return std::visit([&](const auto& p) { return validate_assumptions(p, opts); }, prob);
}

AprioriBound apriori_bound(const DirichletProblem& prob) {
    prob.validate();
    const auto alpha = prob.alpha ? prob.alpha : prob.f.alpha;
    if (!alpha) throw PreconditionError("apriori_bound: A2 threshold alpha is required");
    const double m = prob.min_p();
    if (!(m > 0.0)) throw PreconditionError("apriori_bound: A3 requires min p(k) > 0");

    const double a = *alpha;
    // C uniform over the parameter ball: maximize the sampled u-grid.
    const auto us = linspace(-prob.M_param, prob.M_param, 21);
    double C = 0.0;
    for (double u : us) {
        double s = 0.0;
        for (int k = 1; k <= prob.T; ++k)
            s += adaptive_simpson(
                [&](double t) { return std::abs(prob.f.eval(k, t, u)); }, -a, a, 1e-8);
        C = std::max(C, s);
    }

    double g2 = 0.0;
    for (int k = 1; k <= prob.T; ++k) g2 += prob.g_at(k) * prob.g_at(k);
    const double g_norm = std::sqrt(g2);
    const auto [gamma, gamma1] = equivalence_constants(prob.T);
    (void)gamma1;

    const double b = g_norm / gamma;
    const double bound = (b + std::sqrt(b * b + 2.0 * m * C)) / m;
    return AprioriBound{C, g_norm, gamma, m, bound};
}

PositivityResult positivity_check(const GridFunction& x) {
    if (x.bc_kind() != BcKind::DirichletZero)
        throw InvalidInputError("positivity_check: requires a DirichletZero grid function");
    const int T = x.horizon();
    double mn = x(1);
    int arg = 1;
    for (int k = 2; k <= T; ++k)
        if (x(k) < mn) {
            mn = x(k);
            arg = k;
        }
    return PositivityResult{mn > 0.0, mn, arg};
}

namespace {

double solution_distance(const GridFunction& a, const GridFunction& b) {
    if (a.bc_kind() == BcKind::DirichletZero) {
        const auto ai = a.interior();
        const auto bi = b.interior();
        std::vector<double> d(ai.size());
        for (size_t i = 0; i < ai.size(); ++i) d[i] = ai[i] - bi[i];
        return norms(GridFunction::dirichlet(d)).energy;
    }
    double s = 0.0;
    for (int k = 1; k <= a.horizon(); ++k) s += (a(k) - b(k)) * (a(k) - b(k));
    return std::sqrt(s);
}

double action_value(const Problem& prob, const GridFunction& x, const ParameterFunction& u) {
    if (const auto* d = std::get_if<DirichletProblem>(&prob))
        return action_dirichlet(*d, x, u).value;
    return action_emden(std::get<EmdenProblem>(prob), x, u).value;
}

} // namespace

ContinuationReport continuation_run(const Problem& prob,
                                    const std::vector<ParameterFunction>& sequence,
                                    bool warm_start, const SolveOptions& opts) {
    if (sequence.empty())
        throw InvalidInputError("continuation_run: empty parameter sequence");
    ContinuationReport rep;
    const ParameterFunction& u_bar = sequence.back();

    std::vector<SolveReport> solves;
    solves.reserve(sequence.size());
    SolveOptions step_opts = opts;
    for (size_t n = 0; n < sequence.size(); ++n) {
        if (warm_start && n > 0) step_opts.initial = solves.back().minimizer;
        SolveReport sr = minimize(prob, sequence[n], step_opts);
        const bool ok = sr.converged;
        solves.push_back(std::move(sr));
        if (!ok) {
            rep.aborted = true;
            break;
        }
    }

    const size_t done = solves.size();
    if (done == 0) return rep;
    rep.limit_record = solves.back();
    const bool full = !rep.aborted && done == sequence.size();
    const GridFunction& x_bar = rep.limit_record.minimizer;

    const double j_bar = full ? action_value(prob, x_bar, u_bar) : 0.0;
    rep.limit_optimality = full;
    for (size_t n = 0; n < done; ++n) {
        ContinuationStep step;
        step.n = static_cast<int>(n) + 1;
        step.param_sup_distance = sequence[n].sup_distance(u_bar);
        step.distance_to_limit = solution_distance(solves[n].minimizer, x_bar);
        step.limit_objective_at_step = action_value(prob, solves[n].minimizer, u_bar);
        if (full && j_bar > step.limit_objective_at_step + 1e-8) rep.limit_optimality = false;
        step.solve = std::move(solves[n]);
        rep.steps.push_back(std::move(step));
    }

    if (full) {
        const double final_dist = rep.steps.back().distance_to_limit;
        bool nonincreasing = true;
        const size_t start = rep.steps.size() - rep.steps.size() / 3;
        for (size_t i = std::max<size_t>(start, 1); i < rep.steps.size(); ++i)
            if (rep.steps[i].distance_to_limit >
                1.1 * rep.steps[i - 1].distance_to_limit + 1e-14)
                nonincreasing = false;
        rep.convergence_observed = nonincreasing && final_dist <= 10.0 * opts.tol;
    }
    return rep;
}

double EmdenCoercivityBound::lower_envelope(double t) const {
    return 0.5 * a * t * t - T_count * (A * B + epsilon / r * std::pow(t, r)) - t * g_norm;
}

EmdenCoercivityBound emden_coercivity_bound(const EmdenProblem& prob,
                                            std::optional<double> epsilon) {
    prob.validate();
    const StructuralMatrices sm = build_matrices(prob);
    if (!(sm.a > 0.0))
        throw PreconditionError("emden_coercivity_bound: M+Q must be positive definite");

    EmdenCoercivityBound out;
    out.a = sm.a;
    out.r = prob.r;
    out.T_count = prob.T;
    out.epsilon = epsilon.value_or(sm.a * prob.r / (4.0 * prob.T));

    double g2 = 0.0;
    for (int k = 1; k <= prob.T; ++k) g2 += prob.g_at(k) * prob.g_at(k);
    out.g_norm = std::sqrt(g2);

    // B: smallest sampled threshold beyond which f/|y|^(r-1) <= epsilon.
    const auto us = linspace(-prob.M_param, prob.M_param, 21);
    const int n_thresholds = 61;
    std::vector<double> thresholds(n_thresholds);
    for (int i = 0; i < n_thresholds; ++i)
        thresholds[static_cast<size_t>(i)] = std::pow(10.0, 6.0 * i / (n_thresholds - 1));
    std::vector<bool> ratio_ok(static_cast<size_t>(n_thresholds), true);
    for (int i = 0; i < n_thresholds; ++i) {
        const double yabs = thresholds[static_cast<size_t>(i)];
        for (int k = 1; k <= prob.T && ratio_ok[static_cast<size_t>(i)]; ++k)
            for (double sgn : {1.0, -1.0})
                for (double u : us) {
                    const double ratio = prob.f.eval(k, sgn * yabs, u) /
                                         std::pow(yabs, prob.r - 1.0);
                    if (ratio > out.epsilon) {
                        ratio_ok[static_cast<size_t>(i)] = false;
                        break;
                    }
                }
    }
    int b_idx = -1;
    for (int i = n_thresholds - 1; i >= 0; --i) {
        if (!ratio_ok[static_cast<size_t>(i)]) break;
        b_idx = i;
    }
    if (b_idx < 0)
        throw PreconditionError(
            "emden_coercivity_bound: A8 could not be validated on the sampled thresholds");
    out.B = thresholds[static_cast<size_t>(b_idx)];

    // A: max |f| over [1,T] x [-B,B] x [-M,M] on a grid of >= 10^4 points.
    const int y_pts = std::max(10000 / (prob.T * static_cast<int>(us.size())) + 1, 101);
    const auto ys = linspace(-out.B, out.B, y_pts);
    double A = 0.0;
    for (int k = 1; k <= prob.T; ++k)
        for (double y : ys)
            for (double u : us) A = std::max(A, std::abs(prob.f.eval(k, y, u)));
    out.A = A;

    // When f vanishes on every sample (inside the box and at the far-field
    // thresholds), the sublinear term is not needed: F == 0 there and the
    // envelope reduces to its exact quadratic-minus-linear form.
    if (!epsilon && A == 0.0) {
        bool all_zero = true;
        for (int i = 0; i < n_thresholds && all_zero; ++i)
            for (int k = 1; k <= prob.T && all_zero; ++k)
                for (double sgn : {1.0, -1.0})
                    for (double u : us)
                        if (prob.f.eval(k, sgn * thresholds[static_cast<size_t>(i)], u) != 0.0) {
                            all_zero = false;
                            break;
                        }
        if (all_zero) out.epsilon = 0.0;
    }

    // Largest t with lower_envelope(t) <= A*B*T, by doubling then bisection.
    const double level = out.A * out.B * prob.T;
    double hi = 1.0;
    int guard = 0;
    while (out.lower_envelope(hi) <= level && guard++ < 120) hi *= 2.0;
    double lo = (guard == 0) ? 0.0 : hi / 2.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (out.lower_envelope(mid) <= level)
            lo = mid;
        else
            hi = mid;
    }
    out.solution_bound = hi;
    return out;
}

} // namespace dbvp
