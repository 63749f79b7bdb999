#include "dbvp/analysis.hpp"
#include "dbvp/emden.hpp"
#include "dbvp/grid.hpp"
#include "dbvp/solver.hpp"

#include <benchmark/benchmark.h>

#include <cmath>

namespace {

dbvp::DirichletProblem make_dirichlet(int T) {
    dbvp::DirichletProblem prob;
    prob.T = T;
    prob.p.assign(static_cast<size_t>(T) + 1, 1.0);
    prob.g.resize(static_cast<size_t>(T));
    for (int k = 0; k < T; ++k) prob.g[static_cast<size_t>(k)] = std::sin(0.7 * k) - 0.2;
    prob.f.name = "damped";
    prob.f.eval = [](int, double y, double u) { return -y + 0.3 * std::cos(y) + u; };
    prob.f.dfdy = [](int, double y, double) { return -1.0 - 0.3 * std::sin(y); };
    prob.M_param = 1.0;
    prob.alpha = 1.3;
    return prob;
}

void bm_minimize_dirichlet(benchmark::State& state) {
    const int T = static_cast<int>(state.range(0));
    const auto prob = make_dirichlet(T);
    const auto u = dbvp::ParameterFunction::constant(T, 0.5, 1.0);
    for (auto _ : state) {
        auto rep = dbvp::minimize(prob, u);
        benchmark::DoNotOptimize(rep.objective);
    }
}
BENCHMARK(bm_minimize_dirichlet)->Arg(16)->Arg(64)->Arg(256);

void bm_equivalence_constants(benchmark::State& state) {
    const int T = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto c = dbvp::equivalence_constants(T);
        benchmark::DoNotOptimize(c.first);
    }
}
BENCHMARK(bm_equivalence_constants)->Arg(16)->Arg(256);

void bm_continuation(benchmark::State& state) {
    const int T = 32;
    const auto prob = make_dirichlet(T);
    const auto base = dbvp::ParameterFunction::constant(T, 0.0, 1.0);
    std::vector<double> schedule;
    for (int n = 1; n <= 20; ++n) schedule.push_back(1.0 / n);
    const auto seq = dbvp::make_parameter_sequence(
        base, std::vector<double>(static_cast<size_t>(T), 1.0), schedule, 20);
    for (auto _ : state) {
        auto rep = dbvp::continuation_run(dbvp::Problem{prob}, seq, true);
        benchmark::DoNotOptimize(rep.convergence_observed);
    }
}
BENCHMARK(bm_continuation);

} // namespace

BENCHMARK_MAIN();
