#include "dbvp/functional.hpp"
#include "dbvp/problem.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace dbvp;

namespace {

DirichletProblem unit_problem(int T, Nonlinearity f, double gval) {
    DirichletProblem prob;
    prob.T = T;
    prob.p.assign(static_cast<size_t>(T) + 1, 1.0);
    prob.g.assign(static_cast<size_t>(T), gval);
    prob.f = std::move(f);
    prob.M_param = 1.0;
    return prob;
}

DirichletProblem random_problem(int T, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> pd(0.5, 2.0), gd(-1.0, 1.0);
    DirichletProblem prob;
    prob.T = T;
    prob.p.resize(static_cast<size_t>(T) + 1);
    prob.g.resize(static_cast<size_t>(T));
    for (auto& v : prob.p) v = pd(rng);
    for (auto& v : prob.g) v = gd(rng);
    prob.f.name = "damped_cosine";
    prob.f.eval = [](int, double y, double u) { return -2.0 * y + 0.4 * std::cos(y) + u; };
    prob.f.primitive = [](int, double y, double u) {
        return -y * y + 0.4 * std::sin(y) + u * y;
    };
    prob.f.dfdy = [](int, double y, double) { return -2.0 - 0.4 * std::sin(y); };
    prob.M_param = 1.0;
    return prob;
}

} // namespace

TEST_CASE("primitive_F prefers the closed form") {
    const auto f = builtin_nonlinearity("linear"); // f = -y
    CHECK(primitive_F(f, 1, 2.0, 0.0) == doctest::Approx(-2.0));
    CHECK(primitive_F(f, 1, 0.0, 0.5) == 0.0);
}

TEST_CASE("primitive_F falls back to quadrature and matches the closed form") {
    auto f = builtin_nonlinearity("example2");
    auto stripped = f;
    stripped.primitive = nullptr;
    for (double y : {-3.0, -1.0, -0.25, 0.0, 0.5, 4.0}) {
        const double closed = primitive_F(f, 1, y, 0.0);
        const double quad = primitive_F(stripped, 1, y, 0.0);
        CHECK(quad == doctest::Approx(closed).epsilon(1e-9));
    }
}

TEST_CASE("primitive_F differentiates back to the integrand") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> dist(-4.0, 4.0);
    const auto f = builtin_nonlinearity("example2");
    auto stripped = f;
    stripped.primitive = nullptr;
    for (int i = 0; i < 40; ++i) {
        const double y = dist(rng);
        const double h = 1e-5;
        const double d =
            (primitive_F(stripped, 1, y + h, 0.0) - primitive_F(stripped, 1, y - h, 0.0)) /
            (2 * h);
        CHECK(d == doctest::Approx(f.eval(1, y, 0.0)).epsilon(2e-4));
    }
}

TEST_CASE("action of the zero function is zero") {
    const auto prob = unit_problem(4, builtin_nonlinearity("linear"), -0.7);
    const auto u = ParameterFunction::constant(4, 0.0, 1.0);
    const auto a = action_dirichlet(prob, GridFunction::dirichlet_zero(4), u);
    CHECK(a.value == 0.0);
    CHECK(a.quadratic_part == 0.0);
    CHECK(a.potential_part == 0.0);
    CHECK(a.linear_part == 0.0);
}

TEST_CASE("action decomposition on the discrete parabola") {
    BuiltinParams bp;
    bp.c = 0.0;
    auto prob = unit_problem(3, builtin_nonlinearity("constant_sign", bp), -1.0);
    const auto u = ParameterFunction::constant(3, 0.0, 1.0);
    const auto x = GridFunction::dirichlet({1.5, 2.0, 1.5});
    const auto a = action_dirichlet(prob, x, u);
    CHECK(a.quadratic_part == doctest::Approx(2.5));
    CHECK(a.potential_part == doctest::Approx(0.0));
    CHECK(a.linear_part == doctest::Approx(-5.0));
    CHECK(a.value == doctest::Approx(-2.5));
    CHECK(a.value == doctest::Approx(a.quadratic_part - a.potential_part + a.linear_part));
}

TEST_CASE("single interior point action") {
    BuiltinParams bp;
    bp.c = 0.0;
    auto prob = unit_problem(1, builtin_nonlinearity("constant_sign", bp), 1.0);
    const auto u = ParameterFunction::constant(1, 0.0, 1.0);
    const double aval = -2.25;
    const auto a = action_dirichlet(prob, GridFunction::dirichlet({aval}), u);
    CHECK(a.quadratic_part == doctest::Approx(aval * aval));
    CHECK(a.linear_part == doctest::Approx(aval));
    CHECK(a.value == doctest::Approx(aval * aval + aval));
}

TEST_CASE("parabola is a zero of the residual") {
    BuiltinParams bp;
    bp.c = 0.0;
    auto prob = unit_problem(3, builtin_nonlinearity("constant_sign", bp), -1.0);
    const auto u = ParameterFunction::constant(3, 0.0, 1.0);
    const auto res = residual_dirichlet(prob, GridFunction::dirichlet({1.5, 2.0, 1.5}), u);
    REQUIRE(res.size() == 3);
    for (double r : res) CHECK(r == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("residual is the negative gradient of the action") {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    for (int trial = 0; trial < 10; ++trial) {
        const int T = 2 + static_cast<int>(rng() % 8);
        const auto prob = random_problem(T, rng);
        std::vector<double> uv(static_cast<size_t>(T));
        for (auto& v : uv) v = dist(rng) / 2.0;
        const auto u = ParameterFunction(uv, 1.0);
        std::vector<double> xv(static_cast<size_t>(T));
        for (auto& v : xv) v = dist(rng);
        const auto x = GridFunction::dirichlet(xv);
        const auto res = residual_dirichlet(prob, x, u);
        const double h = 1e-6;
        for (int k = 1; k <= T; ++k) {
            auto plus = xv, minus = xv;
            plus[static_cast<size_t>(k - 1)] += h;
            minus[static_cast<size_t>(k - 1)] -= h;
            const double dj = (action_dirichlet(prob, GridFunction::dirichlet(plus), u).value -
                               action_dirichlet(prob, GridFunction::dirichlet(minus), u).value) /
                              (2 * h);
            CHECK(dj == doctest::Approx(-res[static_cast<size_t>(k - 1)]).epsilon(1e-5));
        }
    }
}

TEST_CASE("hessian matches finite differences of the gradient") {
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    const int T = 6;
    const auto prob = random_problem(T, rng);
    const auto u = ParameterFunction::constant(T, 0.3, 1.0);
    std::vector<double> xv(static_cast<size_t>(T));
    for (auto& v : xv) v = dist(rng);
    const auto x = GridFunction::dirichlet(xv);
    const auto H = hessian_dirichlet(prob, x, u);
    REQUIRE(H.size() == static_cast<size_t>(T));
    std::vector<double> v(static_cast<size_t>(T));
    for (auto& c : v) c = dist(rng);
    const auto Hv = H.apply(v);
    const double h = 1e-6;
    auto plus = xv, minus = xv;
    for (int k = 0; k < T; ++k) {
        plus[static_cast<size_t>(k)] += h * v[static_cast<size_t>(k)];
        minus[static_cast<size_t>(k)] -= h * v[static_cast<size_t>(k)];
    }
    const auto rp = residual_dirichlet(prob, GridFunction::dirichlet(plus), u);
    const auto rm = residual_dirichlet(prob, GridFunction::dirichlet(minus), u);
    for (int k = 0; k < T; ++k) {
        const double fd = -(rp[static_cast<size_t>(k)] - rm[static_cast<size_t>(k)]) / (2 * h);
        CHECK(Hv[static_cast<size_t>(k)] == doctest::Approx(fd).epsilon(1e-5));
    }
}

TEST_CASE("hessian entries for constant coefficients") {
    auto prob = unit_problem(3, builtin_nonlinearity("linear"), 0.0); // f = -y
    const auto u = ParameterFunction::constant(3, 0.0, 1.0);
    const auto H = hessian_dirichlet(prob, GridFunction::dirichlet_zero(3), u);
    for (double d : H.diag) CHECK(d == doctest::Approx(3.0)); // p+p - (-1)
    for (double o : H.off) CHECK(o == doctest::Approx(-1.0));
}

TEST_CASE("dfdy central difference agrees with the analytic slope") {
    const auto f = builtin_nonlinearity("example1");
    auto stripped = f;
    stripped.dfdy = nullptr;
    for (double y : {-2.0, -0.5, 0.5, 2.0}) {
        CHECK(nonlinearity_dfdy(stripped, 1, y, 0.0) ==
              doctest::Approx(nonlinearity_dfdy(f, 1, y, 0.0)).epsilon(1e-5));
    }
}
