#include "dbvp/errors.hpp"
#include "dbvp/grid.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace dbvp;

TEST_CASE("forward difference of the zero function is zero") {
    const auto y = GridFunction::dirichlet_zero(5);
    for (double d : forward_difference(y)) CHECK(d == 0.0);
}

TEST_CASE("forward difference by direct subtraction") {
    const auto y = GridFunction::dirichlet({1.5, 2.0, 1.5}); // T = 3
    const auto d = forward_difference(y);
    REQUIRE(d.size() == 4);
    CHECK(d[0] == doctest::Approx(1.5));
    CHECK(d[1] == doctest::Approx(0.5));
    CHECK(d[2] == doctest::Approx(-0.5));
    CHECK(d[3] == doctest::Approx(-1.5));
}

TEST_CASE("forward difference of a constant periodic function vanishes") {
    const auto y = GridFunction::periodic({3.7, 3.7, 3.7, 3.7});
    for (double d : forward_difference(y)) CHECK(d == 0.0);
}

TEST_CASE("telescoping sum of forward differences") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dist(-5.0, 5.0);
    std::vector<double> interior(20);
    for (auto& v : interior) v = dist(rng);
    const auto y = GridFunction::dirichlet(interior);
    double sum = 0.0;
    double maxabs = 0.0;
    for (double v : y.values()) maxabs = std::max(maxabs, std::abs(v));
    for (double d : forward_difference(y)) sum += d;
    const int T = y.horizon();
    CHECK(std::abs(sum - (y(T + 1) - y(0))) <= 1e-12 * T * maxabs);
}

TEST_CASE("norms on the hat function") {
    const auto y = GridFunction::dirichlet({1.0, 2.0, 1.0});
    const auto n = norms(y);
    CHECK(n.energy == doctest::Approx(2.0));
    CHECK(n.euclidean == doctest::Approx(std::sqrt(6.0)));
    // truncated variant omits the first gap
    CHECK(n.energy_truncated == doctest::Approx(std::sqrt(3.0)));
}

TEST_CASE("norms of a single interior point") {
    const double a = -2.25;
    const auto y = GridFunction::dirichlet({a});
    const auto n = norms(y);
    CHECK(n.energy == doctest::Approx(std::sqrt(2.0 * a * a)));
    CHECK(n.euclidean == doctest::Approx(std::abs(a)));
}

TEST_CASE("norms of the zero function") {
    const auto n = norms(GridFunction::dirichlet_zero(4));
    CHECK(n.energy == 0.0);
    CHECK(n.euclidean == 0.0);
}

TEST_CASE("norms rejects periodic input") {
    CHECK_THROWS_AS(norms(GridFunction::periodic({1.0, 1.0})), InvalidInputError);
}

TEST_CASE("equivalence constants, closed forms") {
    auto [g1, G1] = equivalence_constants(1);
    CHECK(g1 == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
    CHECK(G1 == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));

    auto [g3, G3] = equivalence_constants(3);
    CHECK(g3 == doctest::Approx(std::sqrt(2.0 - std::sqrt(2.0))).epsilon(1e-10));
    CHECK(G3 == doctest::Approx(std::sqrt(2.0 + std::sqrt(2.0))).epsilon(1e-10));

    CHECK_THROWS_AS(equivalence_constants(0), InvalidInputError);
}

TEST_CASE("norm equivalence brackets random vectors") {
    const int T = 10;
    auto [gamma, gamma1] = equivalence_constants(T);
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<double> v(T);
        for (auto& x : v) x = dist(rng);
        const auto n = norms(GridFunction::dirichlet(v));
        CHECK(n.energy >= gamma * n.euclidean - 1e-12);
        CHECK(n.energy <= gamma1 * n.euclidean + 1e-12);
    }
}

TEST_CASE("equivalence bracket is attained by eigenvectors") {
    for (int T : {1, 3, 10, 50}) {
        auto [gamma, gamma1] = equivalence_constants(T);
        // eigenvectors of tridiag(-1,2,-1): v_k = sin(pi j k / (T+1))
        for (int j : {1, T}) {
            std::vector<double> v(static_cast<size_t>(T));
            for (int k = 1; k <= T; ++k)
                v[static_cast<size_t>(k - 1)] =
                    std::sin(std::numbers::pi * j * k / (T + 1));
            const auto n = norms(GridFunction::dirichlet(v));
            const double ratio = n.energy / n.euclidean;
            const double expected = (j == 1) ? gamma : gamma1;
            CHECK(ratio == doctest::Approx(expected).epsilon(1e-10));
        }
    }
}

TEST_CASE("smallest Rayleigh quotient over random directions approaches gamma^2") {
    const int T = 2;
    auto [gamma, gamma1] = equivalence_constants(T);
    std::mt19937_64 rng(2024);
    std::normal_distribution<double> dist(0.0, 1.0);
    double best = 1e300;
    for (int trial = 0; trial < 10000; ++trial) {
        std::vector<double> v(T);
        for (auto& x : v) x = dist(rng);
        const auto n = norms(GridFunction::dirichlet(v));
        if (n.euclidean > 0.0)
            best = std::min(best, n.energy * n.energy / (n.euclidean * n.euclidean));
    }
    CHECK(best == doctest::Approx(gamma * gamma).epsilon(1e-6));
}

TEST_CASE("grid function boundary invariants are enforced") {
    CHECK_THROWS_AS(GridFunction({0.0, 1.0, 0.5}, BcKind::DirichletZero), InvalidInputError);
    CHECK_THROWS_AS(GridFunction({1.0, 2.0, 3.0}, BcKind::PeriodicType), InvalidInputError);
    CHECK_THROWS_AS(GridFunction({1.0}, BcKind::DirichletZero), InvalidInputError);
    const auto p = GridFunction::periodic({1.0, 2.0, 5.0});
    CHECK(p(0) == 5.0);
    CHECK(p.horizon() == 3);
}
