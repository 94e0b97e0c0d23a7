#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "kgring/errors.hpp"
#include "kgring/oracle.hpp"
#include "kgring/quadrature.hpp"

using namespace kgring;

namespace {

std::vector<double> log_grid(double lo, double hi, std::size_t n) {
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i) g[i] = lo * std::pow(hi / lo, i / (n - 1.0));
    return g;
}

std::vector<double> lin_grid(double lo, double hi, std::size_t n) {
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i) g[i] = lo + (hi - lo) * i / (n - 1.0);
    return g;
}

} // namespace

TEST_CASE("radial ODE residual for the kratzer ground state") {
    const ModelParams p{1.0, 0.25, 2.0};
    const BoundState state = solve_bound_state(p, {0, 0, 0});
    const auto grid = log_grid(0.1 * p.r0, 10.0 * p.r0, 400);

    const auto report = oracle::radial_ode_residual(state, grid);
    CHECK(report.max_rel_residual <= 1e-7);
    CHECK(report.pass);

    SUBCASE("perturbed energy is detected") {
        BoundState off = state;
        off.E += 1e-3;
        off.intermediates = radial_intermediates(p, off.angular.j, off.E);
        const auto bad = oracle::radial_ode_residual(off, grid);
        CHECK(bad.max_rel_residual > 1e-3);
    }

    SUBCASE("grid validation") {
        CHECK_THROWS_AS(oracle::radial_ode_residual(state, std::vector<double>{-1.0, 2.0}),
                        DomainError);
        CHECK_THROWS_AS(oracle::radial_ode_residual(state, std::vector<double>{2.0, 1.0}),
                        DomainError);
        CHECK_THROWS_AS(oracle::radial_ode_residual(state, std::vector<double>{}), DomainError);
    }
}

TEST_CASE("angular ODE residual") {
    SUBCASE("constant solution") {
        const ModelParams p{1.0, 1.0, 1.0, 0.0, 3};
        const AngularSolution ang = solve_angular(p, {0, 0, 0}, 1.0);
        const auto report =
            oracle::angular_ode_residual(ang, 0, 3, 0.0, 1.0, lin_grid(0.1, std::numbers::pi - 0.1, 200));
        CHECK(report.max_rel_residual <= 1e-9);
    }
    SUBCASE("ring-coupled state") {
        const ModelParams p{1.0, 1.0, 1.0, 0.5, 3};
        const double a2 = 1.4;
        const AngularSolution ang = solve_angular(p, {0, 2, 1}, a2);
        const auto report = oracle::angular_ode_residual(
            ang, 2, 3, 0.5, a2, lin_grid(0.1, std::numbers::pi - 0.1, 400));
        CHECK(report.max_rel_residual <= 1e-7);
        CHECK(report.pass);
    }
    SUBCASE("grid touching the poles is rejected") {
        const ModelParams p{1.0, 1.0, 1.0, 0.0, 3};
        const AngularSolution ang = solve_angular(p, {0, 0, 0}, 1.0);
        CHECK_THROWS_AS(
            oracle::angular_ode_residual(ang, 0, 3, 0.0, 1.0, std::vector<double>{0.0, 1.0}),
            DomainError);
        CHECK_THROWS_AS(oracle::angular_ode_residual(ang, 0, 3, 0.0, 1.0,
                                                     std::vector<double>{1.0, std::numbers::pi}),
                        DomainError);
    }
}

TEST_CASE("adaptive quadrature reference integrals") {
    CHECK(integrate_to_inf([](double r) { return std::exp(-2.0 * r); }) ==
          doctest::Approx(0.5).epsilon(1e-10));
    // frozen: sqrt(pi) Gamma(1.8) / Gamma(2.3)
    CHECK(integrate([](double s) { return std::pow(1.0 - s * s, 0.8); }, -1.0, 1.0) ==
          doctest::Approx(1.414946349814135239).epsilon(1e-10));
    CHECK(integrate([](double) { return 1.0 / (2.0 * std::numbers::pi); }, 0.0,
                    2.0 * std::numbers::pi) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(integrate([](double x) { return std::cos(50.0 / (x + 1e-3)); }, 0.0, 1.0,
                              1e-14, 3),
                    NonConvergence);
}

TEST_CASE("matrix eigenvalue cross-check") {
    SUBCASE("coulomb ground state") {
        const auto check = oracle::matrix_eigen_crosscheck_coulomb(1.0, 1.0, 0, 0, 3, 1000, 200.0);
        CHECK(check.converged);
        CHECK(check.E_analytic == doctest::Approx(0.6).epsilon(1e-12));
        CHECK(check.gap <= 2.5e-3);  // O(h^2) constant ~0.05 at h = 0.2
    }
    SUBCASE("kratzer ground state") {
        const ModelParams p{1.0, 0.25, 2.0};
        const auto check = oracle::matrix_eigen_crosscheck(p, {0, 0, 0}, 1000, 200.0);
        CHECK(check.converged);
        CHECK(check.gap <= 2e-3);
    }
    SUBCASE("determinism") {
        const ModelParams p{1.0, 0.25, 2.0};
        const auto a = oracle::matrix_eigen_crosscheck(p, {0, 0, 0}, 400, 100.0);
        const auto b = oracle::matrix_eigen_crosscheck(p, {0, 0, 0}, 400, 100.0);
        CHECK(a.E_numeric == b.E_numeric);
        CHECK(a.gap == b.gap);
    }
    SUBCASE("preconditions") {
        const ModelParams p{1.0, 0.25, 2.0};
        CHECK_THROWS_AS(oracle::matrix_eigen_crosscheck(p, {0, 0, 0}, 100, 200.0), DomainError);
        CHECK_THROWS_AS(oracle::matrix_eigen_crosscheck(p, {0, 0, 0}, 1000, 10.0), DomainError);
    }
}
