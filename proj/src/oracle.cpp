#include "kgring/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "kgring/errors.hpp"
#include "kgring/quadrature.hpp"
#include "kgring/specfun.hpp"

namespace kgring::oracle {

namespace {

std::string describe_grid(std::size_t n, double lo, double hi) {
    return std::to_string(n) + " points on [" + std::to_string(lo) + ", " + std::to_string(hi) +
           "]";
}

/// Number of eigenvalues of the symmetric tridiagonal matrix (diag, off) that
/// are strictly below x, by the Sturm sequence of the LDL^T pivots.
int eigenvalues_below(const std::vector<double>& diag, double off_sq, double x) {
    int count = 0;
    double q = 1.0;
    for (std::size_t i = 0; i < diag.size(); ++i) {
        q = (i == 0) ? diag[0] - x : diag[i] - x - off_sq / q;
        if (q == 0.0) q = -1e-300;
        if (q < 0.0) ++count;
    }
    return count;
}

/// k-th smallest eigenvalue (0-based) by bisection on the Sturm count.
double tridiag_eigenvalue(const std::vector<double>& diag, double off, int k) {
    const double abs_off = std::abs(off);
    double lo = diag[0], hi = diag[0];
    for (double d : diag) {
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    lo -= 2.0 * abs_off;
    hi += 2.0 * abs_off;
    const double off_sq = off * off;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        if (eigenvalues_below(diag, off_sq, mid) > k)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

struct SelfConsistentResult {
    double E;
    bool converged;
};

/// Secant iteration on F(E) = theta_k(E) - (E^2 - mu^2).
SelfConsistentResult self_consistent_energy(const std::function<double(double)>& theta_k,
                                            double mu, double E0) {
    const double window = mu * (1.0 - 1e-9);
    const auto clamp = [&](double E) { return std::clamp(E, -window, window); };
    const auto F = [&](double E) { return theta_k(E) - (E * E - mu * mu); };

    double e0 = clamp(E0);
    double e1 = clamp(E0 - 1e-4 * mu);
    double f0 = F(e0);
    double f1 = F(e1);
    const double tol = 1e-8 * mu * mu;
    for (int it = 0; it < 60; ++it) {
        if (std::abs(f1) <= tol) return {e1, true};
        const double denom = f1 - f0;
        if (denom == 0.0) break;
        const double e2 = clamp(e1 - f1 * (e1 - e0) / denom);
        e0 = e1;
        f0 = f1;
        e1 = e2;
        f1 = F(e1);
    }
    return {e1, std::abs(f1) <= tol};
}

EigenCrossCheck run_crosscheck(double mu, double E_analytic,
                               const std::function<double(double, double)>& potential, int k,
                               int N, double r_max) {
    const double h = r_max / N;
    const double off = -1.0 / (h * h);
    std::vector<double> diag(static_cast<std::size_t>(N) - 1);
    const auto theta_k = [&](double E) {
        for (int i = 1; i < N; ++i) {
            const double r = i * h;
            diag[static_cast<std::size_t>(i) - 1] = 2.0 / (h * h) + potential(r, E);
        }
        return tridiag_eigenvalue(diag, off, k);
    };
    const auto [E_numeric, converged] = self_consistent_energy(theta_k, mu, E_analytic);
    return {E_analytic, E_numeric, std::abs(E_analytic - E_numeric), N, r_max, converged};
}

} // namespace

ResidualReport radial_ode_residual(const BoundState& state, std::span<const double> r_grid,
                                   double tolerance) {
    if (r_grid.empty()) throw DomainError("radial_ode_residual: empty grid");
    for (std::size_t i = 0; i < r_grid.size(); ++i) {
        if (!(r_grid[i] > 0.0)) throw DomainError("radial_ode_residual: grid must be positive");
        if (i > 0 && !(r_grid[i] > r_grid[i - 1]))
            throw DomainError("radial_ode_residual: grid must be strictly increasing");
    }
    const auto& it = state.intermediates;
    const auto [A, B] = derive_couplings(state.params);
    const double alpha2_sq = state.params.mu + state.E;
    const double eps = it.eps;
    const double zeta = it.zeta;
    const int n = state.qn.n;

    double max_resid = 0.0;
    double scale = 0.0;
    for (double r : r_grid) {
        const double rho = 2.0 * eps * r;
        const double amp = std::exp(std::log(state.norm) + 0.5 * (1.0 + zeta) * std::log(r) -
                                    eps * r);  // C_nj r^{(1+zeta)/2} e^{-eps r}
        const double L = laguerre(n, zeta, rho).value;
        const double dL = n >= 1 ? -laguerre(n - 1, zeta + 1.0, rho).value : 0.0;
        const double d2L = n >= 2 ? laguerre(n - 2, zeta + 2.0, rho).value : 0.0;

        const double lin = 0.5 * (1.0 + zeta) / r - eps;  // u'/u
        const double u2 = lin * lin - 0.5 * (1.0 + zeta) / (r * r);  // u''/u
        const double g = amp * L;
        const double g2 = amp * (u2 * L + 2.0 * lin * (2.0 * eps * dL) +
                                 4.0 * eps * eps * d2L);

        const double W = 0.25 * (it.M - 1.0) * (it.M - 3.0) / (r * r) -
                         alpha2_sq * (A / r - B / (r * r)) + eps * eps;
        max_resid = std::max(max_resid, std::abs(g2 - W * g));
        scale = std::max({scale, std::abs(g2), std::abs(W * g)});
    }
    const double rel = scale > 0.0 ? max_resid / scale : 0.0;
    return {rel, describe_grid(r_grid.size(), r_grid.front(), r_grid.back()), tolerance,
            rel <= tolerance};
}

ResidualReport angular_ode_residual(const AngularSolution& ang, int ntilde, int D, double C,
                                    double alpha2_sq, std::span<const double> theta_grid,
                                    double tolerance) {
    if (theta_grid.empty()) throw DomainError("angular_ode_residual: empty grid");
    constexpr double pi = 3.14159265358979323846;
    for (double t : theta_grid)
        if (!(t > 0.0 && t < pi))
            throw DomainError("angular_ode_residual: grid must stay inside (0, pi)");

    const double mp = ang.m_prime;
    const double m_sq = mp * mp - C * alpha2_sq;
    const double norm = ang.norm;
    const double lambda = ang.j * (ang.j + D - 2.0);  // equals ang.lambda_sep

    double max_resid = 0.0;
    double scale = 0.0;
    for (double theta : theta_grid) {
        const double s = std::cos(theta);
        const double st = std::sin(theta);
        const double ct = s / st;

        const double P = jacobi_sym(ntilde, mp, s).value;
        const double dP =
            ntilde >= 1 ? 0.5 * (ntilde + 2.0 * mp + 1.0) * jacobi_sym(ntilde - 1, mp + 1.0, s).value
                        : 0.0;
        const double d2P = ntilde >= 2 ? 0.25 * (ntilde + 2.0 * mp + 1.0) * (ntilde + 2.0 * mp + 2.0) *
                                             jacobi_sym(ntilde - 2, mp + 2.0, s).value
                                       : 0.0;

        const double u = std::pow(st, mp);
        const double du = mp * std::pow(st, mp - 1.0) * s;
        const double d2u = mp * (mp - 1.0) * std::pow(st, mp - 2.0) * s * s - mp * u;

        const double p1 = -st * dP;                   // dP/dtheta
        const double p2 = st * st * d2P - s * dP;     // d2P/dtheta2

        const double H = norm * u * P;
        const double H1 = norm * (du * P + u * p1);
        const double H2 = norm * (d2u * P + 2.0 * du * p1 + u * p2);

        const double bracket = (m_sq + C * alpha2_sq * s * s) / (st * st) - lambda;
        max_resid = std::max(max_resid, std::abs(H2 + ct * H1 - bracket * H));
        scale = std::max({scale, std::abs(H2), std::abs(bracket * H)});
    }
    const double rel = scale > 0.0 ? max_resid / scale : 0.0;
    return {rel, describe_grid(theta_grid.size(), theta_grid.front(), theta_grid.back()),
            tolerance, rel <= tolerance};
}

double quadrature_norm(const std::function<double(double)>& f, double a, double b, double tol) {
    return integrate(f, a, b, tol);
}

double quadrature_norm_to_inf(const std::function<double(double)>& f, double a, double tol) {
    return integrate_to_inf(f, a, tol);
}

EigenCrossCheck matrix_eigen_crosscheck(const ModelParams& p, const QuantumNumbers& qn, int N,
                                        double r_max) {
    if (N < 200) throw DomainError("matrix_eigen_crosscheck: N must be >= 200");
    if (!(r_max >= 20.0 * p.r0))
        throw DomainError("matrix_eigen_crosscheck: r_max must be >= 20*r0");
    const BoundState state = solve_bound_state(p, qn);
    const auto [A, B] = derive_couplings(p);
    const auto potential = [&](double r, double E) {
        const double a2 = p.mu + E;
        const double j = solve_angular(p, qn, a2).j;
        const double M = p.D + 2.0 * j;
        return 0.25 * (M - 1.0) * (M - 3.0) / (r * r) - a2 * (A / r - B / (r * r));
    };
    return run_crosscheck(p.mu, state.E, potential, qn.n, N, r_max);
}

EigenCrossCheck matrix_eigen_crosscheck_coulomb(double mu, double A, int n, int ell, int D, int N,
                                                double r_max) {
    if (N < 200) throw DomainError("matrix_eigen_crosscheck_coulomb: N must be >= 200");
    if (!(r_max > 0.0)) throw DomainError("matrix_eigen_crosscheck_coulomb: r_max must be > 0");
    const double E_analytic = coulomb_energy(mu, A * A, n, ell, D);
    const double M = static_cast<double>(D) + 2.0 * ell;
    const auto potential = [=](double r, double E) {
        return 0.25 * (M - 1.0) * (M - 3.0) / (r * r) - (mu + E) * A / r;
    };
    return run_crosscheck(mu, E_analytic, potential, n, N, r_max);
}

} // namespace kgring::oracle
