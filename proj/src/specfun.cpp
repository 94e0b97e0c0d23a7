#include "kgring/specfun.hpp"

#include <cmath>
#include <string>

#include "kgring/errors.hpp"

namespace kgring {

namespace {

double laguerre_value(int n, double alpha, double x) {
    if (n == 0) return 1.0;
    double pm1 = 1.0;
    double p = 1.0 + alpha - x;
    for (int k = 1; k < n; ++k) {
        const double next = ((2.0 * k + 1.0 + alpha - x) * p - (k + alpha) * pm1) / (k + 1.0);
        pm1 = p;
        p = next;
    }
    return p;
}

double jacobi_sym_value(int n, double a, double s) {
    if (n == 0) return 1.0;
    double pm1 = 1.0;
    double p = (a + 1.0) * s;
    for (int q = 2; q <= n; ++q) {
        // General Jacobi recurrence specialized to alpha = beta = a; the
        // b^2 - a^2 term drops out.
        const double q2a = 2.0 * q + 2.0 * a;
        const double denom = 2.0 * q * (q + 2.0 * a) * (q2a - 2.0);
        const double c1 = (q2a - 1.0) * q2a * (q2a - 2.0);
        const double c2 = 2.0 * (q + a - 1.0) * (q + a - 1.0) * q2a;
        const double next = (c1 * s * p - c2 * pm1) / denom;
        pm1 = p;
        p = next;
    }
    return p;
}

} // namespace

PolyEval laguerre(int n, double alpha, double x) {
    if (n < 0) throw DomainError("laguerre: n must be >= 0");
    if (!(alpha > -1.0)) throw DomainError("laguerre: alpha must be > -1");
    if (!(x >= 0.0)) throw DomainError("laguerre: x must be >= 0");
    const double value = laguerre_value(n, alpha, x);
    const double deriv = n == 0 ? 0.0 : -laguerre_value(n - 1, alpha + 1.0, x);
    return {value, deriv};
}

PolyEval jacobi_sym(int n, double alpha, double s) {
    if (n < 0) throw DomainError("jacobi_sym: n must be >= 0");
    if (!(alpha > -1.0)) throw DomainError("jacobi_sym: alpha must be > -1");
    if (!(std::abs(s) <= 1.0)) throw DomainError("jacobi_sym: s must lie in [-1, 1]");
    const double value = jacobi_sym_value(n, alpha, s);
    const double deriv =
        n == 0 ? 0.0 : 0.5 * (n + 2.0 * alpha + 1.0) * jacobi_sym_value(n - 1, alpha + 1.0, s);
    return {value, deriv};
}

double log_gamma(double x) {
    if (!(x > 0.0)) throw DomainError("log_gamma: x must be > 0 (got " + std::to_string(x) + ")");
    return std::lgamma(x);
}

} // namespace kgring
