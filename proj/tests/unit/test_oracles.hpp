#pragma once

// Independent reference implementations used only by tests. These deliberately
// avoid the recurrence paths of the production code: Laguerre and Jacobi come
// from explicit series with log-gamma binomials.

#include <cmath>

namespace testoracle {

/// L_n^alpha(x) = sum_{k=0..n} (-1)^k C(n+alpha, n-k) x^k / k!
inline double laguerre_series(int n, double alpha, double x) {
    double sum = 0.0;
    double sign = 1.0;
    for (int k = 0; k <= n; ++k) {
        const double log_binom = std::lgamma(n + alpha + 1.0) - std::lgamma(alpha + k + 1.0) -
                                 std::lgamma(n - k + 1.0);
        const double log_pow = k > 0 ? k * std::log(x) : 0.0;
        sum += sign * std::exp(log_binom + log_pow - std::lgamma(k + 1.0));
        sign = -sign;
    }
    return sum;
}

/// P_n^{(a,b)}(x) via the terminating hypergeometric-style sum
/// P_n = Gamma(a+n+1)/(n! Gamma(a+b+n+1)) sum_k C(n,k) Gamma(a+b+n+k+1)/Gamma(a+k+1) ((x-1)/2)^k
inline double jacobi_series(int n, double a, double b, double x) {
    double sum = 0.0;
    for (int k = 0; k <= n; ++k) {
        const double log_c = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                             std::lgamma(n - k + 1.0) + std::lgamma(a + b + n + k + 1.0) -
                             std::lgamma(a + k + 1.0);
        sum += std::exp(log_c) * std::pow(0.5 * (x - 1.0), k);
    }
    return std::exp(std::lgamma(a + n + 1.0) - std::lgamma(n + 1.0) -
                    std::lgamma(a + b + n + 1.0)) *
           sum;
}

template <typename F>
double central_diff(F&& f, double x, double h = 1e-5) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

} // namespace testoracle
