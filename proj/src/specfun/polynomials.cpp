#include <algorithm>
#include <cmath>
#include <string>

#include "common.hpp"
#include "hankel_dual/errors.hpp"
#include "hankel_dual/specfun.hpp"

namespace hdual::specfun {

using detail::kEps;

SpecialValue hyp2f1_terminating(double a, int n, double c, double x) {
    if (n < 0) throw DomainError("hyp2f1_terminating: n must be non-negative");
    for (int k = 0; k < n; ++k) {
        if (c + k == 0.0)
            throw ParameterError("hyp2f1_terminating: c + " + std::to_string(k) + " vanishes");
    }
    double term = 1.0, sum = 1.0, big = 1.0;
    for (int k = 0; k < n; ++k) {
        term *= (a + k) * (k - n) / ((c + k) * (k + 1.0)) * x;
        sum += term;
        big = std::max(big, std::fabs(term));
    }
    return {sum, 4.0 * (n + 1) * kEps * big};
}

SpecialValue jacobi_p(int n, double alpha, double beta, double x) {
    if (n < 0) throw DomainError("jacobi_p: degree must be non-negative");
    if (n == 0) return {1.0, 0.0};
    const double ab = alpha + beta;
    double p0 = 1.0;
    double p1 = 0.5 * (alpha - beta + (ab + 2.0) * x);
    double scale = std::max(std::fabs(p0), std::fabs(p1));
    for (int k = 2; k <= n; ++k) {
        const double s = 2.0 * k + ab;
        const double a1 = 2.0 * k * (k + ab) * (s - 2.0);
        const double a2 = (s - 1.0) * (alpha * alpha - beta * beta);
        const double a3 = (s - 2.0) * (s - 1.0) * s;
        const double a4 = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * s;
        const double p2 = ((a2 + a3 * x) * p1 - a4 * p0) / a1;
        p0 = p1;
        p1 = p2;
        scale = std::max(scale, std::fabs(p1));
    }
    return {p1, 4.0 * (n + 1) * kEps * scale};
}

SpecialValue chebyshev_t(int n, double x) {
    if (n < 0) throw DomainError("chebyshev_t: degree must be non-negative");
    if (!(std::fabs(x) <= 1.0)) throw DomainError("chebyshev_t: |x| must not exceed 1");
    if (n == 0) return {1.0, 0.0};
    double t0 = 1.0, t1 = x;
    for (int k = 2; k <= n; ++k) {
        const double t2 = 2.0 * x * t1 - t0;
        t0 = t1;
        t1 = t2;
    }
    return {t1, 2.0 * (n + 1) * kEps};
}

}  // namespace hdual::specfun
