// Associated Legendre functions of negative order on the cut x > 1.
//
// P: for x < 3 the Pfaff-transformed hypergeometric series in
// (x-1)/(x+1); for larger x the two-term expansion in 1/x^2, which is
// unavailable when deg + 1/2 is an integer (then the Pfaff series is used
// for every x).
// Q: Heine's integral
//   Q = Gamma(d+1)/Gamma(d+mu+1) int_0^inf (x + sqrt(x^2-1) cosh t)^(-d-1)
//       cosh(mu t) dt,  d + 1 > |mu|,
// with the trapezoid rule.

#include <algorithm>
#include <cmath>

#include "common.hpp"
#include "hankel_dual/errors.hpp"
#include "hankel_dual/specfun.hpp"

namespace hdual::specfun {

namespace {

using detail::kEps;
using detail::kPi;

// Gauss series 2F1(a, b; c; z) for |z| < 1. big receives the largest term.
double hyp2f1_series(double a, double b, double c, double z, double& big) {
    double term = 1.0, sum = 1.0;
    big = 1.0;
    for (int k = 0; k < 200000; ++k) {
        term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
        sum += term;
        big = std::max(big, std::fabs(term));
        if (term == 0.0 || (std::fabs(term) < 0.1 * kEps * std::fabs(sum) && k > 2)) return sum;
    }
    throw ConvergenceError("hypergeometric series did not converge", sum, std::fabs(term), 200000);
}

SpecialValue p_pfaff(double d, double mu, double x) {
    const double z = (x - 1.0) / (x + 1.0);
    double big;
    const double f = hyp2f1_series(mu - d, -d, 1.0 + mu, z, big);
    const double pre = std::pow(z, 0.5 * mu) * std::pow(0.5 * (x + 1.0), d) * rgamma(1.0 + mu);
    const double v = pre * f;
    return {v, 16.0 * kEps * (std::fabs(pre) * big + std::fabs(v))};
}

SpecialValue p_large(double d, double mu, double x) {
    // order m = -mu
    const double m = -mu;
    const double w = 1.0 / (x * x);
    const double sq = std::pow(x * x - 1.0, -0.5 * m);
    double big1 = 0.0, big2 = 0.0;
    double t1 = 0.0, t2 = 0.0;
    const double r1 = rgamma(-d - m);
    if (r1 != 0.0) {
        const double f1 = hyp2f1_series(0.5 + 0.5 * d - 0.5 * m, 1.0 + 0.5 * d - 0.5 * m, d + 1.5, w, big1);
        t1 = std::pow(2.0, -d - 1.0) / std::sqrt(kPi) * std::tgamma(-0.5 - d) * std::pow(x, -d + m - 1.0) * sq * r1 *
             f1;
        big1 *= std::fabs(t1 / f1);
    }
    const double r2 = rgamma(1.0 + d - m);
    if (r2 != 0.0) {
        const double f2 = hyp2f1_series(-0.5 * d - 0.5 * m, 0.5 - 0.5 * d - 0.5 * m, 0.5 - d, w, big2);
        t2 = std::pow(2.0, d) / std::sqrt(kPi) * std::tgamma(0.5 + d) * std::pow(x, d + m) * sq * r2 * f2;
        big2 *= std::fabs(t2 / f2);
    }
    const double v = t1 + t2;
    return {v, 16.0 * kEps * (big1 + big2 + std::fabs(t1) + std::fabs(t2))};
}

}  // namespace

SpecialValue legendre_p_negorder(double deg, double mu, double x) {
    if (std::isnan(deg) || std::isnan(mu) || std::isnan(x)) throw DomainError("legendre_p_negorder: NaN argument");
    if (!(x > 1.0)) throw DomainError("legendre_p_negorder: x must exceed 1");
    if (mu < 0.0 && detail::is_integer(1.0 + mu) && 1.0 + mu <= 0.0)
        throw ParameterError("legendre_p_negorder: Gamma(1 + mu) has a pole");
    const bool degenerate = detail::is_integer(deg + 0.5);
    if (x < 3.0 || degenerate) return p_pfaff(deg, mu, x);
    return p_large(deg, mu, x);
}

SpecialValue legendre_q_negorder(double deg, double mu, double x) {
    if (std::isnan(deg) || std::isnan(mu) || std::isnan(x)) throw DomainError("legendre_q_negorder: NaN argument");
    if (!(x > 1.0)) throw DomainError("legendre_q_negorder: x must exceed 1");
    const double am = std::fabs(mu);
    const double rate = deg + 1.0 - am;
    if (!(rate > 0.0)) throw ParameterError("legendre_q_negorder: requires deg + 1 > |mu|");
    const double s = std::sqrt((x - 1.0) * (x + 1.0));
    const double p = -deg - 1.0;
    auto f = [&](double t) { return std::pow(x + s * std::cosh(t), p) * std::cosh(mu * t); };

    // Beyond t0 the integrand behaves like (s e^t / 2)^p e^{|mu| t} / 2;
    // stop once that is below 1e-18 of the value at t = 0.
    const double f0 = std::pow(x + s, p);
    double tmax = 1.0;
    while (tmax < 2000.0) {
        const double lg = p * std::log(x + s * std::cosh(tmax)) + am * tmax;
        if (lg < std::log(f0) - 42.0) break;
        tmax += 1.0;
    }
    double h = 0.5;
    int n = static_cast<int>(std::ceil(tmax / h));
    double sum = 0.5 * f(0.0);
    for (int i = 1; i <= n; ++i) sum += f(i * h);
    double est = sum * h, err = std::fabs(est);
    for (int level = 0; level < 8; ++level) {
        double add = 0.0;
        for (int i = 0; i < n; ++i) add += f((i + 0.5) * h);
        sum += add;
        h /= 2;
        n *= 2;
        const double next = sum * h;
        err = std::fabs(next - est);
        est = next;
        if (level >= 1 && err <= 1e-15 * std::fabs(est)) break;
    }
    const double pre = std::exp(std::lgamma(deg + 1.0) - std::lgamma(deg + mu + 1.0));
    const double v = pre * est;
    return {v, std::fabs(pre) * err + 32.0 * kEps * std::fabs(v)};
}

}  // namespace hdual::specfun
