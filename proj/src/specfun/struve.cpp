// Struve H of real order nu >= -1/2.
//
// x <= 12: ascending series.  Beyond that H = Y + K_struve, where
//   K_struve(x) = 2 (x/2)^nu / (sqrt(pi) Gamma(nu + 1/2))
//                 * int_0^inf exp(-x t) (1 + t^2)^(nu - 1/2) dt
// is evaluated by its asymptotic series when that reaches full precision
// and by double-exponential quadrature otherwise.

#include <algorithm>
#include <cmath>

#include "common.hpp"
#include "hankel_dual/errors.hpp"
#include "hankel_dual/specfun.hpp"

namespace hdual::specfun {

namespace {

using detail::kEps;
using detail::kPi;

constexpr double kSeriesMax = 12.0;

SpecialValue struve_series(double nu, double x) {
    const double h = 0.5 * x;
    double term = std::pow(h, nu + 1.0) * rgamma(1.5) * rgamma(nu + 1.5);
    double sum = term;
    double big = std::fabs(term);
    const double h2 = h * h;
    for (int k = 0; k < 500; ++k) {
        term *= -h2 / ((k + 1.5) * (k + nu + 1.5));
        sum += term;
        big = std::max(big, std::fabs(term));
        if (std::fabs(term) < 0.1 * kEps * std::fabs(sum)) break;
    }
    return {sum, 8.0 * kEps * (big + std::fabs(sum))};
}

bool kstruve_asymptotic(double nu, double x, double& value, double& err) {
    const double h = 0.5 * x;
    const double h2 = h * h;
    double term = std::sqrt(kPi) * std::pow(h, nu - 1.0) * rgamma(nu + 0.5);
    double sum = term;
    double prev = std::fabs(term);
    bool done = (term == 0.0);
    for (int k = 0; k < 200 && !done; ++k) {
        term *= (k + 0.5) * (nu - 0.5 - k) / h2;
        const double a = std::fabs(term);
        if (a == 0.0) {
            prev = 0.0;
            done = true;
            break;
        }
        if (a > prev) return false;
        sum += term;
        prev = a;
        if (a < 0.1 * kEps * std::fabs(sum)) done = true;
    }
    if (!done) return false;
    value = sum / kPi;
    err = (prev + 4.0 * kEps * std::fabs(sum)) / kPi;
    return true;
}

SpecialValue kstruve_integral(double nu, double x) {
    const double pre = 2.0 * std::pow(0.5 * x, nu) / std::sqrt(kPi) * rgamma(nu + 0.5);
    if (pre == 0.0) return {0.0, 0.0};
    // substitute s = x t
    auto f = [&](double s) {
        const double t = s / x;
        return std::exp(-s) * std::pow(1.0 + t * t, nu - 0.5);
    };
    double qerr;
    const double q = detail::exp_sinh_integral(f, qerr) / x;
    const double v = pre * q;
    return {v, std::fabs(pre) * (qerr / x) + 16.0 * kEps * std::fabs(v)};
}

SpecialValue kstruve(double nu, double x) {
    double v, e;
    if (x >= 30.0 && kstruve_asymptotic(nu, x, v, e)) return {v, e};
    return kstruve_integral(nu, x);
}

}  // namespace

SpecialValue struve_h(double nu, double x) {
    if (std::isnan(x) || std::isnan(nu)) throw DomainError("struve_h: NaN argument");
    if (x < 0.0) throw DomainError("struve_h: x must be non-negative");
    if (nu < -0.5) throw DomainError("struve_h: order below -1/2 is not supported");
    if (x == 0.0) {
        if (nu > -1.0) return {0.0, 0.0};
    }
    if (x <= kSeriesMax) return struve_series(nu, x);
    const auto y = bessel_y(nu, x);
    const auto k = kstruve(nu, x);
    return {y.value + k.value, y.abs_err + k.abs_err};
}

SpecialValue struve_k(double nu, double x) {
    if (std::isnan(x) || std::isnan(nu)) throw DomainError("struve_k: NaN argument");
    if (!(x > 0.0)) throw DomainError("struve_k: x must be positive");
    if (nu < -0.5) throw DomainError("struve_k: order below -1/2 is not supported");
    if (x <= kSeriesMax) {
        const auto h = struve_series(nu, x);
        const auto y = bessel_y(nu, x);
        return {h.value - y.value, h.abs_err + y.abs_err};
    }
    return kstruve(nu, x);
}

}  // namespace hdual::specfun
