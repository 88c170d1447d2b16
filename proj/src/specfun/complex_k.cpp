// Modified Bessel K of real order and complex argument with Re z > 0.
//
// |z| large: Hankel expansion.  Otherwise the integral
//   K_nu(z) = int_0^inf exp(-z cosh t) cosh(nu t) dt
// by the trapezoid rule, halving the step until two levels agree.  The
// integrand is analytic in a strip around the real t axis, so the rule
// converges geometrically.

#include <cmath>
#include <complex>

#include "common.hpp"
#include "hankel_dual/errors.hpp"
#include "hankel_dual/specfun.hpp"

namespace hdual::specfun {

namespace {

using cplx = std::complex<double>;
using detail::kEps;
using detail::kPi;

bool k_asymptotic(double nu, cplx z, cplx& out, double& err) {
    const double mu = 4.0 * nu * nu;
    cplx term = 1.0, sum = 1.0;
    double prev = 1.0;
    double last = 0.0;
    for (int k = 1; k < 400; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= (mu - odd * odd) / (k * 8.0) / z;
        const double a = std::abs(term);
        if (a == 0.0) {
            last = 0.0;
            break;
        }
        if (a > prev && k > 2) return false;
        sum += term;
        prev = a;
        last = a;
        if (a < 0.1 * kEps) break;
    }
    if (last >= kEps) return false;
    const cplx pre = std::sqrt(kPi / (2.0 * z)) * std::exp(-z);
    out = pre * sum;
    err = std::abs(pre) * (last + 8.0 * kEps * std::abs(sum));
    return true;
}

cplx k_trapezoid(double nu, cplx z, double& err) {
    auto f = [&](double t) { return std::exp(-z * std::cosh(t)) * std::cosh(nu * t); };
    const double rz = z.real();
    // Cut where the integrand magnitude exp(-Re z cosh t + nu t) is
    // below 1e-20 of its value at t = 0.
    double tmax = 1.0;
    while (-rz * std::cosh(tmax) + nu * tmax > -rz - 46.0) tmax += 0.5;

    double h = 0.5;
    int n = static_cast<int>(std::ceil(tmax / h));
    cplx sum = 0.5 * f(0.0);
    for (int i = 1; i <= n; ++i) sum += f(i * h);
    cplx est = sum * h;
    err = std::abs(est);
    for (int level = 0; level < 14; ++level) {
        cplx add = 0.0;
        for (int i = 0; i < n; ++i) add += f((i + 0.5) * h);
        sum += add;
        h /= 2;
        n *= 2;
        const cplx next = sum * h;
        err = std::abs(next - est);
        est = next;
        if (level >= 2 && err <= 1e-15 * std::abs(est)) break;
    }
    err += 16.0 * kEps * std::abs(est);
    return est;
}

}  // namespace

ComplexValue bessel_k(double nu, std::complex<double> z) {
    if (std::isnan(z.real()) || std::isnan(z.imag()) || std::isnan(nu))
        throw DomainError("bessel_k: NaN argument");
    if (!(z.real() > 0.0)) throw DomainError("bessel_k: argument must have positive real part");
    if (z.imag() == 0.0) {
        auto r = bessel_k(nu, z.real());
        return {r.value, 0.0, r.abs_err};
    }
    const double a = std::fabs(nu);
    cplx v;
    double err;
    if (std::abs(z) >= std::max(17.0, a * a) && k_asymptotic(a, z, v, err)) return {v.real(), v.imag(), err};
    v = k_trapezoid(a, z, err);
    return {v.real(), v.imag(), err};
}

}  // namespace hdual::specfun
