#pragma once

#include <cmath>
#include <limits>
#include <numbers>

namespace hdual::specfun::detail {

inline constexpr double kEps = std::numeric_limits<double>::epsilon();
inline constexpr double kTiny = 1e-300;
inline constexpr double kPi = std::numbers::pi;

// sin(pi x) and cos(pi x) with exact zeros at integers and half-integers.
inline double sinpi(double x) {
    double r = std::fmod(x, 2.0);
    if (r == std::floor(r)) return 0.0;
    if (std::fabs(r) == 0.5) return r > 0 ? 1.0 : -1.0;
    if (std::fabs(r) == 1.5) return r > 0 ? -1.0 : 1.0;
    return std::sin(kPi * r);
}

inline double cospi(double x) {
    double r = std::fmod(std::fabs(x), 2.0);
    if (r == 0.5 || r == 1.5) return 0.0;
    if (r == 0.0) return 1.0;
    if (r == 1.0) return -1.0;
    return std::cos(kPi * r);
}

inline bool is_integer(double x) { return std::isfinite(x) && x == std::nearbyint(x); }

// Temme's auxiliary gammas for |mu| <= 1/2:
// g1 = (1/G(1-mu) - 1/G(1+mu)) / (2 mu), g2 = (1/G(1-mu) + 1/G(1+mu)) / 2,
// gp = 1/G(1+mu), gm = 1/G(1-mu).
void temme_gammas(double mu, double& g1, double& g2, double& gp, double& gm);

// Trapezoid rule on a double-exponential map for integrals over (0, inf)
// of smooth integrands that decay at least exponentially.
// Returns value; err receives the difference between the last two levels.
template <class F>
double exp_sinh_integral(F&& f, double& err, double rel_tol = 1e-15) {
    // s = exp(u - exp(-u)), ds = s (1 + exp(-u)) du
    auto g = [&](double u) {
        double e = std::exp(-u);
        double s = std::exp(u - e);
        if (s == 0.0 || !std::isfinite(s)) return 0.0;
        double v = f(s);
        return v == 0.0 ? 0.0 : v * s * (1.0 + e);
    };
    const double lo = -4.5, hi = 4.5;
    double h = 0.25;
    double sum = 0.0;
    int n = static_cast<int>(std::lround((hi - lo) / h));
    for (int i = 0; i <= n; ++i) sum += g(lo + i * h);
    double est = sum * h;
    err = std::fabs(est);
    for (int level = 0; level < 7; ++level) {
        double add = 0.0;
        for (int i = 0; i < n; ++i) add += g(lo + (i + 0.5) * h);
        sum += add;
        h /= 2;
        n *= 2;
        double next = sum * h;
        err = std::fabs(next - est);
        est = next;
        if (level >= 1 && err <= rel_tol * std::fabs(est)) break;
    }
    return est;
}

}  // namespace hdual::specfun::detail
