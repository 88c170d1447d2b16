// Accuracy contract for specfun: identities and 50-digit oracles.  Shared
// by test_specfun and the acceptance binary.
#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <string>

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "hankel_dual/specfun.hpp"

namespace contract {

using hp = boost::multiprecision::cpp_bin_float_50;
namespace sf = hdual::specfun;
inline constexpr double kPi = std::numbers::pi;

struct Check {
    std::string name;
    double got = 0.0;
    double want = 0.0;
    double err = 0.0;    // measured error
    double bound = 0.0;  // allowed error
    bool ok() const { return err <= bound; }
};
using Sink = std::function<void(const Check&)>;

inline std::string label(const char* what, double a, double b) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%s(%g, %g)", what, a, b);
    return buf;
}

inline void rel(const Sink& sink, std::string name, double got, double want, double tol, double scale = 0.0) {
    const double s = scale > 0 ? scale : std::fabs(want);
    sink({std::move(name), got, want, std::fabs(got - want), tol * s});
}

inline void absolute(const Sink& sink, std::string name, double got, double want, double tol) {
    sink({std::move(name), got, want, std::fabs(got - want), tol});
}

// Log-spaced sample points.
inline double logspace(double lo, double hi, int i, int n) {
    return lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
}

// J_{nu-1} + J_{nu+1} = (2 nu / x) J_nu.
inline void recurrence(const Sink& sink) {
    for (double nu : {0.5, 1.0, 2.5}) {
        for (int i = 0; i < 40; ++i) {
            const double x = logspace(0.1, 40, i, 40);
            const double a = sf::bessel_j(nu - 1, x).value, b = sf::bessel_j(nu + 1, x).value;
            const double c = 2 * nu / x * sf::bessel_j(nu, x).value;
            rel(sink, label("recurrence J", nu, x), a + b, c, 1e-10, std::fabs(a) + std::fabs(b) + std::fabs(c));
        }
    }
}

// J Y' - J' Y = 2/(pi x) and I K' - I' K = -1/x, derivatives by recurrence.
inline void wronskians(const Sink& sink) {
    for (double nu : {0.0, 0.5, 1.0, 2.5}) {
        for (int i = 0; i < 15; ++i) {
            const double x = logspace(0.1, 40, i, 15);
            const double j = sf::bessel_j(nu, x).value, y = sf::bessel_y(nu, x).value;
            const double jp = -sf::bessel_j(nu + 1, x).value + nu / x * j;
            const double yp = -sf::bessel_y(nu + 1, x).value + nu / x * y;
            rel(sink, label("wronskian JY", nu, x), j * yp - jp * y, 2 / (kPi * x), 1e-9);
        }
        for (int i = 0; i < 15; ++i) {
            const double x = logspace(0.1, 30, i, 15);
            const double in = sf::bessel_i(nu, x).value, k = sf::bessel_k(nu, x).value;
            const double ip = sf::bessel_i(nu + 1, x).value + nu / x * in;
            const double kp = -sf::bessel_k(nu + 1, x).value + nu / x * k;
            rel(sink, label("wronskian IK", nu, x), in * kp - ip * k, -1 / x, 1e-9);
        }
    }
}

// Elementary forms of the order-1/2 functions.
inline void half_integer(const Sink& sink) {
    for (int i = 0; i < 20; ++i) {
        const double x = logspace(0.05, 30, i, 20);
        const double amp = std::sqrt(2 / (kPi * x));
        rel(sink, label("J_1/2", 0.5, x), sf::bessel_j(0.5, x).value, amp * std::sin(x), 1e-12, amp);
        rel(sink, label("Y_1/2", 0.5, x), sf::bessel_y(0.5, x).value, -amp * std::cos(x), 1e-12, amp);
        rel(sink, label("I_1/2", 0.5, x), sf::bessel_i(0.5, x).value, amp * std::sinh(x), 1e-12);
        rel(sink, label("K_1/2", 0.5, x), sf::bessel_k(0.5, x).value, std::sqrt(kPi / (2 * x)) * std::exp(-x), 1e-12);
        rel(sink, label("H_1/2", 0.5, x), sf::struve_h(0.5, x).value, amp * (1 - std::cos(x)), 1e-12, amp);
    }
}

// T_n(cos t) = cos(n t).
inline void chebyshev(const Sink& sink) {
    for (int n = 0; n <= 12; ++n) {
        for (int i = 0; i < 10; ++i) {
            const double t = 0.05 + i * 0.33;
            absolute(sink, label("chebyshev T", n, t), sf::chebyshev_t(n, std::cos(t)).value, std::cos(n * t), 1e-13);
        }
    }
}

// Struve H by its ascending series at 50 digits.
inline double struve_oracle(double nu, double x) {
    hp sum = 0, hx = hp(x) / 2;
    for (int k = 0; k < 400; ++k) {
        const hp term = boost::multiprecision::pow(hx, 2 * k + nu + 1) /
                        (boost::math::tgamma(hp(k) + hp(1.5)) * boost::math::tgamma(hp(k) + hp(nu) + hp(1.5)));
        sum += (k % 2 ? -term : term);
        if (k > 2 * x && boost::multiprecision::abs(term) < hp(1e-40) * boost::multiprecision::abs(sum)) break;
    }
    return static_cast<double>(sum);
}

// P_d(x) = 2F1(-d, d+1; 1; (1-x)/2) for x < 3, summed at 50 digits.
inline double legendre_p_oracle(double d, double x) {
    hp sum = 1, term = 1, z = (hp(1) - hp(x)) / 2;
    for (int k = 0; k < 2000; ++k) {
        term *= (hp(-d) + k) * (hp(d) + 1 + k) / ((hp(1) + k) * (hp(1) + k)) * z;
        sum += term;
        if (boost::multiprecision::abs(term) < hp(1e-45)) break;
    }
    return static_cast<double>(sum);
}

// Explicit Jacobi sum with gamma-function binomials.
inline double jacobi_oracle(int n, double a, double b, double x) {
    auto binom = [](hp top, int k) {
        return boost::math::tgamma(top + 1) / (boost::math::tgamma(hp(k) + 1) * boost::math::tgamma(top - k + 1));
    };
    hp sum = 0;
    for (int s = 0; s <= n; ++s)
        sum += binom(hp(n) + a, n - s) * binom(hp(n) + b, s) * boost::multiprecision::pow((hp(x) - 1) / 2, s) *
               boost::multiprecision::pow((hp(x) + 1) / 2, n - s);
    return static_cast<double>(sum);
}

inline void oracles(const Sink& sink) {
    for (double nu : {0.0, 0.5, 1.0, 2.5, 7.3}) {
        for (double x : {0.01, 0.7, 2.0, 9.5, 33.0, 49.0}) {
            const double j = static_cast<double>(boost::math::cyl_bessel_j(hp(nu), hp(x)));
            const double y = static_cast<double>(boost::math::cyl_neumann(hp(nu), hp(x)));
            // Amplitude scale: the absolute contract applies near zeros.
            const double amp = std::max(std::fabs(j), 1e-3 * std::sqrt(2 / (kPi * x)));
            rel(sink, label("J oracle", nu, x), sf::bessel_j(nu, x).value, j, 1e-12, amp);
            rel(sink, label("Y oracle", nu, x), sf::bessel_y(nu, x).value, y, 1e-12,
                std::max(std::fabs(y), 1e-3 * std::sqrt(2 / (kPi * x))));
        }
        for (double x : {0.01, 0.7, 2.0, 9.5, 29.0}) {
            const double i = static_cast<double>(boost::math::cyl_bessel_i(hp(nu), hp(x)));
            const double k = static_cast<double>(boost::math::cyl_bessel_k(hp(nu), hp(x)));
            rel(sink, label("I oracle", nu, x), sf::bessel_i(nu, x).value, i, 1e-12);
            rel(sink, label("K oracle", nu, x), sf::bessel_k(nu, x).value, k, 1e-11);
        }
    }
    for (double x : {-49.5, -10.3, -0.5, 0.1, 0.5, 1.0, 3.7, 25.5, 100.2, 169.5}) {
        const double g = static_cast<double>(boost::math::tgamma(hp(x)));
        rel(sink, label("gamma oracle", x, 0), sf::gamma_fn(x).value, g, 1e-13);
    }
    for (double nu : {0.0, 0.25, 1.0}) {
        for (double x : {0.3, 1.0, 5.0, 20.0, 40.0})
            rel(sink, label("struve oracle", nu, x), sf::struve_h(nu, x).value, struve_oracle(nu, x), 1e-10);
    }
    rel(sink, "legendre P(0.5, 0, 2)", sf::legendre_p_negorder(0.5, 0, 2).value, legendre_p_oracle(0.5, 2), 1e-9);
    rel(sink, "legendre P(-0.25, 0, 1.5)", sf::legendre_p_negorder(-0.25, 0, 1.5).value,
        legendre_p_oracle(-0.25, 1.5), 1e-9);
    rel(sink, "legendre Q(0, 0, 3)", sf::legendre_q_negorder(0, 0, 3).value, 0.5 * std::log(2.0), 1e-9);
    for (double x : {1.5, 2.0, 10.0, 90.0})
        rel(sink, label("legendre Q0", 0, x), sf::legendre_q_negorder(0, 0, x).value,
            0.5 * std::log((x + 1) / (x - 1)), 1e-9);
    for (int n : {2, 5, 10})
        for (double x : {-0.9, 0.3, 1.0})
            rel(sink, label("jacobi oracle", n, x), sf::jacobi_p(n, 1.5, 0.0, x).value, jacobi_oracle(n, 1.5, 0, x),
                1e-12, std::max(1.0, std::fabs(jacobi_oracle(n, 1.5, 0, x))));
    // Three-term sum: 2F1(3, -2; 1; 1/4) = 1 - 6/4 + 6/16 = -1/8.
    rel(sink, "hyp2f1(3, -2; 1; 0.25)", sf::hyp2f1_terminating(3, 2, 1, 0.25).value, -0.125, 1e-13);
    absolute(sink, "hyp2f1(2, -1; 1; 0.5)", sf::hyp2f1_terminating(2, 1, 1, 0.5).value, 0.0, 1e-15);
    const std::complex<double> z = 2.0 * std::polar(1.0, kPi / 4);
    const auto kz = sf::bessel_k(0.0, z), kc = sf::bessel_k(0.0, std::conj(z));
    absolute(sink, "K conj symmetry re", kc.re, kz.re, 1e-14);
    absolute(sink, "K conj symmetry im", kc.im, -kz.im, 1e-14);
    const auto kr = sf::bessel_k(0.5, std::complex<double>(1.0, 0.0));
    rel(sink, "K complex real axis", kr.re, std::sqrt(kPi / 2) * std::exp(-1.0), 1e-11);
    const auto khalf = sf::bessel_k(0.5, z);
    const auto want = std::sqrt(kPi / (2.0 * z)) * std::exp(-z);
    rel(sink, "K_1/2 on the pi/4 ray", std::abs(khalf.z() - want), 0.0, 1e-9, std::abs(want));
    for (int k = 1; k <= 5; ++k) absolute(sink, label("zero J_1/2", 0.5, k), sf::bessel_zero(0.5, k), k * kPi, 1e-12);
    absolute(sink, "zero J_0 #1", sf::bessel_zero(0, 1), 2.404825557695773, 1e-12);
    absolute(sink, "zero spacing J_0 #50", sf::bessel_zero(0, 51) - sf::bessel_zero(0, 50), kPi, 1e-3);
}

// Runs every contract check; returns the number of assertions made.
inline int run_all(const Sink& sink) {
    int n = 0;
    Sink counting = [&](const Check& c) {
        ++n;
        sink(c);
    };
    recurrence(counting);
    wronskians(counting);
    half_integer(counting);
    chebyshev(counting);
    oracles(counting);
    return n;
}

}  // namespace contract
