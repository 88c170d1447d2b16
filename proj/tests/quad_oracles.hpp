// Pinned oracle comparisons for the abs_err honesty contract: every
// reported error bound must cover the true error within a factor of 5.
// Shared by test_quad and the acceptance binary.
#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include <boost/math/special_functions/bessel.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "hankel_dual/hankel.hpp"
#include "hankel_dual/quad.hpp"
#include "hankel_dual/specfun.hpp"

namespace oracle {

using hp = boost::multiprecision::cpp_bin_float_50;
namespace q = hdual::quad;
namespace sf = hdual::specfun;
inline constexpr double kPi = std::numbers::pi;

struct Case {
    std::string name;
    double value = 0.0;
    double abs_err = 0.0;
    double oracle = 0.0;

    double error() const { return std::fabs(value - oracle); }
    double allowed() const { return 5 * abs_err; }
    bool honest() const { return error() <= allowed(); }
};

inline double J(double nu, double x) { return static_cast<double>(boost::math::cyl_bessel_j(hp(nu), hp(x))); }
inline double Y(double nu, double x) { return static_cast<double>(boost::math::cyl_neumann(hp(nu), hp(x))); }
inline double K(double nu, double x) { return static_cast<double>(boost::math::cyl_bessel_k(hp(nu), hp(x))); }

inline Case from(std::string name, const q::QuadResult& r, double want) {
    return {std::move(name), r.value, r.abs_err, want};
}
inline Case from(std::string name, const sf::SpecialValue& v, double want) {
    return {std::move(name), v.value, v.abs_err, want};
}

inline q::OscillationSpec kernel_j(double order, q::Decay decay = q::Decay::Algebraic) {
    q::OscillationSpec o;
    o.bessel_order = order;
    o.decay = decay;
    return o;
}

inline std::vector<Case> pinned_cases() {
    using q::Interval;
    using q::Singularity;
    std::vector<Case> out;
    const double tol = 1e-10;

    out.push_back(from("int_0^1 x", q::integrate_finite([](double x) { return x; }, Interval::finite_from_zero(1), tol),
                       0.5));
    out.push_back(from("arcsine integral",
                       q::integrate_finite([](double b) { return 1 / std::sqrt(4 - b * b); },
                                           Interval::finite_from_zero(2, Singularity::InverseSqrtAtUpper), tol),
                       kPi / 2));
    out.push_back(from("int_0^1 ln(1-b^2)",
                       q::integrate_finite([](double b) { return std::log1p(-b * b); },
                                           Interval::finite_from_zero(1, Singularity::LogAtUpper), tol),
                       2 * std::log(2.0) - 2));
    out.push_back(from("int_0^1 1/sqrt(b(1-b))",
                       q::integrate_finite([](double b) { return 1 / std::sqrt(b * (1 - b)); },
                                           Interval::segment(0, 1, Singularity::InverseSqrtAtBoth), tol),
                       kPi));
    out.push_back(from("int_0^inf e^-x", q::integrate_infinite([](double x) { return std::exp(-x); }, 0, tol), 1.0));
    out.push_back(from("int_0^inf 1/(1+x^2)",
                       q::integrate_infinite([](double x) { return 1 / (1 + x * x); }, 0, tol), kPi / 2));
    out.push_back(from("Laplace transform of J_0",
                       q::integrate_oscillatory_tail([](double t) { return std::exp(-t); },
                                                     kernel_j(0, q::Decay::Exponential), 0, tol),
                       1 / std::sqrt(2.0)));
    out.push_back(from("int_0^inf J_1",
                       q::integrate_oscillatory_tail([](double) { return 1.0; }, kernel_j(1), 0, tol), 1.0));
    out.push_back(from("int_0^inf c J_0(c)/(1+c^2)",
                       q::integrate_oscillatory_tail([](double c) { return c / (1 + c * c); }, kernel_j(0), 0, tol),
                       K(0, 1)));
    out.push_back(from("Gaussian Hankel pair",
                       q::integrate_entry([](double t) { return t * std::exp(-t * t / 2); }, Interval::full_half_line(),
                                          kernel_j(0), tol),
                       std::exp(-0.5)));
    out.push_back(from("tail from 2 of J_0(t)/sqrt(t^2-4)",
                       q::integrate_entry([](double t) { return 1 / std::sqrt(t * t - 4); },
                                          Interval::tail(2, Singularity::InverseSqrtAtLower), kernel_j(0), tol),
                       -kPi / 2 * J(0, 1) * Y(0, 1)));
    out.push_back(from("int_0^1 t J_0(t)",
                       q::integrate_entry([](double t) { return t; }, Interval::finite_from_zero(1), kernel_j(0), tol),
                       J(1, 1)));

    hdual::hankel::SeedFunction gauss;
    gauss.eval = [](double x) { return std::exp(-x * x / 2); };
    gauss.exponential_decay = true;
    out.push_back(from("forward Gaussian at b=1", hdual::hankel::hankel_forward(gauss, 0, 1, tol), std::exp(-0.5)));
    hdual::hankel::SeedFunction k0;
    k0.eval = [](double x) { return sf::bessel_k(0, x).value; };
    k0.exponential_decay = true;
    out.push_back(from("forward K_0 at b=1", hdual::hankel::hankel_forward(k0, 0, 1, tol), 0.5));

    out.push_back(from("J_2.5(9.5)", sf::bessel_j(2.5, 9.5), J(2.5, 9.5)));
    out.push_back(from("Y_1(3)", sf::bessel_y(1, 3), Y(1, 3)));
    out.push_back(from("K_0(1)", sf::bessel_k(0, 1.0), K(0, 1)));
    out.push_back(from("K_7.3(0.7)", sf::bessel_k(7.3, 0.7), K(7.3, 0.7)));
    return out;
}

}  // namespace oracle
