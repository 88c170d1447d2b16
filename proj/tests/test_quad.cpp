#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hankel_dual/errors.hpp"
#include "hankel_dual/quad.hpp"
#include "hankel_dual/specfun.hpp"
#include "quad_oracles.hpp"

using namespace hdual;
using namespace hdual::quad;
using std::numbers::pi;

TEST_CASE("pinned oracle values and abs_err honesty") {
    for (const auto& c : oracle::pinned_cases()) {
        INFO(c.name << ": value " << c.value << ", oracle " << c.oracle << ", abs_err " << c.abs_err);
        CHECK(c.error() <= 1e-9 * (1 + std::fabs(c.oracle)));
        CHECK(c.honest());
    }
}

TEST_CASE("finite integrals with endpoint substitutions") {
    // int_0^{2a} T_0(b/2a) / sqrt(4a^2 - b^2) db with a = 1.
    auto r = integrate_finite([](double b) { return specfun::chebyshev_t(0, b / 2).value / std::sqrt(4 - b * b); },
                              Interval::finite_from_zero(2, Singularity::InverseSqrtAtUpper), 1e-12);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(pi / 2).epsilon(1e-12));
    // int_0^1 x^{-1/2} = 2.
    r = integrate_finite([](double x) { return 1 / std::sqrt(x); },
                         Interval::segment(0, 1, Singularity::InverseSqrtAtLower), 1e-12);
    CHECK(r.value == doctest::Approx(2).epsilon(1e-12));
    // int_0^1 x^2 / sqrt(1 - x^2) = pi / 4.
    r = integrate_finite([](double x) { return x * x / std::sqrt(1 - x * x); },
                         Interval::finite_from_zero(1, Singularity::InverseSqrtAtUpper), 1e-12);
    CHECK(r.value == doctest::Approx(pi / 4).epsilon(1e-12));
}

TEST_CASE("additivity over random split points") {
    std::mt19937 rng(20240611);
    std::uniform_real_distribution<double> u(0.1, 3.0);
    for (int i = 0; i < 25; ++i) {
        const double w = u(rng), upper = 1 + u(rng), mid = upper * (0.1 + 0.8 * u(rng) / 3.0);
        auto f = [w](double x) { return std::exp(-w * x) * std::cos(3 * w * x) + x * x; };
        const double whole = integrate_finite(f, Interval::segment(0, upper), 1e-12).value;
        const double parts = integrate_finite(f, Interval::segment(0, mid), 1e-12).value +
                             integrate_finite(f, Interval::segment(mid, upper), 1e-12).value;
        CHECK(whole == doctest::Approx(parts).epsilon(1e-11));
    }
}

TEST_CASE("Wynn epsilon accelerates the alternating harmonic series") {
    WynnEpsilon w;
    double s = 0;
    for (int k = 1; k <= 20; ++k) {
        s += (k % 2 ? 1.0 : -1.0) / k;
        w.push(s);
    }
    CHECK(w.size() == 20);
    CHECK(std::fabs(s - std::log(2.0)) > 1e-2);  // raw partial sum is far off
    CHECK(w.estimate() == doctest::Approx(std::log(2.0)).epsilon(1e-11));
    CHECK(w.error() < 1e-9);
}

TEST_CASE("lobes of J_0 alternate in sign") {
    OscillationSpec osc;
    const auto lobes = lobe_integrals([](double) { return 1.0; }, osc, 0, 30, 1e-12);
    REQUIRE(lobes.size() == 30);
    for (std::size_t i = 1; i < lobes.size(); ++i) CHECK(lobes[i] * lobes[i - 1] < 0);
    // Lobe magnitudes decay like t^{-1/2}.
    CHECK(std::fabs(lobes[29]) < std::fabs(lobes[1]));
}

TEST_CASE("oscillatory tail with scaled and warped kernels") {
    // int_0^inf J_0(2t) dt = 1/2.
    OscillationSpec osc;
    osc.frequency = 2;
    auto r = integrate_oscillatory_tail([](double) { return 1.0; }, osc, 0, 1e-10);
    CHECK(r.value == doctest::Approx(0.5).epsilon(1e-9));
    // int_0^inf J_1(sqrt t) dt / sqrt t = 2 int_0^inf J_1(u) du = 2.
    osc = {};
    osc.bessel_order = 1;
    osc.power = 0.5;
    r = integrate_oscillatory_tail([](double t) { return 1 / std::sqrt(t); }, osc, 0, 1e-10,
                                   Singularity::InverseSqrtAtLower);
    CHECK(r.value == doctest::Approx(2).epsilon(1e-8));
    // Y kernel: int_0^inf Y_0(t) dt = 0.
    osc = {};
    osc.kind = specfun::BesselKind::Y;
    r = integrate_entry([](double) { return 1.0; }, Interval::full_half_line(), osc, 1e-10);
    CHECK(std::fabs(r.value) < 1e-8);
}

TEST_CASE("stepped tail") {
    // int_1^inf sin(t)/t dt = pi/2 - Si(1).
    const double si1 = 0.946083070367183;
    auto r = integrate_tail_stepped([](double t) { return std::sin(t) / t; }, 1, pi, 1e-10);
    CHECK(r.value == doctest::Approx(pi / 2 - si1).epsilon(1e-9));
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(integrate_finite([](double x) { return x; }, Interval::finite_from_zero(1), 0.0), DomainError);
    CHECK_THROWS_AS(Interval::finite_from_zero(-1), DomainError);
    CHECK_THROWS_AS(Interval::segment(2, 1), DomainError);
    CHECK_THROWS_AS(integrate_finite([](double x) { return x; }, Interval::tail(1), 1e-8), DomainError);
    // Budget exhaustion carries the partial result.
    try {
        integrate_finite([](double x) { return std::sin(1 / x); }, Interval::segment(1e-6, 1), 1e-14, 100);
        FAIL("expected ConvergenceError");
    } catch (const ConvergenceError& e) {
        CHECK(std::isfinite(e.partial()));
        CHECK(e.evaluations() > 0);
    }
    OscillationSpec bad;
    bad.frequency = 0;
    CHECK_THROWS_AS(integrate_oscillatory_tail([](double) { return 1.0; }, bad, 0, 1e-8), DomainError);
}

TEST_CASE("converged results meet the requested tolerance") {
    // Target is mixed absolute/relative: abs_err <= tol (1 + |value|).
    for (double tol : {1e-6, 1e-9}) {
        auto check = [tol](const QuadResult& r) {
            if (r.converged) CHECK(r.abs_err <= tol * (1 + std::fabs(r.value)));
        };
        check(integrate_finite([](double x) { return std::exp(x); }, Interval::finite_from_zero(3), tol));
        check(integrate_infinite([](double x) { return 1 / (1 + x * x * x); }, 0, tol));
        OscillationSpec osc;
        osc.bessel_order = 2;
        check(integrate_oscillatory_tail([](double t) { return 1 / (1 + t); }, osc, 0, tol));
        check(integrate_entry([](double t) { return t / (1 + t * t); }, Interval::full_half_line(), osc, tol));
    }
}
