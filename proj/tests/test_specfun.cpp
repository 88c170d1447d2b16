#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hankel_dual/errors.hpp"
#include "hankel_dual/specfun.hpp"
#include "specfun_contract.hpp"

using namespace hdual;
using namespace hdual::specfun;
using std::numbers::pi;

namespace {

void report(const contract::Check& c) {
    CHECK_MESSAGE(c.ok(), c.name << ": got " << c.got << ", want " << c.want << ", err " << c.err << " > "
                                 << c.bound);
}

}  // namespace

TEST_CASE("recurrence J_{nu-1} + J_{nu+1} = (2 nu / x) J_nu") { contract::recurrence(report); }
TEST_CASE("Wronskians of J/Y and I/K") { contract::wronskians(report); }
TEST_CASE("order 1/2 closed forms") { contract::half_integer(report); }
TEST_CASE("Chebyshev T_n(cos t) = cos(n t)") { contract::chebyshev(report); }
TEST_CASE("extended-precision oracles") { contract::oracles(report); }

TEST_CASE("contract suite size") {
    const int n = contract::run_all([](const contract::Check&) {});
    CHECK(n >= 200);
}

TEST_CASE("gamma values and errors") {
    CHECK(gamma_fn(1).value == doctest::Approx(1).epsilon(1e-15));
    CHECK(gamma_fn(5).value == doctest::Approx(24).epsilon(1e-15));
    CHECK(gamma_fn(0.5).value == doctest::Approx(std::sqrt(pi)).epsilon(1e-15));
    CHECK_THROWS_AS(gamma_fn(0), PoleError);
    CHECK_THROWS_AS(gamma_fn(-3), PoleError);
    CHECK_THROWS_AS(gamma_fn(200), OverflowError);
    CHECK(rgamma(-2) == 0.0);
}

TEST_CASE("Bessel special values and domain errors") {
    CHECK(bessel_j(0, 0).value == 1.0);
    CHECK(std::fabs(bessel_j(0.5, pi).value) < 1e-15);
    CHECK(std::fabs(bessel_y(0.5, pi / 2).value) < 1e-15);
    CHECK(bessel_i(0, 0).value == 1.0);
    CHECK(bessel_i(0.5, 1).value == doctest::Approx(std::sqrt(2 / pi) * std::sinh(1.0)).epsilon(1e-14));
    CHECK(bessel_k(0.5, 1.0).value == doctest::Approx(std::sqrt(pi / 2) * std::exp(-1.0)).epsilon(1e-14));
    CHECK(struve_h(0, 0).value == 0.0);
    CHECK_THROWS_AS(bessel_j(0, -1), DomainError);
    CHECK_THROWS_AS(bessel_j(-0.5, 0), DomainError);
    CHECK_THROWS_AS(bessel_y(0, 0), DomainError);
    CHECK_THROWS_AS(bessel_i(0, -1), DomainError);
    CHECK_THROWS_AS(bessel_k(0, 0.0), DomainError);
    CHECK_THROWS_AS(bessel_k(0, std::complex<double>(-1, 1)), DomainError);
    CHECK_THROWS_AS(struve_h(0, -1), DomainError);
    CHECK_THROWS_AS(bessel_i(0, 800), OverflowError);
}

TEST_CASE("K_0(1) against its integral representation") {
    // int_0^inf exp(-cosh t) dt by the trapezoid rule, exponentially accurate.
    double sum = 0.5 * std::exp(-1.0);
    const double h = 0.01;
    for (int i = 1; i < 2000; ++i) sum += std::exp(-std::cosh(i * h));
    CHECK(bessel_k(0, 1.0).value == doctest::Approx(sum * h).epsilon(1e-13));
}

TEST_CASE("scaled I and K agree with the unscaled forms") {
    for (double nu : {0.0, 0.75, 3.0}) {
        for (double x : {0.2, 4.0, 60.0}) {
            CHECK(bessel_i_scaled(nu, x).value == doctest::Approx(bessel_i(nu, x).value * std::exp(-x)).epsilon(1e-13));
            CHECK(bessel_k_scaled(nu, x).value == doctest::Approx(bessel_k(nu, x).value * std::exp(x)).epsilon(1e-13));
        }
    }
}

TEST_CASE("negative orders") {
    // J_{-1/2}(x) = sqrt(2/(pi x)) cos x; I_{-1/2}(x) = sqrt(2/(pi x)) cosh x.
    for (double x : {0.3, 2.0, 11.0}) {
        const double amp = std::sqrt(2 / (pi * x));
        CHECK(bessel_j(-0.5, x).value == doctest::Approx(amp * std::cos(x)).scale(amp).epsilon(1e-13));
        CHECK(bessel_i(-0.5, x).value == doctest::Approx(amp * std::cosh(x)).epsilon(1e-13));
        CHECK(bessel_j(-1, x).value == doctest::Approx(-bessel_j(1, x).value).epsilon(1e-14));
    }
}

TEST_CASE("Struve K = H - Y") {
    for (double nu : {0.0, 0.5, 1.0})
        for (double x : {0.5, 3.0, 25.0})
            CHECK(struve_k(nu, x).value ==
                  doctest::Approx(struve_h(nu, x).value - bessel_y(nu, x).value).scale(1).epsilon(1e-11));
}

TEST_CASE("polynomial families") {
    CHECK(hyp2f1_terminating(0.7, 0, 2.5, 0.3).value == 1.0);
    CHECK_THROWS_AS(hyp2f1_terminating(1, 3, -1, 0.5), ParameterError);
    CHECK(jacobi_p(0, 0.5, 0, 0.2).value == 1.0);
    CHECK(jacobi_p(1, 2.0, 0.5, 1).value == doctest::Approx(3.0));
    CHECK(chebyshev_t(0, 0.7).value == 1.0);
    CHECK(chebyshev_t(2, 0.5).value == doctest::Approx(-0.5));
    CHECK(chebyshev_t(5, 0.3).value == doctest::Approx(std::cos(5 * std::acos(0.3))).epsilon(1e-14));
    CHECK_THROWS_AS(chebyshev_t(2, 1.5), DomainError);
}

TEST_CASE("Legendre functions") {
    CHECK(legendre_p_negorder(0, 0, 5).value == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(legendre_q_negorder(0, 0, 3).value == doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-12));
    CHECK_THROWS_AS(legendre_p_negorder(0, 0, 1.0), DomainError);
    CHECK_THROWS_AS(legendre_q_negorder(0, 0, 0.5), DomainError);
    // P_1(x) = x and Q_1(x) = x Q_0(x) - 1.
    for (double x : {1.2, 4.0, 50.0}) {
        CHECK(legendre_p_negorder(1, 0, x).value == doctest::Approx(x).epsilon(1e-12));
        const double q0 = 0.5 * std::log((x + 1) / (x - 1));
        CHECK(legendre_q_negorder(1, 0, x).value == doctest::Approx(x * q0 - 1).epsilon(1e-9));
    }
}

TEST_CASE("Bessel zeros are increasing and bracket sign changes") {
    double prev = 0;
    for (int k = 1; k <= 30; ++k) {
        const double z = bessel_zero(1.5, k);
        CHECK(z > prev);
        CHECK(std::fabs(bessel_j(1.5, z).value) < 1e-12);
        prev = z;
    }
    BesselZeros y0(BesselKind::Y, 0.0);
    CHECK(y0.next() == doctest::Approx(0.8935769662791675).epsilon(1e-12));
    CHECK(y0.next() == doctest::Approx(3.957678419314858).epsilon(1e-12));
}

namespace {

// Ascending series in long double.
long double series_j0(long double x) {
    long double term = 1, sum = 1;
    for (int k = 1; k <= 25; ++k) {
        term *= -(x * x / 4) / (static_cast<long double>(k) * k);
        sum += term;
    }
    return sum;
}

long double series_y0(long double x) {
    const long double euler = 0.577215664901532860606512090082402431L;
    long double term = 1, h = 0, tail = 0;
    for (int k = 1; k <= 25; ++k) {
        term *= -(x * x / 4) / (static_cast<long double>(k) * k);
        h += 1.0L / k;
        tail -= term * h;
    }
    const long double two_over_pi = 2 / 3.141592653589793238462643383279502884L;
    return two_over_pi * ((std::log(x / 2) + euler) * series_j0(x) + tail);
}

}  // namespace

TEST_CASE("ascending-series oracles") {
    CHECK(bessel_j(0, 2).value == doctest::Approx(static_cast<double>(series_j0(2))).epsilon(1e-14));
    CHECK(bessel_y(0, 1).value == doctest::Approx(static_cast<double>(series_y0(1))).epsilon(1e-13));
    // I_1(2) = sum 1 / (k! (k+1)!)
    long double i1 = 0, fact = 1;
    for (int k = 0; k < 25; ++k) {
        if (k > 0) fact *= k;
        i1 += 1.0L / (fact * fact * (k + 1));
    }
    CHECK(bessel_i(1, 2).value == doctest::Approx(static_cast<double>(i1)).epsilon(1e-14));
    // H_0(1) = sum (-1)^k (1/2)^{2k+1} / Gamma(k + 3/2)^2
    long double h0 = 0;
    for (int k = 0; k < 25; ++k) {
        const long double g = std::tgamma(static_cast<long double>(k) + 1.5L);
        h0 += (k % 2 ? -1 : 1) * std::pow(0.5L, 2 * k + 1) / (g * g);
    }
    CHECK(struve_h(0, 1).value == doctest::Approx(static_cast<double>(h0)).epsilon(1e-13));
    CHECK(struve_h(0.5, pi).value == doctest::Approx(2 * std::sqrt(2 / (pi * pi))).epsilon(1e-14));
}

TEST_CASE("Jacobi degree 2 against explicit coefficients") {
    // P_2^{(1,0)}(x) = (5 x^2 + 2 x - 1) / 2
    const double x = 0.3;
    CHECK(jacobi_p(2, 1, 0, x).value == doctest::Approx((5 * x * x + 2 * x - 1) / 2).epsilon(1e-14));
}

TEST_CASE("first zero of J_0 against bisection") {
    long double lo = 2, hi = 3;
    for (int i = 0; i < 80; ++i) {
        const long double mid = (lo + hi) / 2;
        (series_j0(mid) > 0 ? lo : hi) = mid;
    }
    CHECK(std::fabs(bessel_zero(0, 1) - static_cast<double>(lo)) < 1e-14);
}
