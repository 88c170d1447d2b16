#pragma once

#include <complex>

namespace hdual::specfun {

// A function value together with an estimated absolute error bound.
struct SpecialValue {
    double value = 0.0;
    double abs_err = 0.0;
};

struct ComplexValue {
    double re = 0.0;
    double im = 0.0;
    double abs_err = 0.0;
    std::complex<double> z() const { return {re, im}; }
};

// Value and derivative of the pair J_nu, Y_nu at one point.
struct BesselJY {
    double j = 0.0, y = 0.0, jp = 0.0, yp = 0.0;
    double j_err = 0.0, y_err = 0.0;
};

struct BesselIK {
    double i = 0.0, k = 0.0, ip = 0.0, kp = 0.0;
    double i_err = 0.0, k_err = 0.0;
};

SpecialValue gamma_fn(double x);
// 1/Gamma(x); zero at the poles, never throws for finite x.
double rgamma(double x);

SpecialValue bessel_j(double nu, double x);
SpecialValue bessel_y(double nu, double x);
// J, Y and derivatives for nu >= 0, x > 0.
BesselJY bessel_jy(double nu, double x);

SpecialValue bessel_i(double nu, double x);
// exp(-x) * I_nu(x)
SpecialValue bessel_i_scaled(double nu, double x);
SpecialValue bessel_k(double nu, double x);
// exp(x) * K_nu(x)
SpecialValue bessel_k_scaled(double nu, double x);
// Unscaled I, K and derivatives for nu >= 0, x > 0.
BesselIK bessel_ik(double nu, double x);

ComplexValue bessel_k(double nu, std::complex<double> z);

SpecialValue struve_h(double nu, double x);
// Struve K: H_nu(x) - Y_nu(x), for x > 0.
SpecialValue struve_k(double nu, double x);

// 2F1(a, -n; c; x), a finite sum of n + 1 terms.
SpecialValue hyp2f1_terminating(double a, int n, double c, double x);
SpecialValue jacobi_p(int n, double alpha, double beta, double x);
SpecialValue chebyshev_t(int n, double x);

// P_deg^{-mu}(x) for x > 1.
SpecialValue legendre_p_negorder(double deg, double mu, double x);
// exp(i mu pi) Q_deg^{-mu}(x) for x > 1. The phase factor of the usual
// definition on the cut is stripped so the result is real.
SpecialValue legendre_q_negorder(double deg, double mu, double x);

// k-th positive zero of J_nu, nu >= -1/2.
double bessel_zero(double nu, int k);

enum class BesselKind { J, Y };

// Positive zeros of J_nu or Y_nu (nu >= -1/2) in increasing order,
// beginning with the first zero strictly greater than `after`.
class BesselZeros {
public:
    BesselZeros(BesselKind kind, double nu, double after = 0.0);
    double next();

private:
    double eval(double x) const;
    double refine(double lo, double hi, double flo, double fhi) const;

    BesselKind kind_;
    double nu_;
    double pos_;
    double prev_ = -1.0;
    double gap_ = 0.0;
};

}  // namespace hdual::specfun
