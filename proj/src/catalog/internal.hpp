#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "hankel_dual/catalog.hpp"
#include "hankel_dual/specfun.hpp"

namespace hdual::catalog::detail {

inline constexpr double kPi = std::numbers::pi;

inline double J(double nu, double x) { return specfun::bessel_j(nu, x).value; }
inline double Y(double nu, double x) { return specfun::bessel_y(nu, x).value; }
inline double I(double nu, double x) { return specfun::bessel_i(nu, x).value; }
inline double K(double nu, double x) { return specfun::bessel_k(nu, x).value; }
inline double Gamma(double x) { return specfun::gamma_fn(x).value; }
// I_mu(x) K_nu(x) without overflow for large x.
inline double IK(double mu, double nu, double x) {
    return specfun::bessel_i_scaled(mu, x).value * specfun::bessel_k_scaled(nu, x).value;
}

inline bool is_nonneg_int(double n) { return n >= 0.0 && n == std::floor(n) && n < 1e6; }

inline quad::OscillationSpec kernel_j(double order, double freq, quad::Decay d = quad::Decay::Algebraic) {
    quad::OscillationSpec o{order, freq};
    o.decay = d;
    return o;
}

inline quad::OscillationSpec chirp(double order, double freq, specfun::BesselKind kind = specfun::BesselKind::J) {
    quad::OscillationSpec o{order, freq};
    o.kind = kind;
    o.power = 2.0;
    return o;
}

// Single-piece decomposition: smooth factor times J_order(freq * t).
template <class F, class IvF, class OscF>
std::function<std::vector<Piece>(const ParamPoint&)> single(F smooth, IvF interval, OscF osc) {
    return [smooth, interval, osc](const ParamPoint& p) {
        std::vector<Piece> v;
        v.push_back(Piece{[smooth, p](double t) { return smooth(p, t); }, interval(p), osc(p)});
        return v;
    };
}

void add_g2(std::vector<IntegralEntry>& out);
void add_g3(std::vector<IntegralEntry>& out);
void add_g4(std::vector<IntegralEntry>& out);
void add_g5(std::vector<IntegralEntry>& out);
void add_g6(std::vector<IntegralEntry>& out);
std::vector<FailureSeed> make_failures();
std::vector<TheoremSeed> make_theorem_seeds();

}  // namespace hdual::catalog::detail
