// Zeros of J_nu and Y_nu: a coarse sign scan brackets each root, which is
// then polished by Illinois regula falsi.  For large k the McMahon
// expansion supplies the bracket directly.

#include <cmath>

#include "common.hpp"
#include "hankel_dual/errors.hpp"
#include "hankel_dual/specfun.hpp"

namespace hdual::specfun {

namespace {

constexpr double kScanStep = 0.25;

double mcmahon(double nu, int k) {
    const double beta = (k + 0.5 * nu - 0.25) * detail::kPi;
    const double mu = 4.0 * nu * nu;
    const double e = 8.0 * beta;
    const double e2 = e * e;
    return beta - (mu - 1.0) / e - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * e * e2) -
           32.0 * (mu - 1.0) * (83.0 * mu * mu - 982.0 * mu + 3779.0) / (15.0 * e * e2 * e2);
}

}  // namespace

BesselZeros::BesselZeros(BesselKind kind, double nu, double after) : kind_(kind), nu_(nu) {
    if (!(nu >= -0.5)) throw DomainError("BesselZeros: order must be at least -1/2");
    if (!(after >= 0.0)) throw DomainError("BesselZeros: start must be non-negative");
    // No zero of J_nu or Y_nu lies below nu for nu >= 0.
    pos_ = std::max({after, 0.9 * nu, 1e-3});
    if (after > 0.0) pos_ = std::max(pos_, after);
}

double BesselZeros::eval(double x) const {
    return kind_ == BesselKind::J ? bessel_j(nu_, x).value : bessel_y(nu_, x).value;
}

double BesselZeros::refine(double lo, double hi, double flo, double fhi) const {
    int side = 0;
    for (int it = 0; it < 200; ++it) {
        const double x = (lo * fhi - hi * flo) / (fhi - flo);
        if (hi - lo <= 4.0 * detail::kEps * hi) return x;
        const double fx = eval(x);
        if (fx == 0.0) return x;
        if ((fx > 0.0) == (fhi > 0.0)) {
            hi = x;
            fhi = fx;
            if (side == -1) flo *= 0.5;
            side = -1;
        } else {
            lo = x;
            flo = fx;
            if (side == 1) fhi *= 0.5;
            side = 1;
        }
        if (std::fabs(fx) < 1e-300) return x;
        if (hi - lo <= 4.0 * detail::kEps * hi) return 0.5 * (lo + hi);
    }
    return 0.5 * (lo + hi);
}

double BesselZeros::next() {
    double x0 = pos_;
    if (prev_ > 0.0 && gap_ > 0.0) x0 = std::max(pos_, prev_ + 0.6 * gap_);
    double f0 = eval(x0);
    while (f0 == 0.0) {
        // Landed on a root exactly (or J underflowed); nudge forward.
        x0 += 1e-9 * (1.0 + x0);
        f0 = eval(x0);
    }
    for (int i = 0; i < 1000000; ++i) {
        const double x1 = x0 + kScanStep;
        const double f1 = eval(x1);
        if (f1 == 0.0) {
            gap_ = prev_ > 0.0 ? x1 - prev_ : 0.0;
            prev_ = x1;
            pos_ = x1 + 1e-9 * (1.0 + x1);
            return x1;
        }
        if ((f0 > 0.0) != (f1 > 0.0)) {
            const double r = refine(x0, x1, f0, f1);
            gap_ = prev_ > 0.0 ? r - prev_ : 0.0;
            prev_ = r;
            pos_ = r + 1e-9 * (1.0 + r);
            return r;
        }
        x0 = x1;
        f0 = f1;
    }
    throw ConvergenceError("BesselZeros: scan did not find a sign change", x0, 0.0, 1000000);
}

double bessel_zero(double nu, int k) {
    if (!(nu >= -0.5)) throw DomainError("bessel_zero: order must be at least -1/2");
    if (k < 1) throw DomainError("bessel_zero: index must be positive");
    if (k > 30 + static_cast<int>(nu)) {
        const double g = mcmahon(nu, k);
        BesselZeros z(BesselKind::J, nu, g - 1.0);
        return z.next();
    }
    BesselZeros z(BesselKind::J, nu, 0.0);
    double r = 0.0;
    for (int i = 0; i < k; ++i) r = z.next();
    return r;
}

}  // namespace hdual::specfun
