#include <cmath>

#include "common.hpp"
#include "hankel_dual/errors.hpp"
#include "hankel_dual/specfun.hpp"

namespace hdual::specfun {

SpecialValue gamma_fn(double x) {
    if (!std::isfinite(x)) throw DomainError("gamma_fn: non-finite argument");
    if (x <= 0.0 && detail::is_integer(x)) throw PoleError("gamma_fn: pole at non-positive integer");
    if (x > 171.6) throw OverflowError("gamma_fn: result overflows");
    const double v = std::tgamma(x);
    if (!std::isfinite(v)) throw OverflowError("gamma_fn: result overflows");
    // libm tgamma is accurate to a few ulp; the reflection branch for
    // negative x loses a little more.
    const double ulps = x < 0.0 ? 32.0 : 8.0;
    return {v, ulps * detail::kEps * std::fabs(v)};
}

double rgamma(double x) {
    if (std::isnan(x)) return x;
    if (x <= 0.0 && detail::is_integer(x)) return 0.0;
    if (x > 171.6) return 0.0;
    if (x < -170.0) {
        // 1/Gamma(x) = Gamma(1-x) sin(pi x) / pi, via logs to stay finite
        const double lg = std::lgamma(1.0 - x);
        return std::exp(lg) * detail::sinpi(x) / detail::kPi;
    }
    return 1.0 / std::tgamma(x);
}

}  // namespace hdual::specfun
