#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hankel_dual/quad.hpp"

namespace hdual::hankel {

enum class Endpoint { Zero, Infinity, Both };

const char* to_string(Endpoint e);

struct SeedFunction {
    std::function<double(double)> eval;
    // Power p with F(x) = Theta(x^p) at the endpoint (amplitude envelope
    // after factoring any oscillation).  Declared values override the fit.
    std::optional<double> decay_at_zero;
    std::optional<double> decay_at_inf;
    bool oscillatory_envelope = false;
    // F vanishes for x > support_end (truncated seeds).  Its transform then
    // oscillates with this frequency.
    std::optional<double> support_end;
    // F decays exponentially at infinity.
    bool exponential_decay = false;
    std::string name;
};

struct ConditionVerdict {
    bool admissible = false;
    double zero_exponent = 0.0;
    double inf_exponent = 0.0;
    std::optional<Endpoint> failing_endpoint;
};

inline constexpr double kCriticalExponent = -1.5;
inline constexpr double kInconclusiveBand = 0.05;

// Least-squares slope of log|F| (or of its windowed maximum when
// oscillatory) against log x over [lo, hi].  Returns -inf / +inf when F
// vanishes identically there.
double fit_envelope_exponent(const std::function<double(double)>& f, double lo, double hi, bool oscillatory);

// Admissibility: int_0^inf sqrt(x) |F(x)| dx < inf.  Throws
// InconclusiveError when a fitted exponent lies within the band around -3/2.
ConditionVerdict check_condition(const SeedFunction& F);

// G(b) = int_0^inf x F(x) J_nu(b x) dx.  Throws AdmissibilityError unless
// F passes check_condition or skip_check is set.
quad::QuadResult hankel_forward(const SeedFunction& F, double nu, double b, double tol, bool skip_check = false);

struct InverseOptions {
    // Oscillation frequency of G itself (0: G is not oscillatory).
    double g_frequency = 0.0;
    bool exponential_decay = false;
};

// int_0^inf u J_nu(u r) G(u) du.
quad::QuadResult hankel_inverse(const std::function<double(double)>& G, double nu, double r, double tol,
                                const InverseOptions& opts = {});

struct RoundtripPoint {
    double r = 0.0;
    double recovered = 0.0;
    double expected = 0.0;  // (F(r+0) + F(r-0)) / 2
    double residual = 0.0;
    double abs_err = 0.0;
    bool ok = false;
    std::string error;  // non-empty when the quadrature failed at this point
};

// Recovers F from the inverse of its forward transform at each r.
std::vector<RoundtripPoint> dual_roundtrip(const SeedFunction& F, double nu, const std::vector<double>& r_grid,
                                           double tol);

}  // namespace hdual::hankel
