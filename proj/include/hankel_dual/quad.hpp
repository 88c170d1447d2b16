#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "hankel_dual/specfun.hpp"

namespace hdual::quad {

using Fn = std::function<double(double)>;

struct QuadResult {
    double value = 0.0;
    double abs_err = 0.0;
    long evaluations = 0;
    bool converged = false;
};

enum class Singularity {
    None,
    InverseSqrtAtUpper,
    InverseSqrtAtLower,
    InverseSqrtAtBoth,
    LogAtUpper,
};

struct Interval {
    enum class Kind { FiniteFromZero, Tail, FullHalfLine, FiniteSegment };

    Kind kind = Kind::FullHalfLine;
    double lower = 0.0;
    double upper = 0.0;  // unused for Tail and FullHalfLine
    Singularity hint = Singularity::None;

    static Interval finite_from_zero(double upper, Singularity hint = Singularity::None);
    static Interval tail(double lower, Singularity hint = Singularity::None);
    static Interval full_half_line(Singularity hint = Singularity::None);
    static Interval segment(double lower, double upper, Singularity hint = Singularity::None);

    bool finite() const { return kind == Kind::FiniteFromZero || kind == Kind::FiniteSegment; }
};

enum class Decay { Algebraic, Exponential };

// Kernel K(frequency * t^power) with K = J_order or Y_order.
struct OscillationSpec {
    double bessel_order = 0.0;
    double frequency = 1.0;
    specfun::BesselKind kind = specfun::BesselKind::J;
    double power = 1.0;
    Decay decay = Decay::Algebraic;

    double kernel(double t) const;
};

inline constexpr long kDefaultBudget = 2'000'000;

// Adaptive Gauss-Kronrod (7/15) on a finite interval with the endpoint
// substitutions implied by seg.hint.  Target: abs_err <= tol * (1 + |value|).
QuadResult integrate_finite(const Fn& f, const Interval& seg, double tol, long budget = kDefaultBudget);

// Non-oscillatory integral over [lower, inf) through t = lower + (1 - s)/s.
QuadResult integrate_infinite(const Fn& f, double lower, double tol, long budget = kDefaultBudget);

// int_lower^inf f_smooth(t) K(t) dt, partitioned at the kernel zeros.
// Algebraic decay: partial sums over lobes are accelerated by Wynn's
// epsilon algorithm.  Exponential decay: lobes are summed until negligible.
// first_hint applies to the first lobe (a singularity at `lower`).
QuadResult integrate_oscillatory_tail(const Fn& f_smooth, const OscillationSpec& osc, double lower, double tol,
                                      Singularity first_hint = Singularity::None, long budget = kDefaultBudget);

// Tail integral of a full integrand f over [lower, inf), partitioned into
// pieces of fixed length `step` and accelerated as above.  Suited to
// products of oscillations whose beat frequencies would alias under a
// zero-based partition.
QuadResult integrate_tail_stepped(const Fn& f, double lower, double step, double tol, long budget = kDefaultBudget);

// Dispatcher.  With osc present, f is the smooth factor and the kernel is
// multiplied in.  FullHalfLine with osc splits at max(1, (10/frequency)^(1/power)).
QuadResult integrate_entry(const Fn& f, const Interval& iv, const std::optional<OscillationSpec>& osc, double tol,
                           long budget = kDefaultBudget);

// Integrals of f_smooth * kernel over the first n lobes above `lower`.
std::vector<double> lobe_integrals(const Fn& f_smooth, const OscillationSpec& osc, double lower, int n, double tol);

// Wynn's epsilon algorithm over a stream of partial sums.
class WynnEpsilon {
public:
    // Adds the next partial sum; returns the current best estimate.
    double push(double partial_sum);
    double estimate() const { return estimate_; }
    // Difference between the last three estimates; infinite until available.
    double error() const { return error_; }
    int size() const { return n_; }

private:
    std::vector<double> diag_;
    std::vector<double> history_;
    double estimate_ = 0.0;
    double error_ = 0.0;
    int n_ = 0;
};

}  // namespace hdual::quad
