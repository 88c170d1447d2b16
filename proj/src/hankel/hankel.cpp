#include "hankel_dual/hankel.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "hankel_dual/errors.hpp"

namespace hdual::hankel {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kFitPoints = 25;
constexpr int kWindowSamples = 256;

double envelope_at(const std::function<double(double)>& f, double x, bool oscillatory) {
    if (!oscillatory) return std::fabs(f(x));
    // max |F| over [x, 2x]
    double m = 0.0;
    for (int i = 0; i < kWindowSamples; ++i) {
        const double t = x * std::exp2(static_cast<double>(i) / (kWindowSamples - 1));
        const double v = std::fabs(f(t));
        if (std::isfinite(v)) m = std::max(m, v);
        else return v;
    }
    return m;
}

}  // namespace

const char* to_string(Endpoint e) {
    switch (e) {
        case Endpoint::Zero:
            return "zero";
        case Endpoint::Infinity:
            return "infinity";
        case Endpoint::Both:
            return "both";
    }
    return "?";
}

double fit_envelope_exponent(const std::function<double(double)>& f, double lo, double hi, bool oscillatory) {
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    int n = 0;
    const double llo = std::log(lo), lhi = std::log(hi);
    for (int i = 0; i < kFitPoints; ++i) {
        const double lx = llo + (lhi - llo) * i / (kFitPoints - 1);
        const double e = envelope_at(f, std::exp(lx), oscillatory);
        if (!(e > 0.0)) continue;
        if (!std::isfinite(e)) {
            // Overflow: the envelope blows up faster than any fit can track.
            return lx < 0.5 * (llo + lhi) ? -kInf : kInf;
        }
        const double ly = std::log(e);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++n;
    }
    if (n < 3) {
        // F vanishes (or underflows) on the window.
        return hi <= 1.0 ? kInf : -kInf;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

ConditionVerdict check_condition(const SeedFunction& F) {
    if (!F.eval && (!F.decay_at_zero || !F.decay_at_inf))
        throw DomainError("check_condition: seed has neither an evaluator nor declared exponents");
    ConditionVerdict v;
    auto resolve = [&](const std::optional<double>& declared, double lo, double hi, const char* where) {
        if (declared) return *declared;
        const double p = fit_envelope_exponent(F.eval, lo, hi, F.oscillatory_envelope);
        if (std::isfinite(p) && std::fabs(p - kCriticalExponent) <= kInconclusiveBand)
            throw InconclusiveError(std::string("check_condition: envelope exponent at ") + where +
                                        " is too close to -3/2 to decide",
                                    p);
        return p;
    };
    v.zero_exponent = resolve(F.decay_at_zero, 1e-6, 1e-4, "zero");
    // A declared exponential decay settles the infinite end without a fit.
    v.inf_exponent = !F.decay_at_inf && F.exponential_decay ? -kInf : resolve(F.decay_at_inf, 1e4, 1e6, "infinity");
    const bool zero_ok = v.zero_exponent > kCriticalExponent;
    const bool inf_ok = v.inf_exponent < kCriticalExponent;
    v.admissible = zero_ok && inf_ok;
    if (!zero_ok && !inf_ok)
        v.failing_endpoint = Endpoint::Both;
    else if (!zero_ok)
        v.failing_endpoint = Endpoint::Zero;
    else if (!inf_ok)
        v.failing_endpoint = Endpoint::Infinity;
    return v;
}

quad::QuadResult hankel_forward(const SeedFunction& F, double nu, double b, double tol, bool skip_check) {
    if (!(nu >= -0.5)) throw DomainError("hankel_forward: order must be at least -1/2");
    if (!(b > 0.0)) throw DomainError("hankel_forward: b must be positive");
    if (!skip_check) {
        const auto verdict = check_condition(F);
        if (!verdict.admissible)
            throw AdmissibilityError(std::string("hankel_forward: seed '") + F.name +
                                     "' violates the admissibility condition at " +
                                     to_string(*verdict.failing_endpoint));
    }
    quad::Fn xf = [&](double x) { return x * F.eval(x); };
    quad::OscillationSpec osc{nu, b};
    osc.decay = F.exponential_decay ? quad::Decay::Exponential : quad::Decay::Algebraic;
    if (F.support_end) return quad::integrate_entry(xf, quad::Interval::finite_from_zero(*F.support_end), osc, tol);
    return quad::integrate_entry(xf, quad::Interval::full_half_line(), osc, tol);
}

quad::QuadResult hankel_inverse(const std::function<double(double)>& G, double nu, double r, double tol,
                                const InverseOptions& opts) {
    if (!(nu >= -0.5)) throw DomainError("hankel_inverse: order must be at least -1/2");
    if (!(r > 0.0)) throw DomainError("hankel_inverse: r must be positive");
    quad::Fn ug = [&](double u) { return u * G(u); };
    if (opts.g_frequency <= 0.0) {
        quad::OscillationSpec osc{nu, r};
        osc.decay = opts.exponential_decay ? quad::Decay::Exponential : quad::Decay::Algebraic;
        return quad::integrate_entry(ug, quad::Interval::full_half_line(), osc, tol);
    }
    // G oscillates too: partition the tail with a fixed step at the sum
    // frequency so that both beat components keep oscillating.
    const double step = std::numbers::pi / (r + opts.g_frequency);
    const double split = 4.0 * step * std::ceil(std::max(1.0, 10.0 / (r + opts.g_frequency)) / (4.0 * step));
    quad::Fn full = [&](double u) { return u * G(u) * specfun::bessel_j(nu, u * r).value; };
    auto head = quad::integrate_finite(full, quad::Interval::segment(0.0, split), tol);
    auto tail = quad::integrate_tail_stepped(full, split, step, tol);
    return {head.value + tail.value, head.abs_err + tail.abs_err, head.evaluations + tail.evaluations,
            head.converged && tail.converged};
}

std::vector<RoundtripPoint> dual_roundtrip(const SeedFunction& F, double nu, const std::vector<double>& r_grid,
                                           double tol) {
    const auto verdict = check_condition(F);
    if (!verdict.admissible)
        throw AdmissibilityError(std::string("dual_roundtrip: seed '") + F.name +
                                 "' violates the admissibility condition at " + to_string(*verdict.failing_endpoint));
    const double inner_tol = std::min(1e-11, 1e-3 * tol);
    std::function<double(double)> G = [&](double b) { return hankel_forward(F, nu, b, inner_tol, true).value; };
    InverseOptions opts;
    if (F.support_end) opts.g_frequency = *F.support_end;
    std::vector<RoundtripPoint> out;
    for (double r : r_grid) {
        RoundtripPoint p;
        p.r = r;
        const double dr = 1e-12 * r;
        p.expected = 0.5 * (F.eval(r + dr) + F.eval(r - dr));
        try {
            const auto res = hankel_inverse(G, nu, r, tol, opts);
            p.recovered = res.value;
            p.abs_err = res.abs_err;
            p.residual = std::fabs(res.value - p.expected);
            p.ok = p.residual <= tol * (1.0 + std::fabs(p.expected));
        } catch (const ConvergenceError& e) {
            p.recovered = e.partial();
            p.abs_err = e.abs_err();
            p.residual = std::fabs(e.partial() - p.expected);
            p.error = e.what();
        } catch (const Error& e) {
            p.error = e.what();
            p.residual = kInf;
        }
        out.push_back(p);
    }
    return out;
}

}  // namespace hdual::hankel
