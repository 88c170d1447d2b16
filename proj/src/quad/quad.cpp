#include "hankel_dual/quad.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <string>

#include "hankel_dual/errors.hpp"

namespace hdual::quad {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPi = std::numbers::pi;
constexpr int kMaxSubintervals = 20000;

// Gauss-Kronrod 7/15 nodes and weights.
constexpr double kXgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                            0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                            0.58608723546769113029414483825873,  0.405845151377397166906606412076961,
                            0.207784955007898467600689403773245, 0.0};
constexpr double kWgk[8] = {0.02293532201052922496373200805897,  0.063092092629978553290700663189204,
                            0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                            0.16900472663926790282658342659855,  0.190350578064785409913256402421014,
                            0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.27970539148927666790146777142378,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a, b, value, err;
    bool operator<(const Segment& o) const { return err < o.err; }
};

// One 15-point Kronrod application with the QUADPACK error heuristic.
Segment gk15(const Fn& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double resg = fc * kWg[3];
    double resk = fc * kWgk[7];
    double resabs = std::fabs(resk);
    double fv1[7], fv2[7];
    for (int j = 0; j < 3; ++j) {
        const int jtw = 2 * j + 1;
        const double dx = h * kXgk[jtw];
        const double f1 = f(c - dx), f2 = f(c + dx);
        fv1[jtw] = f1;
        fv2[jtw] = f2;
        resg += kWg[j] * (f1 + f2);
        resk += kWgk[jtw] * (f1 + f2);
        resabs += kWgk[jtw] * (std::fabs(f1) + std::fabs(f2));
    }
    for (int j = 0; j < 4; ++j) {
        const int jtwm1 = 2 * j;
        const double dx = h * kXgk[jtwm1];
        const double f1 = f(c - dx), f2 = f(c + dx);
        fv1[jtwm1] = f1;
        fv2[jtwm1] = f2;
        resk += kWgk[jtwm1] * (f1 + f2);
        resabs += kWgk[jtwm1] * (std::fabs(f1) + std::fabs(f2));
    }
    const double reskh = resk * 0.5;
    double resasc = kWgk[7] * std::fabs(fc - reskh);
    for (int j = 0; j < 7; ++j) resasc += kWgk[j] * (std::fabs(fv1[j] - reskh) + std::fabs(fv2[j] - reskh));
    const double ah = std::fabs(h);
    const double result = resk * h;
    resabs *= ah;
    resasc *= ah;
    double err = std::fabs((resk - resg) * h);
    if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps)) err = std::max(50.0 * kEps * resabs, err);
    if (!std::isfinite(result)) err = std::numeric_limits<double>::infinity();
    return {a, b, result, err};
}

// Adaptive bisection of the worst segment until
// err <= abs_tol + rel_tol * |value|.  Throws ConvergenceError on budget
// exhaustion or when no segment can be refined further.
QuadResult adaptive(const Fn& f, double a, double b, double abs_tol, double rel_tol, long budget) {
    long evals = 0;
    Fn g = [&](double x) {
        ++evals;
        return f(x);
    };
    std::priority_queue<Segment> heap;
    std::vector<Segment> frozen;
    Segment s0 = gk15(g, a, b);
    double total = s0.value, err = s0.err;
    heap.push(s0);
    double frozen_err = 0.0;
    int count = 1;
    while (err > abs_tol + rel_tol * std::fabs(total)) {
        if (heap.empty() || evals + 30 > budget || count >= kMaxSubintervals) {
            if (!std::isfinite(total)) total = 0.0;
            throw ConvergenceError("adaptive quadrature did not reach tolerance", total, err, evals);
        }
        Segment s = heap.top();
        heap.pop();
        const double mid = 0.5 * (s.a + s.b);
        if (!(mid > s.a && mid < s.b) || std::fabs(s.b - s.a) < 64.0 * kEps * std::max(std::fabs(s.a), std::fabs(s.b))) {
            // Cannot split further; keep its contribution frozen.
            frozen_err += s.err;
            frozen.push_back(s);
            continue;
        }
        Segment l = gk15(g, s.a, mid), r = gk15(g, mid, s.b);
        total += l.value + r.value - s.value;
        err += l.err + r.err - s.err;
        heap.push(l);
        heap.push(r);
        ++count;
        if (count % 64 == 0) {
            // Re-sum to curb drift in the running totals.
            double t = 0.0, e = 0.0;
            auto copy = heap;
            while (!copy.empty()) {
                t += copy.top().value;
                e += copy.top().err;
                copy.pop();
            }
            for (const auto& fs : frozen) t += fs.value;
            total = t;
            err = e + frozen_err;
        }
    }
    if (!std::isfinite(total)) throw ConvergenceError("quadrature produced a non-finite value", 0.0, err, evals);
    return {total, err, evals, true};
}

QuadResult finite_substituted(const Fn& f, double lo, double hi, Singularity hint, double abs_tol, double rel_tol,
                              long budget) {
    const double w = hi - lo;
    switch (hint) {
        case Singularity::None:
            return adaptive(f, lo, hi, abs_tol, rel_tol, budget);
        case Singularity::InverseSqrtAtUpper: {
            // b = lo + w sin(theta)
            Fn g = [&](double th) { return f(lo + w * std::sin(th)) * w * std::cos(th); };
            return adaptive(g, 0.0, 0.5 * kPi, abs_tol, rel_tol, budget);
        }
        case Singularity::InverseSqrtAtLower: {
            // b = hi - w sin(theta)
            Fn g = [&](double th) { return f(hi - w * std::sin(th)) * w * std::cos(th); };
            return adaptive(g, 0.0, 0.5 * kPi, abs_tol, rel_tol, budget);
        }
        case Singularity::InverseSqrtAtBoth: {
            // b = mid - (w/2) cos(theta)
            const double m = 0.5 * (lo + hi), hw = 0.5 * w;
            Fn g = [&](double th) { return f(m - hw * std::cos(th)) * hw * std::sin(th); };
            return adaptive(g, 0.0, kPi, abs_tol, rel_tol, budget);
        }
        case Singularity::LogAtUpper: {
            // Geometric refinement towards the upper end.
            QuadResult out{0.0, 0.0, 0, true};
            double a = lo;
            for (int k = 1; k <= 60; ++k) {
                const double gap = w * std::ldexp(1.0, -k);
                if (gap < 8.0 * kEps * std::fabs(hi)) break;
                const double b = hi - gap;
                if (!(b > a)) break;
                auto r = adaptive(f, a, b, abs_tol / 64.0, rel_tol, budget - out.evaluations);
                out.value += r.value;
                out.abs_err += r.abs_err;
                out.evaluations += r.evaluations;
                a = b;
            }
            // The remaining sliver next to the singularity is a few ulp wide
            // and contributes below double resolution.
            return out;
        }
    }
    return adaptive(f, lo, hi, abs_tol, rel_tol, budget);
}

void check_tol(double tol) {
    if (!(tol > 0.0) || !std::isfinite(tol)) throw DomainError("quadrature tolerance must be positive");
}

}  // namespace

Interval Interval::finite_from_zero(double upper, Singularity hint) {
    if (!(upper > 0.0)) throw DomainError("Interval: upper bound must be positive");
    return {Kind::FiniteFromZero, 0.0, upper, hint};
}

Interval Interval::tail(double lower, Singularity hint) {
    if (!(lower >= 0.0)) throw DomainError("Interval: tail lower bound must be non-negative");
    return {Kind::Tail, lower, 0.0, hint};
}

Interval Interval::full_half_line(Singularity hint) { return {Kind::FullHalfLine, 0.0, 0.0, hint}; }

Interval Interval::segment(double lower, double upper, Singularity hint) {
    if (!(lower >= 0.0) || !(upper > lower)) throw DomainError("Interval: segment requires 0 <= lower < upper");
    return {Kind::FiniteSegment, lower, upper, hint};
}

double OscillationSpec::kernel(double t) const {
    const double u = frequency * (power == 1.0 ? t : std::pow(t, power));
    if (kind == specfun::BesselKind::J) return specfun::bessel_j(bessel_order, u).value;
    return specfun::bessel_y(bessel_order, u).value;
}

QuadResult integrate_finite(const Fn& f, const Interval& seg, double tol, long budget) {
    check_tol(tol);
    if (!seg.finite()) throw DomainError("integrate_finite: interval must be finite");
    return finite_substituted(f, seg.lower, seg.upper, seg.hint, tol, tol, budget);
}

QuadResult integrate_infinite(const Fn& f, double lower, double tol, long budget) {
    check_tol(tol);
    Fn g = [&](double s) {
        const double t = lower + (1.0 - s) / s;
        const double v = f(t);
        return v == 0.0 ? 0.0 : v / (s * s);
    };
    return adaptive(g, 0.0, 1.0, tol, tol, budget);
}

double WynnEpsilon::push(double s) {
    ++n_;
    std::vector<double> cur;
    cur.reserve(diag_.size() + 1);
    cur.push_back(s);
    // cur[k+1] = prev[k-1] + 1 / (cur[k] - prev[k])
    for (std::size_t k = 0; k < diag_.size(); ++k) {
        const double before = (k == 0) ? 0.0 : diag_[k - 1];
        const double d = cur[k] - diag_[k];
        const double scale = std::max(std::fabs(cur[k]), std::fabs(diag_[k]));
        if (!std::isfinite(d) || std::fabs(d) <= 4.0 * kEps * scale || d == 0.0) break;
        const double next = before + 1.0 / d;
        if (!std::isfinite(next)) break;
        cur.push_back(next);
    }
    diag_ = cur;
    // Highest even column on the newest diagonal.
    std::size_t best = (diag_.size() - 1) & ~static_cast<std::size_t>(1);
    estimate_ = diag_[best];
    history_.push_back(estimate_);
    const std::size_t h = history_.size();
    if (h >= 3)
        error_ = std::fabs(history_[h - 1] - history_[h - 2]) + std::fabs(history_[h - 1] - history_[h - 3]);
    else
        error_ = std::numeric_limits<double>::infinity();
    return estimate_;
}

namespace {

// Lobe endpoints: zeros of the kernel above `lower`.
class LobeWalker {
public:
    LobeWalker(const OscillationSpec& osc, double lower)
        : osc_(osc),
          zeros_(osc.kind, osc.bessel_order, osc.frequency * std::pow(lower, osc.power)),
          left_(lower) {
        if (!(osc.frequency > 0.0)) throw DomainError("OscillationSpec: frequency must be positive");
        if (!(osc.power > 0.0)) throw DomainError("OscillationSpec: power must be positive");
    }
    // Next lobe [left, right].
    std::pair<double, double> next() {
        const double u = zeros_.next();
        double right = std::pow(u / osc_.frequency, 1.0 / osc_.power);
        if (!(right > left_)) right = std::nextafter(left_, std::numeric_limits<double>::infinity());
        const std::pair<double, double> lobe{left_, right};
        left_ = right;
        return lobe;
    }

private:
    OscillationSpec osc_;
    specfun::BesselZeros zeros_;
    double left_;
};

}  // namespace

namespace {

// Feeds partial sums over successive pieces to Wynn's epsilon algorithm,
// restarting the table every kLobesPerRestart pieces.
template <class Lobe, class Sum, class Err, class Evals>
QuadResult accelerate(Lobe&& do_lobe, double tol, Sum&& sum, Err&& base_err, Evals&& evals) {
    constexpr int kLobesPerRestart = 40;
    constexpr int kRestarts = 3;
    constexpr int kMinLobes = 8;
    double best = sum(), best_err = std::numeric_limits<double>::infinity();
    int lobe = 0;
    for (int restart = 0; restart < kRestarts; ++restart) {
        WynnEpsilon wynn;
        int hits = 0;
        for (int i = 0; i < kLobesPerRestart; ++i, ++lobe) {
            do_lobe(lobe);
            const double est = wynn.push(sum());
            const double err = wynn.error() + base_err();
            if (err < best_err) {
                best = est;
                best_err = err;
            }
            const double target = tol * (1.0 + std::fabs(est));
            hits = (i + 1 >= kMinLobes && err <= 0.5 * target) ? hits + 1 : 0;
            if (hits >= 2) return {est, err, evals(), true};
        }
    }
    throw ConvergenceError("oscillatory tail: epsilon table stagnated", best, best_err, evals());
}

}  // namespace

std::vector<double> lobe_integrals(const Fn& f_smooth, const OscillationSpec& osc, double lower, int n, double tol) {
    check_tol(tol);
    Fn g = [&](double t) { return f_smooth(t) * osc.kernel(t); };
    LobeWalker walk(osc, lower);
    std::vector<double> out;
    for (int i = 0; i < n; ++i) {
        auto [a, b] = walk.next();
        out.push_back(adaptive(g, a, b, tol, 1e-13, kDefaultBudget).value);
    }
    return out;
}

QuadResult integrate_oscillatory_tail(const Fn& f_smooth, const OscillationSpec& osc, double lower, double tol,
                                      Singularity first_hint, long budget) {
    check_tol(tol);
    Fn g = [&](double t) { return f_smooth(t) * osc.kernel(t); };
    LobeWalker walk(osc, lower);
    const double lobe_tol = 0.02 * tol;
    long evals = 0;
    double sum = 0.0, lobe_err = 0.0, abs_sum = 0.0;
    auto do_lobe = [&](int index) {
        auto [a, b] = walk.next();
        const Singularity h = (index == 0) ? first_hint : Singularity::None;
        if (h != Singularity::None && h != Singularity::InverseSqrtAtLower)
            throw DomainError("integrate_oscillatory_tail: only a lower-end singularity is supported");
        QuadResult r;
        try {
            r = finite_substituted(g, a, b, h, lobe_tol, 1e-14, budget - evals);
        } catch (const ConvergenceError& e) {
            throw ConvergenceError(std::string("oscillatory tail: ") + e.what(), sum + e.partial(),
                                   lobe_err + e.abs_err(), evals + e.evaluations());
        }
        evals += r.evaluations;
        sum += r.value;
        lobe_err += r.abs_err;
        abs_sum += std::fabs(r.value);
        return r.value;
    };

    if (osc.decay == Decay::Exponential) {
        int small = 0;
        for (int i = 0; i < 20000; ++i) {
            const double v = do_lobe(i);
            const double target = tol * (1.0 + std::fabs(sum));
            small = (std::fabs(v) <= 1e-3 * target) ? small + 1 : 0;
            if (small >= 3) {
                const double err = lobe_err + 1e3 * std::fabs(v) + 4.0 * kEps * abs_sum;
                return {sum, err, evals, err <= target};
            }
            if (evals > budget) break;
        }
        throw ConvergenceError("oscillatory tail: exponential decay not reached", sum, lobe_err, evals);
    }

    return accelerate(do_lobe, tol, [&] { return sum; }, [&] { return lobe_err + 8.0 * kEps * abs_sum; },
                      [&] { return evals; });
}

namespace {

// Polynomial extrapolation to t = 0 through (t_i, v_i) (Neville).
double neville_at_zero(const std::vector<double>& t, std::vector<double> v) {
    const std::size_t n = t.size();
    for (std::size_t m = 1; m < n; ++m)
        for (std::size_t i = 0; i + m < n; ++i) v[i] = (t[i + m] * v[i] - t[i] * v[i + 1]) / (t[i + m] - t[i]);
    return v[0];
}

// Fallback for partial sums S_n at x_n = x0 + n h carrying both an
// alternating and a monotone algebraic remainder (Wynn cannot remove the
// latter).  Repeated averaging of neighbours suppresses the alternating
// part; Richardson extrapolation in 1/x removes the monotone part.
bool average_richardson(const std::vector<double>& sums, double x0, double h, double& value, double& err) {
    constexpr int kRounds = 4;
    constexpr int kSpacing = 12;
    std::vector<double> s = sums;
    double shift = 0.0;
    for (int r = 0; r < kRounds && s.size() > 1; ++r) {
        for (std::size_t i = 0; i + 1 < s.size(); ++i) s[i] = 0.5 * (s[i] + s[i + 1]);
        s.pop_back();
        shift += 0.5;
    }
    const std::size_t n = s.size();
    if (n < 4 * kSpacing + 1) return false;
    auto build = [&](int points) {
        std::vector<double> t, v;
        for (int k = 0; k < points; ++k) {
            const std::size_t idx = n - 1 - static_cast<std::size_t>(k) * kSpacing;
            // S_n is the integral up to x_{n+1}.
            t.push_back(1.0 / (x0 + (idx + 1 + shift) * h));
            v.push_back(s[idx]);
        }
        return neville_at_zero(t, v);
    };
    const double e3 = build(3), e4 = build(4);
    value = e4;
    err = std::fabs(e4 - e3);
    return std::isfinite(value);
}

}  // namespace

QuadResult integrate_tail_stepped(const Fn& f, double lower, double step, double tol, long budget) {
    check_tol(tol);
    if (!(step > 0.0)) throw DomainError("integrate_tail_stepped: step must be positive");
    const double lobe_tol = 0.02 * tol;
    long evals = 0;
    double sum = 0.0, lobe_err = 0.0, abs_sum = 0.0;
    std::vector<double> sums;
    auto do_lobe = [&](int index) {
        const double a = lower + index * step, b = lower + (index + 1) * step;
        QuadResult r;
        try {
            r = adaptive(f, a, b, lobe_tol, 1e-14, budget - evals);
        } catch (const ConvergenceError& e) {
            throw ConvergenceError(std::string("stepped tail: ") + e.what(), sum + e.partial(),
                                   lobe_err + e.abs_err(), evals + e.evaluations());
        }
        evals += r.evaluations;
        sum += r.value;
        lobe_err += r.abs_err;
        abs_sum += std::fabs(r.value);
        sums.push_back(sum);
        return r.value;
    };
    try {
        return accelerate(do_lobe, tol, [&] { return sum; }, [&] { return lobe_err + 8.0 * kEps * abs_sum; },
                          [&] { return evals; });
    } catch (const ConvergenceError& e) {
        double v, err;
        if (average_richardson(sums, lower, step, v, err)) {
            err += lobe_err + 8.0 * kEps * abs_sum;
            const double target = tol * (1.0 + std::fabs(v));
            if (err <= target) return {v, err, evals, true};
            if (err < e.abs_err()) throw ConvergenceError(e.what(), v, err, evals);
        }
        throw;
    }
}

QuadResult integrate_entry(const Fn& f, const Interval& iv, const std::optional<OscillationSpec>& osc, double tol,
                           long budget) {
    check_tol(tol);
    if (!osc) {
        switch (iv.kind) {
            case Interval::Kind::FiniteFromZero:
            case Interval::Kind::FiniteSegment:
                return integrate_finite(f, iv, tol, budget);
            case Interval::Kind::Tail: {
                if (iv.hint == Singularity::InverseSqrtAtLower) {
                    const double mid = iv.lower + std::max(1.0, iv.lower);
                    auto head = integrate_finite(f, Interval::segment(iv.lower, mid, iv.hint), tol, budget);
                    auto tail = integrate_infinite(f, mid, tol, budget - head.evaluations);
                    return {head.value + tail.value, head.abs_err + tail.abs_err,
                            head.evaluations + tail.evaluations, true};
                }
                return integrate_infinite(f, iv.lower, tol, budget);
            }
            case Interval::Kind::FullHalfLine: {
                auto head = integrate_finite(f, Interval::segment(0.0, 1.0, iv.hint), tol, budget);
                auto tail = integrate_infinite(f, 1.0, tol, budget - head.evaluations);
                return {head.value + tail.value, head.abs_err + tail.abs_err, head.evaluations + tail.evaluations,
                        true};
            }
        }
    }
    const OscillationSpec& o = *osc;
    Fn g = [&](double t) { return f(t) * o.kernel(t); };
    switch (iv.kind) {
        case Interval::Kind::FiniteFromZero:
        case Interval::Kind::FiniteSegment:
            return integrate_finite(g, iv, tol, budget);
        case Interval::Kind::Tail:
            return integrate_oscillatory_tail(f, o, iv.lower, tol, iv.hint, budget);
        case Interval::Kind::FullHalfLine: {
            const double split = std::max(1.0, std::pow(10.0 / o.frequency, 1.0 / o.power));
            auto head = integrate_finite(g, Interval::segment(0.0, split, iv.hint), tol, budget);
            auto tail = integrate_oscillatory_tail(f, o, split, tol, Singularity::None, budget - head.evaluations);
            return {head.value + tail.value, head.abs_err + tail.abs_err, head.evaluations + tail.evaluations,
                    tail.converged};
        }
    }
    throw DomainError("integrate_entry: unknown interval kind");
}

}  // namespace hdual::quad
