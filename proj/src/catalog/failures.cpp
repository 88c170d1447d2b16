#include <cmath>

#include "internal.hpp"

namespace hdual::catalog::detail {

namespace {

using hankel::Endpoint;
using hankel::SeedFunction;

struct SeedOpts {
    bool oscillatory = false;
    bool exponential = false;
    std::optional<double> zero;
    std::optional<double> inf;
};

SeedFunction make_seed(std::string name, std::function<double(double)> f, SeedOpts o = {}) {
    SeedFunction s;
    s.eval = std::move(f);
    s.name = std::move(name);
    s.oscillatory_envelope = o.oscillatory;
    s.exponential_decay = o.exponential;
    s.decay_at_zero = o.zero;
    s.decay_at_inf = o.inf;
    return s;
}

// I_mu(s) K_nu(t) for s <= t without overflow.
double IKab(double mu, double s, double nu, double t) {
    return specfun::bessel_i_scaled(mu, s).value * specfun::bessel_k_scaled(nu, t).value * std::exp(s - t);
}

constexpr SeedOpts kOsc{true, false, {}, {}};
constexpr SeedOpts kExp{false, true, {}, {}};

FailureSeed failure(std::string id, std::string formula, std::string provenance, ParamPoint params,
                    Endpoint expected, std::function<double(double)> f, SeedOpts o = {}) {
    FailureSeed s;
    s.id = id;
    s.seed = make_seed(std::move(id), std::move(f), o);
    s.expected_failing_endpoint = expected;
    s.parameters = std::move(params);
    s.formula = std::move(formula);
    s.provenance = std::move(provenance);
    return s;
}

}  // namespace

std::vector<FailureSeed> make_failures() {
    std::vector<FailureSeed> v;
    const double sqrt_pi = std::sqrt(kPi);

    // x^-1 J envelopes decay exactly like x^-3/2; the fit cannot separate
    // that from the band, so the exponent is declared.
    {
        const double nu = 1, mu = 2, b = 1;
        const double alpha = Gamma((mu - nu + 1) / 2) / Gamma((mu + nu + 1) / 2);
        SeedOpts o = kOsc;
        o.inf = -1.5;
        v.push_back(failure("S6512_1a", "alpha(nu,mu) Gamma(nu+1) b^-nu x^-1 J_nu(b x)", "G&R 6.512.1",
                            {{"nu", nu}, {"mu", mu}, {"b", b}}, Endpoint::Infinity,
                            [=](double x) { return alpha * Gamma(nu + 1) * std::pow(b, -nu) / x * J(nu, b * x); }, o));
    }
    {
        const double nu = 1, mu = 2, a = 1;
        const double alpha = Gamma((mu - nu + 1) / 2) / Gamma((mu + nu + 1) / 2);
        SeedOpts o = kOsc;
        o.inf = -1.5;
        v.push_back(failure("S6512_1b", "alpha(nu,mu) Gamma(nu+1) a^(nu+1) x^-1 J_mu(a x)", "G&R 6.512.1",
                            {{"nu", nu}, {"mu", mu}, {"a", a}}, Endpoint::Infinity,
                            [=](double x) { return alpha * Gamma(nu + 1) * std::pow(a, nu + 1) / x * J(mu, a * x); },
                            o));
    }
    v.push_back(failure("S6514_1", "b x^-3 J_nu(b/x)", "G&R 6.514.1", {{"nu", 1}, {"b", 1}}, Endpoint::Zero,
                        [](double x) { return std::pow(x, -3) * J(1, 1 / x); }, kOsc));
    v.push_back(failure("S6514_2", "b x^-3 Y_nu(b/x)", "G&R 6.514.2", {{"nu", 1}, {"b", 1}}, Endpoint::Zero,
                        [](double x) { return std::pow(x, -3) * Y(1, 1 / x); }, kOsc));
    v.push_back(failure("S6516_2", "-2 b Y_nu(b x^2)", "G&R 6.516.2", {{"nu", 0.5}, {"b", 1}}, Endpoint::Infinity,
                        [](double x) { return -2 * Y(0.5, x * x); }, kOsc));
    v.push_back(failure("S6516_3", "(4b/pi) K_nu(b x^2)", "G&R 6.516.3", {{"nu", 1}, {"b", 1}}, Endpoint::Zero,
                        [](double x) { return 4 / kPi * K(1, x * x); }, kExp));
    v.push_back(failure("S6516_4", "x^-1 Y_2nu(a sqrt x)", "G&R 6.516.4", {{"nu", 0.25}, {"a", 1}},
                        Endpoint::Infinity, [](double x) { return Y(0.5, std::sqrt(x)) / x; }, kOsc));
    v.push_back(failure("S6516_7", "(4/pi) cos(nu pi) x^-1 K_2nu(a sqrt x)", "G&R 6.516.7", {{"nu", 1}, {"a", 1}},
                        Endpoint::Zero, [](double x) { return 4 / kPi * std::cos(kPi) * K(2, std::sqrt(x)) / x; },
                        kExp));
    {
        const double mu = 1, nu = 1;
        const double beta = Gamma(nu / 2 - mu) / Gamma(1 + nu / 2 + mu);
        v.push_back(failure("S6522_2", "(1/2) e^(-2 mu pi i) beta(nu,mu) K_mu(a x)^2", "G&R 6.522.2",
                            {{"mu", mu}, {"nu", nu}, {"a", 1}}, Endpoint::Zero,
                            [=](double x) {
                                const double k = K(mu, x);
                                return 0.5 * beta * k * k;
                            },
                            kExp));
    }
    v.push_back(failure("S6522_6", "-(pi/2) J_0(a x) Y_0(a x)", "G&R 6.522.6", {{"a", 1}}, Endpoint::Infinity,
                        [](double x) { return -kPi / 2 * J(0, x) * Y(0, x); }, kOsc));
    {
        const double mu = 1, nu = 1;
        const double beta = Gamma(nu / 2 - mu) / Gamma(1 + nu / 2 + mu);
        v.push_back(failure("S6522_8", "(1/2) beta(nu,mu) K_(mu-1/2)(a x) K_(mu+1/2)(a x)", "G&R 6.522.8",
                            {{"mu", mu}, {"nu", nu}, {"a", 1}}, Endpoint::Zero,
                            [=](double x) { return 0.5 * beta * K(mu - 0.5, x) * K(mu + 0.5, x); }, kExp));
    }
    {
        // For b > c, the only range where the source integral exists, this
        // seed decays exponentially and is admissible.
        const double nu = 0.5, b = 2, c = 1;
        const double g = std::pow(8 * b * c, -nu) / Gamma(nu + 0.5);
        v.push_back(failure("S6522_16", "sqrt(pi) x^nu gamma(nu) I_nu(c x) K_nu(b x)", "G&R 6.522.16",
                            {{"nu", nu}, {"b", b}, {"c", c}}, Endpoint::Infinity,
                            [=](double x) {
                                return sqrt_pi * std::pow(x, nu) * g * specfun::bessel_i_scaled(nu, c * x).value *
                                       specfun::bessel_k_scaled(nu, b * x).value * std::exp((c - b) * x);
                            },
                            kExp));
    }
    v.push_back(failure("S6526_2", "2 x^-1 Y_nu(b sqrt x)", "G&R 6.526.2", {{"nu", 0.5}, {"b", 1}},
                        Endpoint::Infinity, [](double x) { return 2 * Y(0.5, std::sqrt(x)) / x; }, kOsc));
    v.push_back(failure("S6526_3", "cos(nu pi/2) K_nu(b sqrt x) / (2 pi x)", "G&R 6.526.3", {{"nu", 1.5}, {"b", 1}},
                        Endpoint::Zero,
                        [](double x) { return std::cos(0.75 * kPi) * K(1.5, std::sqrt(x)) / (2 * kPi * x); }, kExp));
    v.push_back(failure("S6526_6", "(4a/pi) K_(nu/2)(a x^2)", "G&R 6.526.6", {{"nu", 2}, {"a", 1}}, Endpoint::Zero,
                        [](double x) { return 4 / kPi * K(1, x * x); }, kExp));
    v.push_back(failure("S6527_3", "-(x/4) Y_(nu+1/2)(x^2/4)", "G&R 6.527.3", {{"nu", 0}}, Endpoint::Infinity,
                        [](double x) { return -x / 4 * Y(0.5, x * x / 4); }, kOsc));
    return v;
}

std::vector<TheoremSeed> make_theorem_seeds() {
    std::vector<TheoremSeed> v;
    auto add = [&](std::string thm, std::string formula, std::function<double(double)> f, SeedOpts o,
                   std::optional<Endpoint> fails = std::nullopt) {
        TheoremSeed t;
        t.theorem = thm;
        t.seed = make_seed(std::move(thm), std::move(f), o);
        t.expected_admissible = !fails;
        t.expected_failing_endpoint = fails;
        t.formula = std::move(formula);
        v.push_back(std::move(t));
    };
    SeedOpts borderline = kOsc;
    borderline.inf = -1.5;
    const SeedOpts kOscExp{true, true, {}, {}};
    const auto inf = Endpoint::Infinity;

    add("Heron", "2^(1-nu) sqrt(pi) Gamma(nu+1/2) (bc/t)^nu J_nu(b t) J_nu(c t); nu=1, b=1, c=2",
        [](double t) { return Gamma(1.5) * std::sqrt(kPi) * (2 / t) * J(1, t) * J(1, 2 * t); }, kOsc);
    add("T02", "alpha^nu x^-1 J_nu(alpha x); nu=1.5, alpha=1", [](double x) { return J(1.5, x) / x; }, borderline,
        inf);
    add("T03", "a^nu K_nu(a x); nu=0.5, a=1", [](double x) { return K(0.5, x); }, kExp);
    add("T04", "x K_1(a x)/(2a); a=1", [](double x) { return x * K(1, x) / 2; }, kExp);
    add("T05", "x K_0(a x)/2; a=1", [](double x) { return x * K(0, x) / 2; }, kExp);
    add("T06", "K_0(a x) J_nu(c x); nu=0, a=1, c=1", [](double x) { return K(0, x) * J(0, x); }, kOscExp);
    add("T07", "I_0(a x) K_0(b x); a=0.5, b=1", [](double x) { return IKab(0, 0.5 * x, 0, x); }, kExp);
    add("T08", "x^nu K_nu(a x) J_nu(c x); nu=0.5, a=1, c=1",
        [](double x) { return std::sqrt(x) * K(0.5, x) * J(0.5, x); }, kOscExp);
    add("T09", "x K_0(b x) J_0(c x); b=1, c=1", [](double x) { return x * K(0, x) * J(0, x); }, kOscExp);
    add("T10", "I_(nu/2)(a x) K_(nu/2)(a x); nu=1, a=1", [](double x) { return IK(0.5, 0.5, x); }, {}, inf);
    add("T11", "-(pi/2) J_(nu/2)(a x) Y_(nu/2)(a x); nu=0, a=1", [](double x) { return -kPi / 2 * J(0, x) * Y(0, x); },
        kOsc, inf);
    add("T12", "2^mu a^mu I_((nu-mu)/2)(a x) K_((nu+mu)/2)(a x); nu=1, mu=0.5, a=1",
        [](double x) { return std::sqrt(2.0) * IK(0.25, 0.75, x); }, {}, inf);
    add("T13", "x I_0(a x) K_1(b x)/(2b); a=0.5, b=1",
        [](double x) { return x * IKab(0, 0.5 * x, 1, x) / 2; }, kExp);
    add("T14", "x^-1 J_nu(a/x); nu=1, a=1", [](double x) { return J(1, 1 / x) / x; }, kOsc);
    add("T15", "b x^-3 K_nu(b/x); nu=0.5, b=1", [](double x) { return std::pow(x, -3) * K(0.5, 1 / x); }, {});
    add("T16", "-pi/(2x) Y_nu(a/x); nu=0.25, a=1", [](double x) { return -kPi / (2 * x) * Y(0.25, 1 / x); }, kOsc,
        inf);
    add("T17", "2b J_nu(b x^2); nu=0.5, b=1", [](double x) { return 2 * J(0.5, x * x); }, kOsc, inf);
    add("T18", "x^-1 J_nu(b sqrt x); nu=1, b=1", [](double x) { return J(1, std::sqrt(x)) / x; }, kOsc, inf);
    add("T19a", "(x/4) J_(nu-1/2)(x^2/4); nu=1", [](double x) { return x / 4 * J(0.5, x * x / 4); }, kOsc, inf);
    add("T19b", "(x/4) J_(nu+1/2)(x^2/4); nu=1", [](double x) { return x / 4 * J(1.5, x * x / 4); }, kOsc, inf);
    add("T20", "-2a Y_(nu/2)(a x^2); nu=1, a=1", [](double x) { return -2 * Y(0.5, x * x); }, kOsc, inf);
    add("T21", "2 J_nu(2 sqrt x) K_nu(2 sqrt x); nu=0",
        [](double x) { return 2 * J(0, 2 * std::sqrt(x)) * K(0, 2 * std::sqrt(x)); }, kOscExp);
    add("T22", "-pi x^-1 Y_0(a x); a=1", [](double x) { return -kPi / x * Y(0, x); }, borderline, inf);
    add("T23", "2 x^-1 K_0(a x); a=1", [](double x) { return 2 / x * K(0, x); }, kExp);
    add("T24", "pi/(2x) J_0(a x)^2; a=1", [](double x) { return kPi / (2 * x) * J(0, x) * J(0, x); }, kOsc);
    add("T25", "n! alpha^(nu-n) Gamma(nu-n) J_(nu+n)(alpha x) / (x Gamma(nu)); nu=1.5, n=0, alpha=1",
        [](double x) { return J(1.5, x) / x; }, borderline, inf);
    add("T26", "Gamma((nu+1)/2) / (x Gamma((nu+1)/2)) I_0(a x) K_0(a x); nu=1, mu=0, a=1",
        [](double x) { return IK(0, 0, x) / x; }, {});
    add("T27", "Gamma((1+nu)/2) / (x Gamma((1+nu)/2)) K_0(a x)^2; nu=1, mu=0, a=1",
        [](double x) { return K(0, x) * K(0, x) / x; }, kExp);
    add("T28", "x^-1 b^-nu J_nu(b x); nu=0.5, b=1", [](double x) { return J(0.5, x) / x; }, borderline, inf);
    add("T29", "(pi/2) J_((nu+n)/2)(a x) J_((nu-n)/2)(a x); nu=0, n=0, a=1",
        [](double x) { return kPi / 2 * J(0, x) * J(0, x); }, kOsc, inf);
    return v;
}

}  // namespace hdual::catalog::detail

namespace hdual::catalog {

FailureSeed control_seed() {
    FailureSeed s;
    s.id = "control_exp";
    s.seed.eval = [](double x) { return std::exp(-x); };
    s.seed.exponential_decay = true;
    s.seed.name = "control_exp";
    s.expected_failing_endpoint = hankel::Endpoint::Zero;
    s.formula = "e^-x";
    s.provenance = "control";
    return s;
}

}  // namespace hdual::catalog
