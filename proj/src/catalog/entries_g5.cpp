#include <cmath>

#include "internal.hpp"

namespace hdual::catalog::detail {

namespace {

using quad::Interval;

double factorial(int n) { return std::tgamma(n + 1.0); }

double legendre_arg(double c) { return std::sqrt(1 + 4 / (c * c)); }

double P(double nu, double mu, double c) {
    return specfun::legendre_p_negorder(-0.5 + nu / 2, mu, legendre_arg(c)).value;
}
double Q(double nu, double mu, double c) {
    return specfun::legendre_q_negorder(-0.5 + nu / 2, mu, legendre_arg(c)).value;
}

}  // namespace

void add_g5(std::vector<IntegralEntry>& out) {
    {
        IntegralEntry e;
        e.id = "T25a";
        e.group = Group::G5;
        e.statement = "int_0^alpha J_(nu-n-1)(b t) 2F1(nu, -n; nu-n; b^2/alpha^2) b^(nu-n) db = n! alpha^(nu-n) "
                      "Gamma(nu-n) J_(nu+n)(alpha t) / (t Gamma(nu))";
        e.variable = "b";
        e.parameters = {"nu", "n", "alpha", "t"};
        auto smooth = [](const ParamPoint& p, double b) {
            const double nu = p["nu"], al = p["alpha"];
            const int n = static_cast<int>(p["n"]);
            return specfun::hyp2f1_terminating(nu, n, nu - n, (b / al) * (b / al)).value * std::pow(b, nu - n);
        };
        e.integrand = [smooth](const ParamPoint& p, double b) {
            return smooth(p, b) * J(p["nu"] - p["n"] - 1, b * p["t"]);
        };
        e.pieces = single(smooth, [](const ParamPoint& p) { return Interval::finite_from_zero(p["alpha"]); },
                          [](const ParamPoint& p) { return kernel_j(p["nu"] - p["n"] - 1, p["t"]); });
        e.rhs = [](const ParamPoint& p) {
            const double nu = p["nu"], n = p["n"], al = p["alpha"], t = p["t"];
            return factorial(static_cast<int>(n)) * std::pow(al, nu - n) * Gamma(nu - n) * J(nu + n, al * t) /
                   (t * Gamma(nu));
        };
        e.constraints = [](const ParamPoint& p) {
            return is_nonneg_int(p["n"]) && p["nu"] > 0.5 && p["nu"] - p["n"] > 0 && p["alpha"] > 0 && p["t"] > 0;
        };
        e.constraints_text = "n in N0; nu > 1/2; nu - n > 0 (integrable at b = 0); alpha > 0; t > 0";
        e.default_grid = {{{"nu", 1.5}, {"n", 0}, {"alpha", 1}, {"t", 1}},
                          {{"nu", 2.5}, {"n", 1}, {"alpha", 2}, {"t", 0.7}},
                          {{"nu", 3.7}, {"n", 2}, {"alpha", 1.5}, {"t", 2}}};
        e.provenance = "source: G&R 6.512.2; seed G(t) = n! alpha^(nu-n) Gamma(nu-n) J_(nu+n)(alpha t) / (t Gamma(nu))";
        e.tol_class = TolClass::Decaying;
        out.push_back(std::move(e));
    }
    {
        IntegralEntry e;
        e.id = "T25b";
        e.group = Group::G5;
        e.statement = "int_beta^inf J_(mu+n)(a t) 2F1(mu, -n; mu-n; beta^2/a^2) a^(-mu+n+1) da = n! beta^(-mu+n+1) "
                      "Gamma(mu-n) J_(mu-n-1)(beta t) / (t Gamma(mu))";
        e.variable = "a";
        e.parameters = {"mu", "n", "beta", "t"};
        auto smooth = [](const ParamPoint& p, double a) {
            const double mu = p["mu"], be = p["beta"];
            const int n = static_cast<int>(p["n"]);
            return specfun::hyp2f1_terminating(mu, n, mu - n, (be / a) * (be / a)).value * std::pow(a, -mu + n + 1);
        };
        e.integrand = [smooth](const ParamPoint& p, double a) {
            return smooth(p, a) * J(p["mu"] + p["n"], a * p["t"]);
        };
        e.pieces = single(smooth, [](const ParamPoint& p) { return Interval::tail(p["beta"]); },
                          [](const ParamPoint& p) { return kernel_j(p["mu"] + p["n"], p["t"]); });
        e.rhs = [](const ParamPoint& p) {
            const double mu = p["mu"], n = p["n"], be = p["beta"], t = p["t"];
            return factorial(static_cast<int>(n)) * std::pow(be, -mu + n + 1) * Gamma(mu - n) *
                   J(mu - n - 1, be * t) / (t * Gamma(mu));
        };
        e.constraints = [](const ParamPoint& p) {
            return is_nonneg_int(p["n"]) && p["mu"] > p["n"] + 0.5 && p["beta"] > 0 && p["t"] > 0;
        };
        e.constraints_text = "n in N0; mu > n + 1/2 (divergent otherwise); beta > 0; t > 0";
        e.default_grid = {{{"mu", 1}, {"n", 0}, {"beta", 1}, {"t", 1}},
                          {{"mu", 2.5}, {"n", 1}, {"beta", 0.5}, {"t", 2}},
                          {{"mu", 3.2}, {"n", 2}, {"beta", 1.5}, {"t", 0.8}}};
        e.provenance =
            "source: G&R 6.512.2; seed H(t) = n! beta^(-mu+n+1) Gamma(mu-n) J_(mu-n-1)(beta t) / (t Gamma(mu))";
        e.tol_class = TolClass::Oscillatory;
        out.push_back(std::move(e));
    }
    {
        IntegralEntry e;
        e.id = "T26";
        e.group = Group::G5;
        e.statement = "int_0^inf P^-mu_(-1/2+nu/2)(sqrt(1+4/c^2)) Q^-mu_(-1/2+nu/2)(sqrt(1+4/c^2)) J_nu(c z) dc "
                      "= e^(-mu pi i) Gamma((nu-2mu+1)/2) / (z Gamma((nu+2mu+1)/2)) I_mu(z) K_mu(z)";
        e.variable = "c";
        e.parameters = {"nu", "mu", "z"};
        auto smooth = [](const ParamPoint& p, double c) { return P(p["nu"], p["mu"], c) * Q(p["nu"], p["mu"], c); };
        e.integrand = [smooth](const ParamPoint& p, double c) { return smooth(p, c) * J(p["nu"], c * p["z"]); };
        e.pieces = single(smooth, [](const ParamPoint&) { return Interval::full_half_line(); },
                          [](const ParamPoint& p) { return kernel_j(p["nu"], p["z"]); });
        // Q carries the e^(i mu pi) factor, which cancels the phase on the
        // right; the comparison is real for every mu.
        e.rhs = [](const ParamPoint& p) {
            const double nu = p["nu"], mu = p["mu"], z = p["z"];
            return Gamma((nu - 2 * mu + 1) / 2) / (z * Gamma((nu + 2 * mu + 1) / 2)) * IK(mu, mu, z);
        };
        e.constraints = [](const ParamPoint& p) {
            return p["nu"] >= -0.5 && p["nu"] > -2 * p["mu"] - 1 && p["z"] > 0;
        };
        e.constraints_text = "nu >= -1/2; nu > -2 mu - 1; z > 0 (grid: mu = 0)";
        e.default_grid = {{{"nu", 1}, {"mu", 0}, {"z", 1}},
                          {{"nu", 3}, {"mu", 0}, {"z", 0.7}},
                          {{"nu", 0.5}, {"mu", 0}, {"z", 1.5}}};
        e.provenance = "source: G&R 6.513.3; seed F(x) = e^(-mu pi i) Gamma((nu-2mu+1)/2) / (x Gamma((nu+2mu+1)/2)) "
                       "I_mu(a x) K_mu(a x)";
        e.tol_class = TolClass::Oscillatory;
        out.push_back(std::move(e));
    }
    {
        IntegralEntry e;
        e.id = "T27";
        e.group = Group::G5;
        e.statement = "int_0^inf J_nu(c z) [Q^-mu_(-1/2+nu/2)(sqrt(1+4/c^2))]^2 dc = e^(-2 mu pi i) "
                      "Gamma((1+nu-2mu)/2) / (z Gamma((1+nu+2mu)/2)) K_mu(z)^2";
        e.variable = "c";
        e.parameters = {"nu", "mu", "z"};
        auto smooth = [](const ParamPoint& p, double c) {
            const double q = Q(p["nu"], p["mu"], c);
            return q * q;
        };
        e.integrand = [smooth](const ParamPoint& p, double c) { return smooth(p, c) * J(p["nu"], c * p["z"]); };
        e.pieces = single(smooth, [](const ParamPoint&) { return Interval::full_half_line(); },
                          [](const ParamPoint& p) { return kernel_j(p["nu"], p["z"]); });
        e.rhs = [](const ParamPoint& p) {
            const double nu = p["nu"], mu = p["mu"], z = p["z"], k = K(mu, z);
            return Gamma((1 + nu - 2 * mu) / 2) / (z * Gamma((1 + nu + 2 * mu) / 2)) * k * k;
        };
        e.constraints = [](const ParamPoint& p) {
            const double nu = p["nu"], mu = p["mu"];
            return nu > mu - 1 && nu > -mu - 1 && nu >= -0.5 && p["z"] > 0;
        };
        e.constraints_text = "nu > -+mu - 1; nu >= -1/2; z > 0 (grid: mu = 0)";
        e.default_grid = {{{"nu", 1}, {"mu", 0}, {"z", 1}},
                          {{"nu", 0.5}, {"mu", 0}, {"z", 2}},
                          {{"nu", 3}, {"mu", 0}, {"z", 0.8}}};
        e.provenance = "source: G&R 6.513.5; seed F(x) = e^(-2 mu pi i) Gamma((1+nu-2mu)/2) / (x Gamma((1+nu+2mu)/2)) "
                       "K_mu(a x)^2";
        e.tol_class = TolClass::Oscillatory;
        out.push_back(std::move(e));
    }
}

}  // namespace hdual::catalog::detail
