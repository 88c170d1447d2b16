#include <cmath>

#include "internal.hpp"

namespace hdual::catalog::detail {

namespace {

using quad::Interval;
using quad::Singularity;

// l1^nu / (l2^nu (l2^2 - l1^2)) at (a, b, c).
double l_ratio_kernel(double nu, double a, double b, double c) {
    const auto l = elliptic_pair(a, b, c);
    return std::pow(l.l1 / l.l2, nu) / l_gap(a, b, c);
}

// (a^2+b^2+c^2)^2 - 4 a^2 c^2 = ((a-c)^2 + b^2)((a+c)^2 + b^2)
double quartic(double a, double b, double c) { return ((a - c) * (a - c) + b * b) * ((a + c) * (a + c) + b * b); }

double sonine_factor(double nu) { return std::sqrt(kPi) / (std::pow(2.0, 3.0 * nu) * Gamma(nu + 0.5)); }

}  // namespace

void add_g2(std::vector<IntegralEntry>& out) {
    {
        IntegralEntry e;
        e.id = "Heron";
        e.group = Group::G2;
        e.statement =
            "int_0^inf Delta(a,b,c)^(2nu-1) a^(1-nu) J_nu(a t) da = 2^(1-nu) sqrt(pi) Gamma(nu+1/2) (bc/t)^nu "
            "J_nu(b t) J_nu(c t)";
        e.variable = "a";
        e.parameters = {"nu", "b", "c", "t"};
        e.integrand = [](const ParamPoint& p, double a) {
            const double b = p["b"], c = p["c"], nu = p["nu"];
            if (a <= std::fabs(b - c) || a >= b + c) return 0.0;
            return std::pow(heron_area(a, b, c), 2.0 * nu - 1.0) * std::pow(a, 1.0 - nu) * J(nu, a * p["t"]);
        };
        e.pieces = single(
            [](const ParamPoint& p, double a) {
                const double b = p["b"], c = p["c"], nu = p["nu"];
                if (a <= std::fabs(b - c) || a >= b + c) return 0.0;
                return std::pow(heron_area(a, b, c), 2.0 * nu - 1.0) * std::pow(a, 1.0 - nu);
            },
            [](const ParamPoint& p) {
                return Interval::segment(std::fabs(p["b"] - p["c"]), p["b"] + p["c"], Singularity::InverseSqrtAtBoth);
            },
            [](const ParamPoint& p) { return kernel_j(p["nu"], p["t"]); });
        e.rhs = [](const ParamPoint& p) {
            const double nu = p["nu"], b = p["b"], c = p["c"], t = p["t"];
            return std::pow(2.0, 1.0 - nu) * std::sqrt(kPi) * Gamma(nu + 0.5) * std::pow(b * c / t, nu) *
                   J(nu, b * t) * J(nu, c * t);
        };
        e.constraints = [](const ParamPoint& p) {
            return p["b"] > 0 && p["c"] > 0 && p["nu"] > -0.5 && p["t"] > 0;
        };
        e.constraints_text = "b, c > 0; nu > -1/2; t > 0 (integrand vanishes outside |b-c| < a < b+c)";
        e.default_grid = {{{"nu", 1}, {"b", 1}, {"c", 1}, {"t", 1}},
                          {{"nu", 0.75}, {"b", 1}, {"c", 2}, {"t", 1.5}},
                          {{"nu", 1.5}, {"b", 2}, {"c", 1.5}, {"t", 0.7}}};
        e.provenance = "source: Sonine's formula for int J_nu(at) J_nu(bt) J_nu(ct) t^(1-nu) dt";
        e.tol_class = TolClass::Singular;
        out.push_back(std::move(e));
    }
    {
        IntegralEntry e;
        e.id = "T02a";
        e.group = Group::G2;
        e.statement = "int_0^alpha b^nu J_(nu-1)(b z) db = alpha^nu z^-1 J_nu(alpha z)";
        e.variable = "b";
        e.parameters = {"nu", "alpha", "z"};
        e.integrand = [](const ParamPoint& p, double b) { return std::pow(b, p["nu"]) * J(p["nu"] - 1, b * p["z"]); };
        e.pieces = single([](const ParamPoint& p, double b) { return std::pow(b, p["nu"]); },
                          [](const ParamPoint& p) { return Interval::finite_from_zero(p["alpha"]); },
                          [](const ParamPoint& p) { return kernel_j(p["nu"] - 1, p["z"]); });
        e.rhs = [](const ParamPoint& p) {
            return std::pow(p["alpha"], p["nu"]) / p["z"] * J(p["nu"], p["alpha"] * p["z"]);
        };
        e.constraints = [](const ParamPoint& p) { return p["nu"] > 0.5 && p["alpha"] > 0 && p["z"] > 0; };
        e.constraints_text = "nu > 1/2; alpha > 0; z > 0";
        e.default_grid = {{{"nu", 1}, {"alpha", 1}, {"z", 1}},
                          {{"nu", 1.5}, {"alpha", 2}, {"z", 0.7}},
                          {{"nu", 2.5}, {"alpha", 1.5}, {"z", 3}}};
        e.provenance = "source: G&R 6.512.3; seed F(x) = alpha^nu x^-1 J_nu(alpha x)";
        e.tol_class = TolClass::Decaying;
        out.push_back(std::move(e));
    }
    {
        IntegralEntry e;
        e.id = "T02b";
        e.group = Group::G2;
        e.statement = "int_beta^inf a^(1-mu) J_mu(a z) da = beta^(1-mu) z^-1 J_(mu-1)(beta z)";
        e.variable = "a";
        e.parameters = {"mu", "beta", "z"};
        e.integrand = [](const ParamPoint& p, double a) { return std::pow(a, 1 - p["mu"]) * J(p["mu"], a * p["z"]); };
        e.pieces = single([](const ParamPoint& p, double a) { return std::pow(a, 1 - p["mu"]); },
                          [](const ParamPoint& p) { return Interval::tail(p["beta"]); },
                          [](const ParamPoint& p) { return kernel_j(p["mu"], p["z"]); });
        e.rhs = [](const ParamPoint& p) {
            return std::pow(p["beta"], 1 - p["mu"]) / p["z"] * J(p["mu"] - 1, p["beta"] * p["z"]);
        };
        e.constraints = [](const ParamPoint& p) { return p["mu"] > 0.5 && p["beta"] > 0 && p["z"] > 0; };
        e.constraints_text = "mu > 1/2 (the integral diverges for mu <= 1/2); beta > 0; z > 0";
        e.default_grid = {{{"mu", 1}, {"beta", 1}, {"z", 1}},
                          {{"mu", 1.5}, {"beta", 0.5}, {"z", 2}},
                          {{"mu", 2.5}, {"beta", 2}, {"z", 0.8}}};
        e.provenance = "source: G&R 6.512.3; seed G(x) = beta^(1-mu) x^-1 J_(mu-1)(beta x)";
        e.tol_class = TolClass::Oscillatory;
        out.push_back(std::move(e));
    }
    {
        IntegralEntry e;
        e.id = "T03";
        e.group = Group::G2;
        e.statement = "int_0^inf c^(nu+1)/(1+c^2) J_nu(c z) dc = K_nu(z)";
        e.variable = "c";
        e.parameters = {"nu", "z"};
        e.integrand = [](const ParamPoint& p, double c) {
            return std::pow(c, p["nu"] + 1) / (1 + c * c) * J(p["nu"], c * p["z"]);
        };
        e.pieces = single([](const ParamPoint& p, double c) { return std::pow(c, p["nu"] + 1) / (1 + c * c); },
                          [](const ParamPoint&) { return Interval::full_half_line(); },
                          [](const ParamPoint& p) { return kernel_j(p["nu"], p["z"]); });
        e.rhs = [](const ParamPoint& p) { return K(p["nu"], p["z"]); };
        e.constraints = [](const ParamPoint& p) { return p["nu"] >= -0.5 && p["nu"] < 1.5 && p["z"] > 0; };
        e.constraints_text = "-1/2 <= nu < 3/2 (divergent for nu >= 3/2); z > 0";
        e.default_grid = {{{"nu", 0.5}, {"z", 1}}, {{"nu", 0}, {"z", 0.5}}, {{"nu", 1}, {"z", 0.7}}};
        e.provenance = "source: G&R 6.521.2; seed F(x) = a^nu K_nu(a x)";
        e.tol_class = TolClass::Oscillatory;
        out.push_back(std::move(e));
    }
    {
        IntegralEntry e;
        e.id = "T04";
        e.group = Group::G2;
        e.statement = "int_0^inf c/(1+c^2)^2 J_0(c z) dc = (z/2) K_1(z)";
        e.variable = "c";
        e.parameters = {"z"};
        e.integrand = [](const ParamPoint& p, double c) { return c / ((1 + c * c) * (1 + c * c)) * J(0, c * p["z"]); };
        e.pieces = single([](const ParamPoint&, double c) { return c / ((1 + c * c) * (1 + c * c)); },
                          [](const ParamPoint&) { return Interval::full_half_line(); },
                          [](const ParamPoint& p) { return kernel_j(0, p["z"]); });
        e.rhs = [](const ParamPoint& p) { return p["z"] / 2 * K(1, p["z"]); };
        e.constraints = [](const ParamPoint& p) { return p["z"] > 0; };
        e.constraints_text = "z > 0";
        e.default_grid = {{{"z", 0.5}}, {{"z", 1}}, {{"z", 3}}};
        e.provenance = "source: G&R 6.521.12; seed F(x) = x K_1(a x)/(2a)";
        e.tol_class = TolClass::Oscillatory;
        out.push_back(std::move(e));
    }
    {
        IntegralEntry e;
        e.id = "T05";
        e.group = Group::G2;
        e.statement = "int_0^inf c^2/(1+c^2)^2 J_1(c z) dc = (z/2) K_0(z)";
        e.variable = "c";
        e.parameters = {"z"};
        e.integrand = [](const ParamPoint& p, double c) {
            return c * c / ((1 + c * c) * (1 + c * c)) * J(1, c * p["z"]);
        };
        e.pieces = single([](const ParamPoint&, double c) { return c * c / ((1 + c * c) * (1 + c * c)); },
                          [](const ParamPoint&) { return Interval::full_half_line(); },
                          [](const ParamPoint& p) { return kernel_j(1, p["z"]); });
        e.rhs = [](const ParamPoint& p) { return p["z"] / 2 * K(0, p["z"]); };
        e.constraints = [](const ParamPoint& p) { return p["z"] > 0; };
        e.constraints_text = "z > 0";
        e.default_grid = {{{"z", 0.5}}, {{"z", 1}}, {{"z", 3}}};
        e.provenance = "source: G&R 6.521.12; seed F(x) = x K_0(a x)/2";
        e.tol_class = TolClass::Oscillatory;
        out.push_back(std::move(e));
    }
    {
        IntegralEntry e;
        e.id = "T06a";
        e.group = Group::G2;
        e.statement = "int_0^inf b J_nu(b z) l1^nu/(l2^nu (l2^2-l1^2)) db = K_0(alpha z) J_nu(gamma z), "
                      "l1, l2 at (alpha, b, gamma)";
        e.variable = "b";
        e.parameters = {"nu", "alpha", "gamma", "z"};
        e.integrand = [](const ParamPoint& p, double b) {
            return b * l_ratio_kernel(p["nu"], p["alpha"], b, p["gamma"]) * J(p["nu"], b * p["z"]);
        };
        e.pieces = single(
            [](const ParamPoint& p, double b) { return b * l_ratio_kernel(p["nu"], p["alpha"], b, p["gamma"]); },
            [](const ParamPoint&) { return Interval::full_half_line(); },
            [](const ParamPoint& p) { return kernel_j(p["nu"], p["z"]); });
        e.rhs = [](const ParamPoint& p) { return K(0, p["alpha"] * p["z"]) * J(p["nu"], p["gamma"] * p["z"]); };
        e.constraints = [](const ParamPoint& p) {
            return p["gamma"] > 0 && p["nu"] >= -0.5 && p["alpha"] > 0 && p["z"] > 0;
        };
        e.constraints_text = "gamma > 0; nu >= -1/2; alpha > 0; z > 0";
        e.default_grid = {{{"nu", 0}, {"alpha", 1}, {"gamma", 1}, {"z", 1}},
                          {{"nu", 1}, {"alpha", 0.5}, {"gamma", 2}, {"z", 0.8}},
                          {{"nu", 0.5}, {"alpha", 2}, {"gamma", 0.7}, {"z", 1.5}}};
        e.provenance = "source: G&R 6.522.12; seed F(x) = K_0(a x) J_nu(c x)";
        e.tol_class = TolClass::Oscillatory;
        out.push_back(std::move(e));
    }
    {
        IntegralEntry e;
        e.id = "T06b";
        e.group = Group::G2;
        e.statement = "int_0^inf c J_nu(c z) l1^nu/(l2^nu (l2^2-l1^2)) dc = K_0(alpha z) J_nu(beta z), "
                      "l1, l2 at (alpha, beta, c)";
        e.variable = "c";
        e.parameters = {"nu", "alpha", "beta", "z"};
        e.integrand = [](const ParamPoint& p, double c) {
            return c * l_ratio_kernel(p["nu"], p["alpha"], p["beta"], c) * J(p["nu"], c * p["z"]);
        };
        e.pieces = single(
            [](const ParamPoint& p, double c) { return c * l_ratio_kernel(p["nu"], p["alpha"], p["beta"], c); },
            [](const ParamPoint&) { return Interval::full_half_line(); },
            [](const ParamPoint& p) { return kernel_j(p["nu"], p["z"]); });
        e.rhs = [](const ParamPoint& p) { return K(0, p["alpha"] * p["z"]) * J(p["nu"], p["beta"] * p["z"]); };
        e.constraints = [](const ParamPoint& p) {
            return p["beta"] > 0 && p["nu"] >= -0.5 && p["alpha"] > 0 && p["z"] > 0;
        };
        e.constraints_text = "beta > 0; nu >= -1/2; alpha > 0; z > 0";
        e.default_grid = {{{"nu", 0}, {"alpha", 1}, {"beta", 1}, {"z", 1}},
                          {{"nu", 1}, {"alpha", 0.5}, {"beta", 2}, {"z", 0.8}},
                          {{"nu", 0.5}, {"alpha", 2}, {"beta", 0.7}, {"z", 1.5}}};
        e.provenance = "source: G&R 6.522.12; seed G(x) = K_0(a x) J_nu(b x)";
        e.tol_class = TolClass::Oscillatory;
        out.push_back(std::move(e));
    }
    {
        IntegralEntry e;
        e.id = "T07a";
        e.group = Group::G2;
        e.statement =
            "int_0^inf c J_0(c z) (a^4+b^4+c^4-2a^2b^2+2a^2c^2+2b^2c^2)^(-1/2) dc = I_0(a z) K_0(b z)";
        e.variable = "c";
        e.parameters = {"a", "b", "z"};
        auto smooth = [](const ParamPoint& p, double c) {
            const double a = p["a"], b = p["b"];
            const double s = a * a + b * b + c * c;
            return c / std::sqrt((s - 2 * a * b) * (s + 2 * a * b));
        };
        e.integrand = [smooth](const ParamPoint& p, double c) { return smooth(p, c) * J(0, c * p["z"]); };
        e.pieces = single(smooth, [](const ParamPoint&) { return Interval::full_half_line(); },
                          [](const ParamPoint& p) { return kernel_j(0, p["z"]); });
        e.rhs = [](const ParamPoint& p) { return I(0, p["a"] * p["z"]) * K(0, p["b"] * p["z"]); };
        e.constraints = [](const ParamPoint& p) { return p["b"] > p["a"] && p["a"] > 0 && p["z"] > 0; };
        e.constraints_text = "0 < a < b; z > 0";
        e.default_grid = {{{"a", 0.5}, {"b", 1}, {"z", 1}},
                          {{"a", 1}, {"b", 2}, {"z", 0.7}},
                          {{"a", 0.3}, {"b", 1.5}, {"z", 2}}};
        e.provenance = "source: G&R 6.522.4; seed F(x) = I_0(a x) K_0(b x)";
        e.tol_class = TolClass::Oscillatory;
        out.push_back(std::move(e));
    }
    {
        IntegralEntry e;
        e.id = "T07b";
        e.group = Group::G2;
        e.statement = "int_0^inf a J_0(a z)/(l2^2-l1^2) da = I_0(c z) K_0(b z), l1, l2 at (a, b, c)";
        e.variable = "a";
        e.parameters = {"b", "c", "z"};
        e.integrand = [](const ParamPoint& p, double a) {
            return a / l_gap(a, p["b"], p["c"]) * J(0, a * p["z"]);
        };
        e.pieces = single([](const ParamPoint& p, double a) { return a / l_gap(a, p["b"], p["c"]); },
                          [](const ParamPoint&) { return Interval::full_half_line(); },
                          [](const ParamPoint& p) { return kernel_j(0, p["z"]); });
        e.rhs = [](const ParamPoint& p) { return I(0, p["c"] * p["z"]) * K(0, p["b"] * p["z"]); };
        e.constraints = [](const ParamPoint& p) { return p["b"] > p["c"] && p["c"] > 0 && p["z"] > 0; };
        e.constraints_text = "0 < c < b; z > 0";
        e.default_grid = {{{"b", 1}, {"c", 0.5}, {"z", 1}},
                          {{"b", 2}, {"c", 1}, {"z", 0.7}},
                          {{"b", 1.5}, {"c", 0.3}, {"z", 2}}};
        e.provenance = "source: G&R 6.522.4; seed G(x) = I_0(c x) K_0(b x)";
        e.tol_class = TolClass::Oscillatory;
        out.push_back(std::move(e));
    }
    {
        IntegralEntry e;
        e.id = "T08a";
        e.group = Group::G2;
        e.statement = "int_0^inf b^(nu+1)/(l2^2-l1^2)^(2nu+1) J_nu(b z) db = z^nu (alpha gamma)^-nu sqrt(pi) / "
                      "(2^(3nu) Gamma(nu+1/2)) K_nu(alpha z) J_nu(gamma z), l1, l2 at (alpha, b, gamma)";
        e.variable = "b";
        e.parameters = {"nu", "alpha", "gamma", "z"};
        auto smooth = [](const ParamPoint& p, double b) {
            const double nu = p["nu"];
            return std::pow(b, nu + 1) / std::pow(l_gap(p["alpha"], b, p["gamma"]), 2 * nu + 1);
        };
        e.integrand = [smooth](const ParamPoint& p, double b) { return smooth(p, b) * J(p["nu"], b * p["z"]); };
        e.pieces = single(smooth, [](const ParamPoint&) { return Interval::full_half_line(); },
                          [](const ParamPoint& p) { return kernel_j(p["nu"], p["z"]); });
        e.rhs = [](const ParamPoint& p) {
            const double nu = p["nu"], z = p["z"];
            return std::pow(z, nu) * std::pow(p["alpha"] * p["gamma"], -nu) * sonine_factor(nu) *
                   K(nu, p["alpha"] * z) * J(nu, p["gamma"] * z);
        };
        e.constraints = [](const ParamPoint& p) {
            return p["gamma"] > 0 && p["nu"] > -1.0 / 6.0 && p["alpha"] > 0 && p["z"] > 0;
        };
        e.constraints_text = "gamma > 0; nu > -1/6 (divergent below); alpha > 0; z > 0";
        e.default_grid = {{{"nu", 0}, {"alpha", 1}, {"gamma", 1}, {"z", 1}},
                          {{"nu", 0.5}, {"alpha", 0.5}, {"gamma", 2}, {"z", 0.8}},
                          {{"nu", 1}, {"alpha", 2}, {"gamma", 0.7}, {"z", 1.5}}};
        e.provenance = "source: G&R 6.522.15; seed F(x) = x^nu (ac)^-nu sqrt(pi) K_nu(a x) J_nu(c x) / "
                       "(2^(3nu) Gamma(nu+1/2))";
        e.tol_class = TolClass::Oscillatory;
        out.push_back(std::move(e));
    }
    {
        IntegralEntry e;
        e.id = "T08b";
        e.group = Group::G2;
        e.statement = "int_0^inf c^(nu+1)/(l2^2-l1^2)^(2nu+1) J_nu(c z) dc = z^nu (alpha beta)^-nu sqrt(pi) / "
                      "(2^(3nu) Gamma(nu+1/2)) K_nu(alpha z) J_nu(beta z), l1, l2 at (alpha, beta, c)";
        e.variable = "c";
        e.parameters = {"nu", "alpha", "beta", "z"};
        auto smooth = [](const ParamPoint& p, double c) {
            const double nu = p["nu"];
            return std::pow(c, nu + 1) / std::pow(l_gap(p["alpha"], p["beta"], c), 2 * nu + 1);
        };
        e.integrand = [smooth](const ParamPoint& p, double c) { return smooth(p, c) * J(p["nu"], c * p["z"]); };
        e.pieces = single(smooth, [](const ParamPoint&) { return Interval::full_half_line(); },
                          [](const ParamPoint& p) { return kernel_j(p["nu"], p["z"]); });
        e.rhs = [](const ParamPoint& p) {
            const double nu = p["nu"], z = p["z"];
            return std::pow(z, nu) * std::pow(p["alpha"] * p["beta"], -nu) * sonine_factor(nu) *
                   K(nu, p["alpha"] * z) * J(nu, p["beta"] * z);
        };
        e.constraints = [](const ParamPoint& p) {
            return p["beta"] > 0 && p["nu"] > -1.0 / 6.0 && p["alpha"] > 0 && p["z"] > 0;
        };
        e.constraints_text = "beta > 0; nu > -1/6 (divergent below); alpha > 0; z > 0";
        e.default_grid = {{{"nu", 0}, {"alpha", 1}, {"beta", 1}, {"z", 1}},
                          {{"nu", 0.5}, {"alpha", 0.5}, {"beta", 2}, {"z", 0.8}},
                          {{"nu", 1}, {"alpha", 2}, {"beta", 0.7}, {"z", 1.5}}};
        e.provenance = "source: G&R 6.522.15; seed G(x) = x^nu (ab)^-nu sqrt(pi) K_nu(a x) J_nu(b x) / "
                       "(2^(3nu) Gamma(nu+1/2))";
        e.tol_class = TolClass::Oscillatory;
        out.push_back(std::move(e));
    }
    {
        IntegralEntry e;
        e.id = "T09a";
        e.group = Group::G2;
        e.statement = "int_0^inf 2a^2 J_1(a z) (a^2+beta^2-gamma^2) [(a^2+beta^2+gamma^2)^2-4a^2gamma^2]^(-3/2) da "
                      "= z K_0(beta z) J_0(gamma z)";
        e.variable = "a";
        e.parameters = {"beta", "gamma", "z"};
        auto smooth = [](const ParamPoint& p, double a) {
            const double be = p["beta"], ga = p["gamma"];
            return 2 * a * a * (a * a + be * be - ga * ga) * std::pow(quartic(a, be, ga), -1.5);
        };
        e.integrand = [smooth](const ParamPoint& p, double a) { return smooth(p, a) * J(1, a * p["z"]); };
        e.pieces = single(smooth, [](const ParamPoint&) { return Interval::full_half_line(); },
                          [](const ParamPoint& p) { return kernel_j(1, p["z"]); });
        e.rhs = [](const ParamPoint& p) {
            return p["z"] * K(0, p["beta"] * p["z"]) * J(0, p["gamma"] * p["z"]);
        };
        e.constraints = [](const ParamPoint& p) { return p["gamma"] > 0 && p["beta"] > 0 && p["z"] > 0; };
        e.constraints_text = "gamma > 0; beta > 0; z > 0";
        e.default_grid = {{{"beta", 1}, {"gamma", 0.5}, {"z", 1}},
                          {{"beta", 0.5}, {"gamma", 1}, {"z", 2}},
                          {{"beta", 2}, {"gamma", 1}, {"z", 0.7}}};
        e.provenance = "source: G&R 6.525.1; seed F(x) = x K_0(b x) J_0(c x)";
        e.tol_class = TolClass::Oscillatory;
        out.push_back(std::move(e));
    }
    {
        IntegralEntry e;
        e.id = "T09b";
        e.group = Group::G2;
        e.statement = "int_0^inf c J_0(c z) (alpha^2+beta^2-c^2) [(alpha^2+beta^2+c^2)^2-4alpha^2c^2]^(-3/2) dc "
                      "= z/(2 alpha) J_1(alpha z) K_0(beta z)";
        e.variable = "c";
        e.parameters = {"alpha", "beta", "z"};
        auto smooth = [](const ParamPoint& p, double c) {
            const double al = p["alpha"], be = p["beta"];
            return c * (al * al + be * be - c * c) * std::pow(quartic(al, be, c), -1.5);
        };
        e.integrand = [smooth](const ParamPoint& p, double c) { return smooth(p, c) * J(0, c * p["z"]); };
        e.pieces = single(smooth, [](const ParamPoint&) { return Interval::full_half_line(); },
                          [](const ParamPoint& p) { return kernel_j(0, p["z"]); });
        e.rhs = [](const ParamPoint& p) {
            const double z = p["z"];
            return z / (2 * p["alpha"]) * J(1, p["alpha"] * z) * K(0, p["beta"] * z);
        };
        e.constraints = [](const ParamPoint& p) { return p["alpha"] > 0 && p["beta"] > 0 && p["z"] > 0; };
        e.constraints_text = "alpha > 0; beta > 0; z > 0";
        e.default_grid = {{{"alpha", 1}, {"beta", 1}, {"z", 1}},
                          {{"alpha", 0.5}, {"beta", 2}, {"z", 0.7}},
                          {{"alpha", 2}, {"beta", 0.5}, {"z", 1.5}}};
        e.provenance = "source: G&R 6.525.1; seed G(x) = x J_1(a x) K_0(b x)/(2a)";
        e.tol_class = TolClass::Oscillatory;
        out.push_back(std::move(e));
    }
    {
        IntegralEntry e;
        e.id = "T09c";
        e.group = Group::G2;
        e.statement = "int_0^inf J_1(b z) 2b^2 (p^2+b^2-gamma^2)/(l2^2-l1^2)^3 db = z K_0(p z) J_0(gamma z), "
                      "l1, l2 at (p, b, gamma)";
        e.variable = "b";
        e.parameters = {"p", "gamma", "z"};
        auto smooth = [](const ParamPoint& p, double b) {
            const double pp = p["p"], ga = p["gamma"];
            return 2 * b * b * (pp * pp + b * b - ga * ga) / std::pow(l_gap(pp, b, ga), 3);
        };
        e.integrand = [smooth](const ParamPoint& p, double b) { return smooth(p, b) * J(1, b * p["z"]); };
        e.pieces = single(smooth, [](const ParamPoint&) { return Interval::full_half_line(); },
                          [](const ParamPoint& p) { return kernel_j(1, p["z"]); });
        e.rhs = [](const ParamPoint& p) { return p["z"] * K(0, p["p"] * p["z"]) * J(0, p["gamma"] * p["z"]); };
        e.constraints = [](const ParamPoint& p) { return p["gamma"] > 0 && p["p"] > 0 && p["z"] > 0; };
        e.constraints_text = "gamma > 0; p > 0; z > 0";
        e.default_grid = {{{"p", 1}, {"gamma", 1}, {"z", 1}},
                          {{"p", 2}, {"gamma", 0.5}, {"z", 0.5}},
                          {{"p", 0.7}, {"gamma", 1.5}, {"z", 1.3}}};
        e.provenance = "source: G&R 6.525.1; seed H(x) = x K_0(a x) J_0(c x)";
        e.tol_class = TolClass::Oscillatory;
        out.push_back(std::move(e));
    }
    {
        IntegralEntry e;
        e.id = "T09d";
        e.group = Group::G2;
        e.statement = "int_0^inf J_0(c z) c (p^2+q^2-c^2)/(l2^2-l1^2)^3 dc = z/(2q) J_1(q z) K_0(p z), "
                      "l1, l2 at (p, q, c)";
        e.variable = "c";
        e.parameters = {"p", "q", "z"};
        auto smooth = [](const ParamPoint& p, double c) {
            const double pp = p["p"], q = p["q"];
            return c * (pp * pp + q * q - c * c) / std::pow(l_gap(pp, q, c), 3);
        };
        e.integrand = [smooth](const ParamPoint& p, double c) { return smooth(p, c) * J(0, c * p["z"]); };
        e.pieces = single(smooth, [](const ParamPoint&) { return Interval::full_half_line(); },
                          [](const ParamPoint& p) { return kernel_j(0, p["z"]); });
        e.rhs = [](const ParamPoint& p) {
            const double z = p["z"];
            return z / (2 * p["q"]) * J(1, p["q"] * z) * K(0, p["p"] * z);
        };
        e.constraints = [](const ParamPoint& p) { return p["p"] > std::fabs(p["q"]) && p["q"] > 0 && p["z"] > 0; };
        e.constraints_text = "p > |q|; q > 0; z > 0";
        e.default_grid = {{{"p", 1}, {"q", 0.5}, {"z", 1}},
                          {{"p", 2}, {"q", 1}, {"z", 0.7}},
                          {{"p", 1.5}, {"q", 1}, {"z", 2}}};
        e.provenance = "source: G&R 6.525.1; seed I(x) = x J_1(b x) K_0(a x)/(2b)";
        e.tol_class = TolClass::Oscillatory;
        out.push_back(std::move(e));
    }
    {
        IntegralEntry e;
        e.id = "T10";
        e.group = Group::G2;
        e.statement = "int_0^inf J_nu(b z)/sqrt(b^2+4a^2) db = I_(nu/2)(a z) K_(nu/2)(a z)";
        e.variable = "b";
        e.parameters = {"nu", "a", "z"};
        auto smooth = [](const ParamPoint& p, double b) { return 1 / std::sqrt(b * b + 4 * p["a"] * p["a"]); };
        e.integrand = [smooth](const ParamPoint& p, double b) { return smooth(p, b) * J(p["nu"], b * p["z"]); };
        e.pieces = single(smooth, [](const ParamPoint&) { return Interval::full_half_line(); },
                          [](const ParamPoint& p) { return kernel_j(p["nu"], p["z"]); });
        e.rhs = [](const ParamPoint& p) { return IK(p["nu"] / 2, p["nu"] / 2, p["a"] * p["z"]); };
        e.constraints = [](const ParamPoint& p) { return p["a"] > 0 && p["nu"] >= -0.5 && p["z"] > 0; };
        e.constraints_text = "a > 0; nu >= -1/2; z > 0";
        e.default_grid = {{{"nu", 0}, {"a", 0.5}, {"z", 1}},
                          {{"nu", 1}, {"a", 1}, {"z", 1.5}},
                          {{"nu", 0.5}, {"a", 0.3}, {"z", 2}}};
        e.provenance = "source: G&R 6.522.9; seed F(x) = I_(nu/2)(a x) K_(nu/2)(a x)";
        e.tol_class = TolClass::Oscillatory;
        out.push_back(std::move(e));
    }
    {
        IntegralEntry e;
        e.id = "T11";
        e.group = Group::G2;
        e.statement = "int_2a^inf J_nu(b z)/sqrt(b^2-4a^2) db = -(pi/2) J_(nu/2)(a z) Y_(nu/2)(a z)";
        e.variable = "b";
        e.parameters = {"nu", "a", "z"};
        auto smooth = [](const ParamPoint& p, double b) {
            const double two_a = 2 * p["a"];
            return 1 / std::sqrt((b - two_a) * (b + two_a));
        };
        e.integrand = [smooth](const ParamPoint& p, double b) {
            return b <= 2 * p["a"] ? 0.0 : smooth(p, b) * J(p["nu"], b * p["z"]);
        };
        e.pieces = single(smooth, [](const ParamPoint& p) { return Interval::tail(2 * p["a"], Singularity::InverseSqrtAtLower); },
                          [](const ParamPoint& p) { return kernel_j(p["nu"], p["z"]); });
        e.rhs = [](const ParamPoint& p) {
            const double x = p["a"] * p["z"], h = p["nu"] / 2;
            return -kPi / 2 * J(h, x) * Y(h, x);
        };
        e.constraints = [](const ParamPoint& p) { return p["a"] > 0 && p["nu"] >= -0.5 && p["z"] > 0; };
        e.constraints_text = "a > 0; nu >= -1/2; z > 0";
        e.default_grid = {{{"nu", 0}, {"a", 1}, {"z", 1}},
                          {{"nu", 1}, {"a", 0.5}, {"z", 1}},
                          {{"nu", 2}, {"a", 0.75}, {"z", 2}}};
        e.provenance = "source: G&R 6.522.10; seed F(x) = -(pi/2) J_(nu/2)(a x) Y_(nu/2)(a x)";
        e.tol_class = TolClass::Singular;
        out.push_back(std::move(e));
    }
    {
        IntegralEntry e;
        e.id = "T12";
        e.group = Group::G2;
        e.statement = "int_0^inf J_nu(b z)/sqrt(b^2+4a^2) [b+sqrt(b^2+4a^2)]^mu db = 2^mu a^mu "
                      "I_((nu-mu)/2)(a z) K_((nu+mu)/2)(a z)";
        e.variable = "b";
        e.parameters = {"nu", "mu", "a", "z"};
        auto smooth = [](const ParamPoint& p, double b) {
            const double r = std::sqrt(b * b + 4 * p["a"] * p["a"]);
            return std::pow(b + r, p["mu"]) / r;
        };
        e.integrand = [smooth](const ParamPoint& p, double b) { return smooth(p, b) * J(p["nu"], b * p["z"]); };
        e.pieces = single(smooth, [](const ParamPoint&) { return Interval::full_half_line(); },
                          [](const ParamPoint& p) { return kernel_j(p["nu"], p["z"]); });
        e.rhs = [](const ParamPoint& p) {
            const double nu = p["nu"], mu = p["mu"], a = p["a"];
            return std::pow(2 * a, mu) * IK((nu - mu) / 2, (nu + mu) / 2, a * p["z"]);
        };
        e.constraints = [](const ParamPoint& p) {
            return p["a"] > 0 && p["nu"] >= -0.5 && p["mu"] < 1.5 && p["nu"] - p["mu"] > -2 && p["z"] > 0;
        };
        e.constraints_text = "a > 0; nu >= -1/2; mu < 3/2 (divergent for mu >= 3/2); nu - mu > -2; z > 0";
        e.default_grid = {{{"nu", 1}, {"mu", 0.5}, {"a", 0.5}, {"z", 1}},
                          {{"nu", 2}, {"mu", 1}, {"a", 1}, {"z", 1}},
                          {{"nu", 0.5}, {"mu", 1}, {"a", 0.7}, {"z", 1.5}}};
        e.provenance = "source: G&R 6.522.12; seed F(x) = 2^mu a^mu I_((nu-mu)/2)(a x) K_((nu+mu)/2)(a x)";
        e.tol_class = TolClass::Oscillatory;
        out.push_back(std::move(e));
    }
    {
        IntegralEntry e;
        e.id = "T13";
        e.group = Group::G2;
        e.statement = "int_0^inf c J_0(c x) (b^2+c^2-a^2) [(a^2+b^2+c^2)^2-4a^2b^2]^(-3/2) dc = x/(2b) I_0(a x) "
                      "K_1(b x)";
        e.variable = "c";
        e.parameters = {"a", "b", "x"};
        auto smooth = [](const ParamPoint& p, double c) {
            const double a = p["a"], b = p["b"];
            return c * (b * b + c * c - a * a) * std::pow(quartic(a, c, b), -1.5);
        };
        e.integrand = [smooth](const ParamPoint& p, double c) { return smooth(p, c) * J(0, c * p["x"]); };
        e.pieces = single(smooth, [](const ParamPoint&) { return Interval::full_half_line(); },
                          [](const ParamPoint& p) { return kernel_j(0, p["x"]); });
        e.rhs = [](const ParamPoint& p) {
            const double x = p["x"];
            return x / (2 * p["b"]) * I(0, p["a"] * x) * K(1, p["b"] * x);
        };
        e.constraints = [](const ParamPoint& p) { return p["b"] > std::fabs(p["a"]) && p["x"] > 0; };
        e.constraints_text = "b > |a|; x > 0";
        e.default_grid = {{{"a", 0.5}, {"b", 1}, {"x", 1}},
                          {{"a", 1}, {"b", 2}, {"x", 0.5}},
                          {{"a", 0.2}, {"b", 1}, {"x", 2}}};
        e.provenance = "source: G&R 6.525.2; seed F(x) = x I_0(a x) K_1(b x)/(2b)";
        e.tol_class = TolClass::Oscillatory;
        out.push_back(std::move(e));
    }
}

}  // namespace hdual::catalog::detail
