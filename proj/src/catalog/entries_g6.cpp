#include <cmath>

#include "internal.hpp"

namespace hdual::catalog::detail {

using quad::Interval;
using quad::Singularity;

void add_g6(std::vector<IntegralEntry>& out) {
    {
        IntegralEntry e;
        e.id = "T28a";
        e.group = Group::G6;
        e.statement =
            "int_beta^inf P_n^(nu,0)(1 - 2 beta^2/a^2) J_(nu+2n+1)(a z) a^-nu da = z^-1 beta^-nu J_nu(beta z)";
        e.variable = "a";
        e.parameters = {"nu", "n", "beta", "z"};
        auto smooth = [](const ParamPoint& p, double a) {
            const double nu = p["nu"], be = p["beta"];
            return specfun::jacobi_p(static_cast<int>(p["n"]), nu, 0.0, 1 - 2 * (be / a) * (be / a)).value *
                   std::pow(a, -nu);
        };
        e.integrand = [smooth](const ParamPoint& p, double a) {
            return smooth(p, a) * J(p["nu"] + 2 * p["n"] + 1, a * p["z"]);
        };
        e.pieces = single(smooth, [](const ParamPoint& p) { return Interval::tail(p["beta"]); },
                          [](const ParamPoint& p) { return kernel_j(p["nu"] + 2 * p["n"] + 1, p["z"]); });
        e.rhs = [](const ParamPoint& p) {
            return std::pow(p["beta"], -p["nu"]) * J(p["nu"], p["beta"] * p["z"]) / p["z"];
        };
        e.constraints = [](const ParamPoint& p) {
            return is_nonneg_int(p["n"]) && p["nu"] > -p["n"] - 1 && p["nu"] > -0.5 && p["beta"] > 0 && p["z"] > 0;
        };
        e.constraints_text = "n in N0; nu > -n - 1; nu > -1/2 (divergent otherwise); beta > 0; z > 0";
        e.default_grid = {{{"nu", 0.5}, {"n", 0}, {"beta", 1}, {"z", 1}},
                          {{"nu", 1}, {"n", 1}, {"beta", 0.5}, {"z", 2}},
                          {{"nu", 0}, {"n", 2}, {"beta", 1.5}, {"z", 0.7}}};
        e.provenance = "source: G&R 6.512.4; seed F(x) = x^-1 b^-nu J_nu(b x)";
        e.tol_class = TolClass::Oscillatory;
        out.push_back(std::move(e));
    }
    {
        IntegralEntry e;
        e.id = "T28b";
        e.group = Group::G6;
        e.statement = "int_0^alpha P_n^(nu,0)(1 - 2 b^2/alpha^2) J_nu(b z) b^(nu+1) db = z^-1 alpha^(nu+1) "
                      "J_(nu+2n+1)(alpha z)";
        e.variable = "b";
        e.parameters = {"nu", "n", "alpha", "z"};
        auto smooth = [](const ParamPoint& p, double b) {
            const double nu = p["nu"], al = p["alpha"];
            return specfun::jacobi_p(static_cast<int>(p["n"]), nu, 0.0, 1 - 2 * (b / al) * (b / al)).value *
                   std::pow(b, nu + 1);
        };
        e.integrand = [smooth](const ParamPoint& p, double b) { return smooth(p, b) * J(p["nu"], b * p["z"]); };
        e.pieces = single(smooth, [](const ParamPoint& p) { return Interval::finite_from_zero(p["alpha"]); },
                          [](const ParamPoint& p) { return kernel_j(p["nu"], p["z"]); });
        e.rhs = [](const ParamPoint& p) {
            const double nu = p["nu"], al = p["alpha"];
            return std::pow(al, nu + 1) * J(nu + 2 * p["n"] + 1, al * p["z"]) / p["z"];
        };
        e.constraints = [](const ParamPoint& p) {
            return is_nonneg_int(p["n"]) && p["nu"] > -1 && p["alpha"] > 0 && p["z"] > 0;
        };
        e.constraints_text = "n in N0; nu > -1 (integrable at b = 0); alpha > 0; z > 0";
        e.default_grid = {{{"nu", 0.5}, {"n", 0}, {"alpha", 1}, {"z", 1}},
                          {{"nu", 1}, {"n", 1}, {"alpha", 2}, {"z", 0.7}},
                          {{"nu", 0}, {"n", 2}, {"alpha", 1.5}, {"z", 2}}};
        e.provenance = "source: G&R 6.512.4; seed G(x) = x^-1 a^(nu+1) J_(nu+2n+1)(a x)";
        e.tol_class = TolClass::Decaying;
        out.push_back(std::move(e));
    }
    {
        IntegralEntry e;
        e.id = "T29";
        e.group = Group::G6;
        e.statement = "int_0^2a J_nu(b z)/sqrt(4a^2-b^2) T_n(b/(2a)) db = (pi/2) J_((nu+n)/2)(a z) J_((nu-n)/2)(a z)";
        e.variable = "b";
        e.parameters = {"nu", "n", "a", "z"};
        auto smooth = [](const ParamPoint& p, double b) {
            const double two_a = 2 * p["a"];
            return specfun::chebyshev_t(static_cast<int>(p["n"]), std::min(1.0, b / two_a)).value /
                   std::sqrt((two_a - b) * (two_a + b));
        };
        e.integrand = [smooth](const ParamPoint& p, double b) { return smooth(p, b) * J(p["nu"], b * p["z"]); };
        e.pieces = single(
            smooth,
            [](const ParamPoint& p) { return Interval::finite_from_zero(2 * p["a"], Singularity::InverseSqrtAtUpper); },
            [](const ParamPoint& p) { return kernel_j(p["nu"], p["z"]); });
        e.rhs = [](const ParamPoint& p) {
            const double nu = p["nu"], n = p["n"], x = p["a"] * p["z"];
            return kPi / 2 * J((nu + n) / 2, x) * J((nu - n) / 2, x);
        };
        e.constraints = [](const ParamPoint& p) {
            return is_nonneg_int(p["n"]) && p["a"] > 0 && p["nu"] >= -0.5 && p["z"] > 0;
        };
        e.constraints_text = "n in N0; a > 0; nu >= -1/2; z > 0";
        e.default_grid = {{{"nu", 0}, {"n", 0}, {"a", 1}, {"z", 1}},
                          {{"nu", 1}, {"n", 2}, {"a", 0.5}, {"z", 2}},
                          {{"nu", 2.5}, {"n", 1}, {"a", 1}, {"z", 1.5}}};
        e.provenance = "source: G&R 6.522.11; seed F(x) = (pi/2) J_((nu+n)/2)(a x) J_((nu-n)/2)(a x)";
        e.tol_class = TolClass::Singular;
        out.push_back(std::move(e));
    }
}

}  // namespace hdual::catalog::detail
