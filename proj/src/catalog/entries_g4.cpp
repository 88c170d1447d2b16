#include <cmath>

#include "internal.hpp"

namespace hdual::catalog::detail {

using quad::Interval;
using quad::Singularity;

void add_g4(std::vector<IntegralEntry>& out) {
    {
        IntegralEntry e;
        e.id = "T21";
        e.group = Group::G4;
        e.statement = "int_0^inf J_nu(c z) e^(-2/c) c^-1 dc = 2 J_nu(2 sqrt z) K_nu(2 sqrt z)";
        e.variable = "c";
        e.parameters = {"nu", "z"};
        auto smooth = [](const ParamPoint&, double c) { return std::exp(-2 / c) / c; };
        e.integrand = [smooth](const ParamPoint& p, double c) { return smooth(p, c) * J(p["nu"], c * p["z"]); };
        e.pieces = single(smooth, [](const ParamPoint&) { return Interval::full_half_line(); },
                          [](const ParamPoint& p) { return kernel_j(p["nu"], p["z"]); });
        e.rhs = [](const ParamPoint& p) {
            const double s = 2 * std::sqrt(p["z"]);
            return 2 * J(p["nu"], s) * K(p["nu"], s);
        };
        e.constraints = [](const ParamPoint& p) { return p["nu"] >= -0.5 && p["z"] > 0; };
        e.constraints_text = "nu >= -1/2; z > 0";
        e.default_grid = {{{"nu", 0}, {"z", 1}}, {{"nu", 1}, {"z", 2}}, {{"nu", 0.5}, {"z", 0.5}}};
        e.provenance = "source: G&R 6.526.4 (as cited); seed F(x) = 2 J_nu(2 sqrt(a x)) K_nu(2 sqrt(a x))";
        e.tol_class = TolClass::Oscillatory;
        out.push_back(std::move(e));
    }
    {
        // Encoded exactly as stated.  The finite-range form is false; the
        // identity holds for int_0^inf J_1(b z) ln|1 - b^2/a^2| db.
        IntegralEntry e;
        e.id = "T22";
        e.group = Group::G4;
        e.statement = "int_0^a J_1(b z) ln(1 - b^2/a^2) db = -pi z^-1 Y_0(a z)";
        e.variable = "b";
        e.parameters = {"a", "z"};
        auto smooth = [](const ParamPoint& p, double b) {
            const double u = b / p["a"];
            return std::log1p(-u * u);
        };
        e.integrand = [smooth](const ParamPoint& p, double b) { return smooth(p, b) * J(1, b * p["z"]); };
        e.pieces = single(smooth,
                          [](const ParamPoint& p) { return Interval::finite_from_zero(p["a"], Singularity::LogAtUpper); },
                          [](const ParamPoint& p) { return kernel_j(1, p["z"]); });
        e.rhs = [](const ParamPoint& p) { return -kPi / p["z"] * Y(0, p["a"] * p["z"]); };
        e.constraints = [](const ParamPoint& p) { return p["a"] > 0 && p["z"] > 0; };
        e.constraints_text = "a > 0; z > 0";
        e.default_grid = {{{"a", 1}, {"z", 1}}, {{"a", 2}, {"z", 0.7}}, {{"a", 1.5}, {"z", 2}}};
        e.provenance = "source: G&R 6.512.6; seed F(x) = -pi x^-1 Y_0(a x)";
        e.tol_class = TolClass::Singular;
        out.push_back(std::move(e));
    }
    {
        IntegralEntry e;
        e.id = "T23";
        e.group = Group::G4;
        e.statement = "int_0^inf J_1(c z) ln(1 + c^2) dc = 2 z^-1 K_0(z)";
        e.variable = "c";
        e.parameters = {"z"};
        auto smooth = [](const ParamPoint&, double c) { return std::log1p(c * c); };
        e.integrand = [smooth](const ParamPoint& p, double c) { return smooth(p, c) * J(1, c * p["z"]); };
        e.pieces = single(smooth, [](const ParamPoint&) { return Interval::full_half_line(); },
                          [](const ParamPoint& p) { return kernel_j(1, p["z"]); });
        e.rhs = [](const ParamPoint& p) { return 2 / p["z"] * K(0, p["z"]); };
        e.constraints = [](const ParamPoint& p) { return p["z"] > 0; };
        e.constraints_text = "z > 0";
        e.default_grid = {{{"z", 1}}, {{"z", 2}}, {{"z", 0.5}}};
        e.provenance = "source: G&R 6.512.9; seed F(x) = 2 x^-1 K_0(a x)";
        e.tol_class = TolClass::Oscillatory;
        out.push_back(std::move(e));
    }
    {
        IntegralEntry e;
        e.id = "T24";
        e.group = Group::G4;
        e.statement = "int_0^2a arcsin(b/(2a)) J_1(b z) db = pi/(2z) [J_0(a z)^2 - J_0(2 a z)]";
        e.variable = "b";
        e.parameters = {"a", "z"};
        auto smooth = [](const ParamPoint& p, double b) { return std::asin(std::min(1.0, b / (2 * p["a"]))); };
        e.integrand = [smooth](const ParamPoint& p, double b) { return smooth(p, b) * J(1, b * p["z"]); };
        e.pieces = single(
            smooth,
            [](const ParamPoint& p) { return Interval::finite_from_zero(2 * p["a"], Singularity::InverseSqrtAtUpper); },
            [](const ParamPoint& p) { return kernel_j(1, p["z"]); });
        e.rhs = [](const ParamPoint& p) {
            const double x = p["a"] * p["z"], j0 = J(0, x);
            return kPi / (2 * p["z"]) * (j0 * j0 - J(0, 2 * x));
        };
        e.constraints = [](const ParamPoint& p) { return p["a"] > 0 && p["z"] > 0; };
        e.constraints_text = "a > 0; z > 0";
        e.default_grid = {{{"a", 1}, {"z", 1}}, {{"a", 0.5}, {"z", 2}}, {{"a", 2}, {"z", 0.6}}};
        e.provenance = "source: G&R 6.513.9; seed F(x) = pi/(2x) J_0(a x)^2";
        e.tol_class = TolClass::Singular;
        out.push_back(std::move(e));
    }
}

}  // namespace hdual::catalog::detail
