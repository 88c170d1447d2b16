#include <cmath>
#include <complex>

#include "hankel_dual/errors.hpp"
#include "internal.hpp"

namespace hdual::catalog::detail {

namespace {

using quad::Interval;
using quad::Singularity;

// e^{i(nu+1)pi/2} K_2nu(2 e^{i pi/4} sqrt c) + conjugate pair.  Both terms
// are evaluated in complex arithmetic; the sum must come out real.
double complex_k_pair(double nu, double c) {
    const double r = 2.0 * std::sqrt(c);
    const std::complex<double> w = std::polar(1.0, kPi / 4);
    const std::complex<double> ph = std::polar(1.0, (nu + 1) * kPi / 2);
    const auto k1 = specfun::bessel_k(2 * nu, r * w).z();
    const auto k2 = specfun::bessel_k(2 * nu, r * std::conj(w)).z();
    const std::complex<double> s = ph * k1 + std::conj(ph) * k2;
    const double scale = std::abs(k1) + std::abs(k2);
    if (std::fabs(s.imag()) > 1e-12 * scale + 1e-300)
        throw DomainError("complex-K integrand: imaginary part exceeds tolerance");
    return s.real();
}

// int_0^inf J_mu(c z) J_mu(1/(4c)) dc split at c = 1; the part on (0, 1)
// becomes a J_mu(u) tail under u = 1/(4c).
std::vector<Piece> inverse_argument_pieces(double mu, double z) {
    std::vector<Piece> v;
    v.push_back(Piece{[mu, z](double u) { return J(mu, z / (4 * u)) / (4 * u * u); }, Interval::tail(0.25),
                      kernel_j(mu, 1.0)});
    v.push_back(Piece{[mu](double c) { return J(mu, 1 / (4 * c)); }, Interval::tail(1.0), kernel_j(mu, z)});
    return v;
}

}  // namespace

void add_g3(std::vector<IntegralEntry>& out) {
    {
        IntegralEntry e;
        e.id = "T14";
        e.group = Group::G3;
        e.statement = "int_0^inf J_nu(c z) J_2nu(2 sqrt c) dc = z^-1 J_nu(1/z)";
        e.variable = "c";
        e.parameters = {"nu", "z"};
        e.integrand = [](const ParamPoint& p, double c) {
            return J(p["nu"], c * p["z"]) * J(2 * p["nu"], 2 * std::sqrt(c));
        };
        e.pieces = single([](const ParamPoint& p, double c) { return J(2 * p["nu"], 2 * std::sqrt(c)); },
                          [](const ParamPoint&) { return Interval::full_half_line(); },
                          [](const ParamPoint& p) { return kernel_j(p["nu"], p["z"]); });
        e.rhs = [](const ParamPoint& p) { return J(p["nu"], 1 / p["z"]) / p["z"]; };
        e.constraints = [](const ParamPoint& p) { return p["nu"] > 0 && p["z"] > 0; };
        e.constraints_text = "nu > 0; z > 0";
        e.default_grid = {{{"nu", 1}, {"z", 0.8}}, {{"nu", 0.5}, {"z", 1}}, {{"nu", 2}, {"z", 2}}};
        e.provenance = "source: G&R 6.514.1; seed F(x) = x^-1 J_nu(a/x)";
        e.tol_class = TolClass::Oscillatory;
        out.push_back(std::move(e));
    }
    {
        IntegralEntry e;
        e.id = "T15";
        e.group = Group::G3;
        e.statement = "int_0^inf c J_nu(c z) [e^{i(nu+1)pi/2} K_2nu(2 e^{i pi/4} sqrt c) + e^{-i(nu+1)pi/2} "
                      "K_2nu(2 e^{-i pi/4} sqrt c)] dc = z^-3 K_nu(1/z)";
        e.variable = "c";
        e.parameters = {"nu", "z"};
        e.integrand = [](const ParamPoint& p, double c) {
            return c * complex_k_pair(p["nu"], c) * J(p["nu"], c * p["z"]);
        };
        e.pieces = single([](const ParamPoint& p, double c) { return c * complex_k_pair(p["nu"], c); },
                          [](const ParamPoint&) { return Interval::full_half_line(); },
                          [](const ParamPoint& p) { return kernel_j(p["nu"], p["z"], quad::Decay::Exponential); });
        e.rhs = [](const ParamPoint& p) { return K(p["nu"], 1 / p["z"]) / std::pow(p["z"], 3); };
        e.constraints = [](const ParamPoint& p) { return p["nu"] >= -0.5 && p["nu"] < 2.5 && p["z"] > 0; };
        e.constraints_text = "-1/2 <= nu < 5/2; z > 0";
        e.default_grid = {{{"nu", 0}, {"z", 1}}, {{"nu", 0.5}, {"z", 0.5}}, {{"nu", 1}, {"z", 2}}};
        e.provenance = "source: G&R 6.514.3; seed F(x) = b x^-3 K_nu(b/x)";
        e.tol_class = TolClass::Oscillatory;
        out.push_back(std::move(e));
    }
    {
        IntegralEntry e;
        e.id = "T16";
        e.group = Group::G3;
        e.statement = "int_0^inf J_nu(c z) [K_2nu(2 sqrt c) - (pi/2) Y_2nu(2 sqrt c)] dc = -pi/(2z) Y_nu(1/z)";
        e.variable = "c";
        e.parameters = {"nu", "z"};
        auto smooth = [](const ParamPoint& p, double c) {
            const double s = 2 * std::sqrt(c), nu = p["nu"];
            return K(2 * nu, s) - kPi / 2 * Y(2 * nu, s);
        };
        e.integrand = [smooth](const ParamPoint& p, double c) { return smooth(p, c) * J(p["nu"], c * p["z"]); };
        e.pieces = single(
            smooth,
            [](const ParamPoint& p) {
                return Interval::full_half_line(p["nu"] < 0 ? Singularity::InverseSqrtAtLower : Singularity::None);
            },
            [](const ParamPoint& p) { return kernel_j(p["nu"], p["z"]); });
        e.rhs = [](const ParamPoint& p) { return -kPi / (2 * p["z"]) * Y(p["nu"], 1 / p["z"]); };
        e.constraints = [](const ParamPoint& p) { return std::fabs(p["nu"]) < 0.5 && p["z"] > 0; };
        e.constraints_text = "|nu| < 1/2; z > 0";
        e.default_grid = {{{"nu", 0.25}, {"z", 1.3}}, {{"nu", 0}, {"z", 1}}, {{"nu", -0.25}, {"z", 0.7}}};
        e.provenance = "source: G&R 6.514.4; seed F(x) = -pi/(2x) Y_nu(a/x)";
        e.tol_class = TolClass::Oscillatory;
        out.push_back(std::move(e));
    }
    {
        IntegralEntry e;
        e.id = "T17a";
        e.group = Group::G3;
        e.statement = "int_0^inf J_2nu(c z) J_nu(c^2/4) c dc = 2 J_nu(z^2)";
        e.variable = "c";
        e.parameters = {"nu", "z"};
        e.integrand = [](const ParamPoint& p, double c) {
            return c * J(2 * p["nu"], c * p["z"]) * J(p["nu"], c * c / 4);
        };
        e.pieces = single([](const ParamPoint& p, double c) { return c * J(2 * p["nu"], c * p["z"]); },
                          [](const ParamPoint&) { return Interval::full_half_line(); },
                          [](const ParamPoint& p) { return chirp(p["nu"], 0.25); });
        e.rhs = [](const ParamPoint& p) { return 2 * J(p["nu"], p["z"] * p["z"]); };
        e.constraints = [](const ParamPoint& p) { return p["nu"] >= -0.25 && p["z"] > 0; };
        e.constraints_text = "nu >= -1/4; z > 0";
        e.default_grid = {{{"nu", 0}, {"z", 1}}, {{"nu", 0.5}, {"z", 0.7}}, {{"nu", 1}, {"z", 1.5}}};
        e.provenance = "source: G&R 6.516.1; seed F(x) = 2b J_nu(b x^2)";
        e.tol_class = TolClass::Oscillatory;
        out.push_back(std::move(e));
    }
    {
        IntegralEntry e;
        e.id = "T17b";
        e.group = Group::G3;
        e.statement = "int_0^inf J_mu(c z) J_mu(1/(4c)) dc = z^-1 J_2mu(sqrt z)";
        e.variable = "c";
        e.parameters = {"mu", "z"};
        e.integrand = [](const ParamPoint& p, double c) { return J(p["mu"], c * p["z"]) * J(p["mu"], 1 / (4 * c)); };
        e.pieces = [](const ParamPoint& p) { return inverse_argument_pieces(p["mu"], p["z"]); };
        e.rhs = [](const ParamPoint& p) { return J(2 * p["mu"], std::sqrt(p["z"])) / p["z"]; };
        e.constraints = [](const ParamPoint& p) { return p["mu"] > -0.5 && p["z"] > 0; };
        e.constraints_text = "mu > -1/2; z > 0";
        e.default_grid = {{{"mu", 0}, {"z", 1}}, {{"mu", 0.5}, {"z", 2}}, {{"mu", 1.5}, {"z", 0.5}}};
        e.provenance = "source: G&R 6.516.1; seed G(x) = x^-1 J_2mu(a sqrt x)";
        e.tol_class = TolClass::Oscillatory;
        out.push_back(std::move(e));
    }
    {
        IntegralEntry e;
        e.id = "T18a";
        e.group = Group::G3;
        e.statement = "int_0^inf J_(nu/2)(c z) J_(nu/2)(1/(4c)) dc = z^-1 J_nu(sqrt z)";
        e.variable = "c";
        e.parameters = {"nu", "z"};
        e.integrand = [](const ParamPoint& p, double c) {
            return J(p["nu"] / 2, c * p["z"]) * J(p["nu"] / 2, 1 / (4 * c));
        };
        e.pieces = [](const ParamPoint& p) { return inverse_argument_pieces(p["nu"] / 2, p["z"]); };
        e.rhs = [](const ParamPoint& p) { return J(p["nu"], std::sqrt(p["z"])) / p["z"]; };
        e.constraints = [](const ParamPoint& p) { return p["nu"] > -1 && p["z"] > 0; };
        e.constraints_text = "nu > -1; z > 0";
        e.default_grid = {{{"nu", 0.5}, {"z", 1}}, {{"nu", 1}, {"z", 2}}, {{"nu", 3}, {"z", 0.5}}};
        e.provenance = "source: G&R 6.526.1; seed F(x) = x^-1 J_nu(b sqrt x)";
        e.tol_class = TolClass::Oscillatory;
        out.push_back(std::move(e));
    }
    {
        IntegralEntry e;
        e.id = "T18b";
        e.group = Group::G3;
        e.statement = "int_0^inf c J_mu(c z) J_(mu/2)(c^2/4) dc = 2 J_(mu/2)(z^2)";
        e.variable = "c";
        e.parameters = {"mu", "z"};
        e.integrand = [](const ParamPoint& p, double c) {
            return c * J(p["mu"], c * p["z"]) * J(p["mu"] / 2, c * c / 4);
        };
        e.pieces = single([](const ParamPoint& p, double c) { return c * J(p["mu"], c * p["z"]); },
                          [](const ParamPoint&) { return Interval::full_half_line(); },
                          [](const ParamPoint& p) { return chirp(p["mu"] / 2, 0.25); });
        e.rhs = [](const ParamPoint& p) { return 2 * J(p["mu"] / 2, p["z"] * p["z"]); };
        e.constraints = [](const ParamPoint& p) { return p["mu"] >= -0.5 && p["z"] > 0; };
        e.constraints_text = "mu >= -1/2; z > 0";
        e.default_grid = {{{"mu", 1}, {"z", 1}}, {{"mu", 2}, {"z", 0.7}}, {{"mu", 0.5}, {"z", 1.5}}};
        e.provenance = "source: G&R 6.526.1; seed F(x) = x^-1 J_nu(b sqrt x)";
        e.tol_class = TolClass::Oscillatory;
        out.push_back(std::move(e));
    }
    {
        IntegralEntry e;
        e.id = "T19a";
        e.group = Group::G3;
        e.statement = "int_0^inf a^2 J_2nu(a x) J_(nu+1/2)(a^2) da = (x/4) J_(nu-1/2)(x^2/4)";
        e.variable = "a";
        e.parameters = {"nu", "x"};
        e.integrand = [](const ParamPoint& p, double a) {
            return a * a * J(2 * p["nu"], a * p["x"]) * J(p["nu"] + 0.5, a * a);
        };
        e.pieces = single([](const ParamPoint& p, double a) { return a * a * J(2 * p["nu"], a * p["x"]); },
                          [](const ParamPoint&) { return Interval::full_half_line(); },
                          [](const ParamPoint& p) { return chirp(p["nu"] + 0.5, 1.0); });
        e.rhs = [](const ParamPoint& p) {
            const double x = p["x"];
            return x / 4 * J(p["nu"] - 0.5, x * x / 4);
        };
        e.constraints = [](const ParamPoint& p) { return p["nu"] >= -0.25 && p["x"] > 0; };
        e.constraints_text = "nu >= -1/4; x > 0";
        e.default_grid = {{{"nu", 0}, {"x", 1}}, {{"nu", 0.5}, {"x", 1.5}}, {{"nu", 1}, {"x", 2}}};
        e.provenance = "source: G&R 6.527.1; seed F(x) = (x/4) J_(nu-1/2)(x^2/4)";
        e.tol_class = TolClass::Oscillatory;
        out.push_back(std::move(e));
    }
    {
        IntegralEntry e;
        e.id = "T19b";
        e.group = Group::G3;
        e.statement = "int_0^inf a^2 J_2nu(a x) J_(nu-1/2)(a^2) da = (x/4) J_(nu+1/2)(x^2/4)";
        e.variable = "a";
        e.parameters = {"nu", "x"};
        e.integrand = [](const ParamPoint& p, double a) {
            return a * a * J(2 * p["nu"], a * p["x"]) * J(p["nu"] - 0.5, a * a);
        };
        e.pieces = single([](const ParamPoint& p, double a) { return a * a * J(2 * p["nu"], a * p["x"]); },
                          [](const ParamPoint&) { return Interval::full_half_line(); },
                          [](const ParamPoint& p) { return chirp(p["nu"] - 0.5, 1.0); });
        e.rhs = [](const ParamPoint& p) {
            const double x = p["x"];
            return x / 4 * J(p["nu"] + 0.5, x * x / 4);
        };
        e.constraints = [](const ParamPoint& p) { return p["nu"] >= -0.25 && p["x"] > 0; };
        e.constraints_text = "nu >= -1/4; x > 0";
        e.default_grid = {{{"nu", 0.5}, {"x", 1}}, {{"nu", 1}, {"x", 1.5}}, {{"nu", 1.5}, {"x", 2}}};
        e.provenance = "source: G&R 6.527.1; seed F(x) = (x/4) J_(nu+1/2)(x^2/4)";
        e.tol_class = TolClass::Oscillatory;
        out.push_back(std::move(e));
    }
    {
        IntegralEntry e;
        e.id = "T20";
        e.group = Group::G3;
        e.statement = "int_0^inf c J_nu(c z) H_(nu/2)(c^2/4) dc = -2 Y_(nu/2)(z^2)";
        e.variable = "c";
        e.parameters = {"nu", "z"};
        e.integrand = [](const ParamPoint& p, double c) {
            return c * J(p["nu"], c * p["z"]) * specfun::struve_h(p["nu"] / 2, c * c / 4).value;
        };
        // H = Y + (H - Y): a Y_(nu/2) chirp against the slowly varying
        // c J_nu(c z), plus the non-oscillatory H - Y against J_nu(c z).
        e.pieces = [](const ParamPoint& p) {
            const double nu = p["nu"], z = p["z"];
            std::vector<Piece> v;
            v.push_back(Piece{[nu, z](double c) { return c * J(nu, c * z); }, Interval::full_half_line(),
                              chirp(nu / 2, 0.25, specfun::BesselKind::Y)});
            v.push_back(Piece{[nu](double c) { return c * specfun::struve_k(nu / 2, c * c / 4).value; },
                              Interval::full_half_line(), kernel_j(nu, z)});
            return v;
        };
        e.rhs = [](const ParamPoint& p) { return -2 * Y(p["nu"] / 2, p["z"] * p["z"]); };
        e.constraints = [](const ParamPoint& p) { return p["nu"] >= -0.5 && p["nu"] < 1.5 && p["z"] > 0; };
        e.constraints_text = "-1/2 <= nu < 3/2 (divergent for nu >= 3/2); z > 0";
        e.default_grid = {{{"nu", 0}, {"z", 1}}, {{"nu", 0.5}, {"z", 0.8}}, {{"nu", 1}, {"z", 1.3}}};
        e.provenance = "source: G&R 6.526.4; seed F(x) = -2a Y_(nu/2)(a x^2)";
        e.tol_class = TolClass::Oscillatory;
        out.push_back(std::move(e));
    }
}

}  // namespace hdual::catalog::detail
