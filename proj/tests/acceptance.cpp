// Acceptance suite: one PASS/FAIL line per criterion.  Exit status is 0
// only when every criterion passes.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include <boost/math/special_functions/bessel.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "hankel_dual/catalog.hpp"
#include "hankel_dual/errors.hpp"
#include "hankel_dual/hankel.hpp"
#include "hankel_dual/specfun.hpp"
#include "hankel_dual/verify.hpp"
#include "quad_oracles.hpp"
#include "specfun_contract.hpp"

using namespace hdual;

namespace {

int failures = 0;

void report(int n, bool ok, const std::string& detail) {
    std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", n, detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

// Full catalog at the class tolerances, parallelism 4, within 5 minutes.
void catalog_reproduction() {
    verify::RunConfig rc;
    rc.seeds = std::vector<std::string>{};
    rc.jobs = 4;
    const auto t0 = std::chrono::steady_clock::now();
    const auto rep = verify::run_all(rc);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool grids_ok = true;
    for (const auto& e : catalog::all_entries()) grids_ok = grids_ok && e.default_grid.size() >= 3;
    std::string bad;
    for (const auto& r : rep.rows) {
        if (r.status == verify::Status::Pass) continue;
        bad += fmt(" %s[%s] %s rel_err=%.2e;", r.entry_id.c_str(), r.point.to_string().c_str(),
                   verify::to_string(r.status), r.rel_err);
    }
    const auto c = rep.entry_counts();
    const bool ok = grids_ok && c.fail == 0 && c.inconclusive == 0 && secs <= 300.0;
    report(1, ok,
           fmt("%zu entries, %zu rows: %zu pass, %zu fail, %zu inconclusive in %.1fs (limit 300s, jobs 4)%s",
               catalog::all_entries().size(), c.total(), c.pass, c.fail, c.inconclusive, secs,
               bad.empty() ? "" : ("; not passing:" + bad).c_str()));
}

// Every failure seed inadmissible at its endpoint, e^{-x} admissible,
// no inconclusive verdicts.
void negative_suite() {
    int inadmissible = 0, inconclusive = 0;
    std::string bad;
    for (const auto& s : catalog::all_failures()) {
        try {
            const auto v = hankel::check_condition(s.seed);
            if (!v.admissible) ++inadmissible;
            else bad += fmt(" %s admissible (zero %.3g, inf %.3g);", s.id.c_str(), v.zero_exponent, v.inf_exponent);
        } catch (const InconclusiveError& e) {
            ++inconclusive;
            bad += fmt(" %s inconclusive (%.4f);", s.id.c_str(), e.exponent());
        }
    }
    bool control_ok = false;
    try {
        control_ok = hankel::check_condition(catalog::control_seed().seed).admissible;
    } catch (const InconclusiveError&) {
        ++inconclusive;
    }
    const std::size_t n = catalog::all_failures().size();
    const bool ok = n == 16 && inadmissible == 16 && control_ok && inconclusive == 0;
    report(2, ok,
           fmt("%d/%zu seeds inadmissible, control %s, %d inconclusive%s", inadmissible, n,
               control_ok ? "admissible" : "NOT admissible", inconclusive, bad.empty() ? "" : (";" + bad).c_str()));
}

// Round trips at r in {0.5, 1, 2}: residual <= 1e-6, midpoint at the jump
// within 1e-5.
void roundtrip() {
    using hankel::SeedFunction;
    auto make = [](std::string name, std::function<double(double)> f) {
        SeedFunction s;
        s.eval = std::move(f);
        s.exponential_decay = true;
        s.name = std::move(name);
        return s;
    };
    std::vector<std::pair<SeedFunction, double>> seeds{
        {make("gaussian", [](double x) { return std::exp(-x * x / 2); }), 0.0},
        {make("K_0", [](double x) { return specfun::bessel_k(0, x).value; }), 0.0},
        {make("e^-x", [](double x) { return std::exp(-x); }), 0.0},
        {make("x e^-x", [](double x) { return x * std::exp(-x); }), 1.0},
    };
    SeedFunction trunc;
    trunc.eval = [](double x) { return x < 1 ? x : (x == 1 ? 0.5 : 0.0); };
    trunc.support_end = 1.0;
    trunc.decay_at_inf = -INFINITY;
    trunc.name = "truncated x";
    seeds.emplace_back(trunc, 1.0);

    double worst = 0.0, midpoint_err = INFINITY;
    std::string bad;
    for (const auto& [F, nu] : seeds) {
        for (const auto& p : hankel::dual_roundtrip(F, nu, {0.5, 1, 2}, 1e-6)) {
            const bool jump = F.support_end && p.r == *F.support_end;
            if (jump) {
                midpoint_err = std::fabs(p.recovered - 0.5);
                continue;
            }
            if (!p.error.empty()) bad += fmt(" %s r=%g: %s;", F.name.c_str(), p.r, p.error.c_str());
            worst = std::max(worst, p.residual);
        }
    }
    const bool ok = bad.empty() && worst <= 1e-6 && midpoint_err <= 1e-5;
    report(3, ok,
           fmt("5 seeds at r in {0.5, 1, 2}: max residual %.2e (limit 1e-6); midpoint at the jump off by %.2e (limit "
               "1e-5)%s",
               worst, midpoint_err, bad.c_str()));
}

void contract_suite() {
    int failed = 0;
    std::string first;
    const int n = contract::run_all([&](const contract::Check& c) {
        if (c.ok()) return;
        if (failed++ == 0) first = fmt("; first failure %s err %.2e > %.2e", c.name.c_str(), c.err, c.bound);
    });
    report(4, failed == 0 && n >= 200, fmt("%d assertions (minimum 200), %d failed%s", n, failed, first.c_str()));
}

void honesty() {
    const auto cases = oracle::pinned_cases();
    int bad = 0;
    double worst = 0.0;
    std::string first;
    for (const auto& c : cases) {
        const double ratio = c.abs_err > 0 ? c.error() / c.abs_err : (c.error() > 0 ? INFINITY : 0.0);
        worst = std::max(worst, ratio);
        if (!c.honest() && bad++ == 0) first = fmt("; first violation %s", c.name.c_str());
    }
    report(5, bad == 0,
           fmt("%zu pinned oracle comparisons, %d with |value - oracle| > 5 abs_err; worst ratio %.2f%s",
               cases.size(), bad, worst, first.c_str()));
}

void sensitivity() {
    verify::RunConfig c;
    c.entries = {"T03", "T09a", "T26"};
    c.seeds = std::vector<std::string>{};
    c.inject_rhs_error = {"T03"};
    const auto corrupted = verify::run_all(c);
    std::size_t fail_rows = 0, other_fail = 0;
    for (const auto& r : corrupted.rows) {
        if (r.status != verify::Status::Fail) continue;
        (r.entry_id == "T03" ? fail_rows : other_fail)++;
    }
    verify::RunConfig serial;
    verify::RunConfig parallel;
    parallel.jobs = 4;
    const bool same = verify::to_json(verify::run_all(serial), false) == verify::to_json(verify::run_all(parallel), false);
    report(6, fail_rows == 3 && other_fail == 0 && same,
           fmt("corrupted T03 gave %zu/3 Fail rows, %zu Fail rows elsewhere; serial and 4-job reports %s", fail_rows,
               other_fail, same ? "identical" : "DIFFER"));
}

void spot_values() {
    using hp = boost::multiprecision::cpp_bin_float_50;
    const double j1 = static_cast<double>(boost::math::cyl_bessel_j(hp(1), hp(1)));
    const auto t02a =
        verify::verify_entry(catalog::entry_by_id("T02a"), catalog::ParamPoint{{"nu", 1}, {"alpha", 1}, {"z", 1}});
    const double e02 = std::fabs(t02a.lhs.value - j1);
    const auto t03 = verify::verify_entry(catalog::entry_by_id("T03"), catalog::ParamPoint{{"nu", 0.5}, {"z", 1}});
    const double e03 = std::fabs(t03.lhs.value - std::sqrt(std::numbers::pi / 2) * std::exp(-1.0));
    const double heron = catalog::heron_area(3, 4, 5);
    report(7, e02 <= 1e-9 && e03 <= 1e-7 && heron == 6.0,
           fmt("T02a(nu=1, alpha=1, z=1) - J_1(1) = %.2e (limit 1e-9); T03(nu=1/2, z=1) - sqrt(pi/2)e^-1 = %.2e "
               "(limit 1e-7); Heron(3,4,5) = %.17g",
               e02, e03, heron));
}

}  // namespace

int main() {
    catalog_reproduction();
    negative_suite();
    roundtrip();
    contract_suite();
    honesty();
    sensitivity();
    spot_values();
    std::printf("%d of 7 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
