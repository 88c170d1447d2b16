#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include <nlohmann/json.hpp>

#include "hankel_dual/catalog.hpp"
#include "hankel_dual/errors.hpp"
#include "hankel_dual/quad.hpp"
#include "hankel_dual/specfun.hpp"

using namespace hdual;
using namespace hdual::catalog;
using std::numbers::pi;

TEST_CASE("entry and seed counts, unique ids") {
    const auto& entries = all_entries();
    CHECK(entries.size() == 41);
    std::set<std::string> ids;
    for (const auto& e : entries) ids.insert(e.id);
    CHECK(ids.size() == entries.size());
    const auto& seeds = all_failures();
    CHECK(seeds.size() == 16);
    std::set<std::string> sids;
    for (const auto& s : seeds) sids.insert(s.id);
    CHECK(sids.size() == 16);
}

TEST_CASE("default grids satisfy the constraints and give finite closed forms") {
    for (const auto& e : all_entries()) {
        INFO(e.id);
        CHECK(e.default_grid.size() >= 3);
        CHECK_FALSE(e.provenance.empty());
        CHECK_FALSE(e.statement.empty());
        for (const auto& p : e.default_grid) {
            INFO(p.to_string());
            CHECK(e.constraints(p));
            CHECK(std::isfinite(e.rhs(p)));
            for (const auto& name : e.parameters) CHECK(p.has(name));
            CHECK_FALSE(e.pieces(p).empty());
        }
    }
}

TEST_CASE("pieces reproduce the full integrand") {
    // Each piece's integrand times its kernel equals the entry integrand at
    // an interior sample.  T17b and T18a integrate after c -> 1/(4c) on
    // [0, 1/2]; T20 splits H into (H - Y) + Y.
    const std::set<std::string> transformed{"T17b", "T18a", "T20"};
    for (const auto& e : all_entries()) {
        if (transformed.count(e.id)) continue;
        const auto& p = e.default_grid.front();
        for (const auto& piece : e.pieces(p)) {
            const auto& iv = piece.interval;
            const double x = iv.finite() ? iv.lower + 0.37 * (iv.upper - iv.lower) : iv.lower + 1.37;
            double v = piece.integrand(x);
            if (piece.osc) v *= piece.osc->kernel(x);
            INFO(e.id << " at " << x);
            CHECK(v == doctest::Approx(e.integrand(p, x)).epsilon(1e-12));
        }
    }
    // T20: the two pieces sum to the integrand.
    const auto& t20 = entry_by_id("T20");
    const auto& p = t20.default_grid.front();
    const auto pieces = t20.pieces(p);
    REQUIRE(pieces.size() == 2);
    for (double x : {0.4, 1.37, 6.0}) {
        double sum = 0;
        for (const auto& piece : pieces) sum += piece.integrand(x) * (piece.osc ? piece.osc->kernel(x) : 1.0);
        CHECK(sum == doctest::Approx(t20.integrand(p, x)).epsilon(1e-11));
    }
}

TEST_CASE("elliptic pair identities") {
    for (double a : {0.1, 1.0, 3.0})
        for (double b : {0.2, 1.0, 5.0})
            for (double c : {0.3, 1.0, 2.0}) {
                const auto [l1, l2] = elliptic_pair(a, b, c);
                CHECK(l1 * l2 == doctest::Approx(b * c).epsilon(1e-13));
                CHECK(l1 * l1 + l2 * l2 == doctest::Approx(a * a + b * b + c * c).epsilon(1e-13));
                CHECK(0 <= l1);
                CHECK(l1 <= std::min(b, c) + 1e-15);
                CHECK(l_gap(a, b, c) == doctest::Approx(l2 * l2 - l1 * l1).epsilon(1e-12));
            }
    // Near-degenerate b = c, a -> 0: l_gap stays accurate.
    CHECK(l_gap(1e-9, 1, 1) == doctest::Approx(std::hypot(2.0, 1e-9) * 1e-9).epsilon(1e-12));
}

TEST_CASE("Heron area") {
    CHECK(heron_area(3, 4, 5) == 6.0);
    const double sides[3] = {2.0, 3.5, 4.1};
    const double ref = heron_area(sides[0], sides[1], sides[2]);
    int perm[3] = {0, 1, 2};
    do {
        CHECK(heron_area(sides[perm[0]], sides[perm[1]], sides[perm[2]]) == doctest::Approx(ref).epsilon(1e-15));
    } while (std::next_permutation(perm, perm + 3));
    CHECK(heron_area(3, 1, 2) == 0.0);
    CHECK(heron_area(5, 1, 1) == 0.0);
    // Needle triangle: Kahan ordering keeps full relative accuracy.
    CHECK(heron_area(1e8, 1e8, 1) == doctest::Approx(0.5e8 * std::sqrt(1 - 0.25e-16)).epsilon(1e-14));
}

TEST_CASE("lookup") {
    const auto& t03 = entry_by_id("T03");
    CHECK(t03.group == Group::G2);
    const ParamPoint p{{"nu", 0.5}, {"z", 1}};
    CHECK(t03.rhs(p) == doctest::Approx(std::sqrt(pi / 2) * std::exp(-1.0)).epsilon(1e-14));

    const auto& t29 = entry_by_id("T29");
    CHECK(t29.group == Group::G6);
    const auto pieces = t29.pieces(t29.default_grid.front());
    REQUIRE(pieces.size() == 1);
    CHECK(pieces[0].interval.hint == quad::Singularity::InverseSqrtAtUpper);

    CHECK_THROWS_AS(entry_by_id("ZZZ"), UnknownIdError);
    CHECK_THROWS_AS(failure_by_id("ZZZ"), UnknownIdError);
    CHECK(failure_by_id("S6514_2").expected_failing_endpoint == hankel::Endpoint::Zero);
    CHECK(failure_by_id("S6522_6").expected_failing_endpoint == hankel::Endpoint::Infinity);
}

TEST_CASE("parameter points") {
    const auto p = parse_point("nu=0.5, z=1");
    CHECK(p["nu"] == 0.5);
    CHECK(p.to_string() == "nu=0.5, z=1");
    CHECK(parse_point(p.to_string()) == p);
    CHECK_THROWS_AS(p["a"], ParameterError);
    CHECK_THROWS_AS(parse_point("nu"), ParameterError);
    CHECK_THROWS_AS(parse_point("nu=abc"), ParameterError);
    CHECK(to_string(Group::G4) == std::string("G4"));
    CHECK(parse_group("G5") == Group::G5);
    CHECK_FALSE(parse_group("G9"));
    CHECK(default_tolerance(TolClass::Decaying) == 1e-9);
    CHECK(default_tolerance(TolClass::Oscillatory) == 1e-7);
    CHECK(default_tolerance(TolClass::Singular) == 1e-6);
}

TEST_CASE("metadata document") {
    const auto doc = nlohmann::json::parse(metadata_json());
    CHECK(doc["schema_version"] == 1);
    CHECK(doc["entries"].size() == 41);
    CHECK(doc["failure_seeds"].size() == 16);
    CHECK(doc["entries"][0].contains("default_grid"));
    const auto sel = selection_from_metadata(metadata_json(0));
    CHECK(sel.entries.size() == 41);
    CHECK(sel.seeds.size() == 16);
    CHECK(sel.entries.front() == all_entries().front().id);
    CHECK_THROWS(selection_from_metadata("not json"));
}

TEST_CASE("log entry over the full half line") {
    // The finite-range form of the log identity (as catalogued) does not hold; the
    // full-range form with ln|1 - b^2/a^2| does.
    for (const auto& p : entry_by_id("T22").default_grid) {
        const double a = p["a"], z = p["z"];
        auto f = [a, z](double b) { return std::log(std::fabs(1 - b * b / (a * a))) * specfun::bessel_j(1, b * z).value; };
        const double tol = 1e-10;
        const auto head = quad::integrate_finite(f, quad::Interval::finite_from_zero(a, quad::Singularity::LogAtUpper), tol);
        const auto mid = quad::integrate_finite([&](double s) { return f(2 * a - s); },
                                                quad::Interval::finite_from_zero(a, quad::Singularity::LogAtUpper), tol);
        quad::OscillationSpec osc;
        osc.bessel_order = 1;
        osc.frequency = z;
        const auto tail = quad::integrate_oscillatory_tail(
            [a](double b) { return std::log(b * b / (a * a) - 1); }, osc, 2 * a, tol);
        const double full = head.value + mid.value + tail.value;
        CHECK(full == doctest::Approx(-pi / z * specfun::bessel_y(0, a * z).value).epsilon(1e-8));
        // The catalogued finite-range value differs.
        CHECK(std::fabs(head.value - entry_by_id("T22").rhs(p)) > 1e-3);
    }
}

TEST_CASE("theorem seeds") {
    const auto& t = theorem_seeds();
    CHECK(t.size() == 30);
    std::set<std::string> names;
    for (const auto& s : t) names.insert(s.theorem);
    CHECK(names.size() == 30);
    CHECK(names.count("Heron"));
    CHECK(names.count("T19a"));
}
