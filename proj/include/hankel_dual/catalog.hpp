#pragma once

#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hankel_dual/hankel.hpp"
#include "hankel_dual/quad.hpp"

namespace hdual::catalog {

// Named parameter assignment, kept in insertion order so that reports are
// stable.
class ParamPoint {
public:
    ParamPoint() = default;
    ParamPoint(std::initializer_list<std::pair<std::string, double>> init);

    double operator[](const std::string& name) const;  // throws ParameterError if absent
    bool has(const std::string& name) const;
    ParamPoint& set(const std::string& name, double value);
    const std::vector<std::pair<std::string, double>>& values() const { return values_; }
    bool empty() const { return values_.empty(); }
    std::string to_string() const;  // "nu=0.5, z=1"

    bool operator==(const ParamPoint& o) const { return values_ == o.values_; }

private:
    std::vector<std::pair<std::string, double>> values_;
};

// "nu=0.5, z=1" -> ParamPoint.  Throws ParameterError on malformed input.
ParamPoint parse_point(const std::string& text);

enum class Group { G2, G3, G4, G5, G6 };
enum class TolClass { Decaying, Oscillatory, Singular };

const char* to_string(Group g);
const char* to_string(TolClass t);
std::optional<Group> parse_group(const std::string& s);
double default_tolerance(TolClass t);

// One quadrature piece: integrand (smooth factor when osc is set), range and
// optional Bessel kernel.  An entry's LHS is the sum of its pieces.
struct Piece {
    quad::Fn integrand;
    quad::Interval interval;
    std::optional<quad::OscillationSpec> osc;
};

struct IntegralEntry {
    std::string id;
    Group group = Group::G2;
    std::string statement;  // the identity, plain text
    std::string variable;   // integration variable
    std::vector<std::string> parameters;
    // Full LHS integrand (kernel included) at a point.
    std::function<double(const ParamPoint&, double)> integrand;
    // Decomposition used for quadrature.
    std::function<std::vector<Piece>(const ParamPoint&)> pieces;
    std::function<double(const ParamPoint&)> rhs;
    std::function<bool(const ParamPoint&)> constraints;
    std::string constraints_text;
    std::vector<ParamPoint> default_grid;
    std::string provenance;
    TolClass tol_class = TolClass::Oscillatory;
};

struct FailureSeed {
    std::string id;
    hankel::SeedFunction seed;
    hankel::Endpoint expected_failing_endpoint = hankel::Endpoint::Zero;
    ParamPoint parameters;
    std::string formula;
    std::string provenance;
};

// Seed functions of the theorems, with the verdict the envelope analysis
// gives for them.
struct TheoremSeed {
    std::string theorem;
    hankel::SeedFunction seed;
    bool expected_admissible = true;
    std::optional<hankel::Endpoint> expected_failing_endpoint;
    std::string formula;
};

const std::vector<IntegralEntry>& all_entries();
const std::vector<FailureSeed>& all_failures();
const std::vector<TheoremSeed>& theorem_seeds();

const IntegralEntry& entry_by_id(const std::string& id);  // throws UnknownIdError
const FailureSeed& failure_by_id(const std::string& id);  // throws UnknownIdError

// e^{-x}: admissible control for the negative suite.
FailureSeed control_seed();

// Elliptic-coordinate pair: l1 = (R+ - R-)/2, l2 = (R+ + R-)/2 with
// R+- = sqrt((b +- c)^2 + a^2).
struct EllipticPair {
    double l1;
    double l2;
};
EllipticPair elliptic_pair(double a, double b, double c);
// l2^2 - l1^2 = R+ R-, evaluated without cancellation.
double l_gap(double a, double b, double c);

// Triangle area by Heron's formula (stable ordering).  Zero on degenerate
// triples and outside the triangle inequality.
double heron_area(double a, double b, double c);

// Catalog metadata (ids, groups, constraints, provenance, grids) as JSON text.
std::string metadata_json(int indent = 2);

// Entry and seed ids listed in a metadata document.
struct Selection {
    std::vector<std::string> entries;
    std::vector<std::string> seeds;
};
Selection selection_from_metadata(const std::string& json_text);

}  // namespace hdual::catalog
