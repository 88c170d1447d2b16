#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hankel_dual/catalog.hpp"
#include "hankel_dual/hankel.hpp"
#include "hankel_dual/quad.hpp"

namespace hdual::verify {

inline constexpr int kSchemaVersion = 1;

enum class Status { Pass, Fail, Inconclusive };
const char* to_string(Status s);

// Admissibility outcome attached to rows produced by verify_failure.
struct AdmissibilityInfo {
    bool admissible = false;
    double zero_exponent = 0.0;
    double inf_exponent = 0.0;
    std::optional<hankel::Endpoint> failing_endpoint;
    hankel::Endpoint expected_endpoint = hankel::Endpoint::Zero;
};

struct VerificationRow {
    std::string entry_id;
    std::string group;  // "G2".."G6", or "seeds"
    std::size_t grid_index = 0;
    catalog::ParamPoint point;
    quad::QuadResult lhs;
    double rhs = 0.0;
    double rel_err = 0.0;  // |lhs - rhs| / (1 + |rhs|)
    double tol = 0.0;
    Status status = Status::Inconclusive;
    std::string reason;  // set for Inconclusive and for seed rows that Fail
    std::optional<AdmissibilityInfo> admissibility;
};

// Evaluates one entry at one point.  Throws ConstraintError when the point
// violates the entry's hypotheses; quadrature or evaluation failures give
// an Inconclusive row.  rhs_scale != 1 corrupts the closed form (harness
// sensitivity fixture).
VerificationRow verify_entry(const catalog::IntegralEntry& entry, const catalog::ParamPoint& point,
                             std::optional<double> tol_override = std::nullopt, double rhs_scale = 1.0);

// Pass iff the seed is inadmissible at its expected endpoint.
VerificationRow verify_failure(const catalog::FailureSeed& seed);

struct RunConfig {
    bool include_entries = true;  // false: negative suite only
    std::vector<std::string> entries;  // empty: every entry (subject to groups)
    std::vector<catalog::Group> groups;
    // nullopt: all seeds when no entry or group filter is given (or entries
    // are excluded), none otherwise.
    std::optional<std::vector<std::string>> seeds;
    std::optional<double> tol;  // overrides every class tolerance
    std::map<catalog::TolClass, double> class_tol;
    std::map<std::string, std::vector<catalog::ParamPoint>> grids;  // per-entry grid overrides
    std::set<std::string> inject_rhs_error;                         // entry ids whose RHS is scaled by 1.01
    unsigned jobs = 1;
};

struct Counts {
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t inconclusive = 0;
    std::size_t total() const { return pass + fail + inconclusive; }
    void add(Status s);
};

struct VerificationReport {
    RunConfig config;
    std::vector<VerificationRow> rows;          // entry rows, canonical order
    std::vector<VerificationRow> failure_rows;  // seed rows, canonical order
    double wall_time_s = 0.0;

    Counts entry_counts() const;
    Counts seed_counts() const;
    std::map<std::string, Counts> by_group() const;
};

// Canonical order: entries in catalog order then grid index, seeds in
// catalog order.  Output is identical for any jobs value.  Throws
// UnknownIdError, ConstraintError or ParameterError for a bad config.
VerificationReport run_all(const RunConfig& config);

// 0 all pass, 1 any Fail, 2 Inconclusive without Fail.
int exit_code(const VerificationReport& report);

std::string to_json(const VerificationReport& report, bool include_wall_time = true);
std::string to_csv(const VerificationReport& report);
std::string to_text(const VerificationReport& report);

}  // namespace hdual::verify
