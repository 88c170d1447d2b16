#include "hankel_dual/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <thread>

#include "hankel_dual/errors.hpp"

namespace hdual::verify {

using catalog::IntegralEntry;
using catalog::ParamPoint;

const char* to_string(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Inconclusive: return "inconclusive";
    }
    return "?";
}

void Counts::add(Status s) {
    switch (s) {
        case Status::Pass: ++pass; break;
        case Status::Fail: ++fail; break;
        case Status::Inconclusive: ++inconclusive; break;
    }
}

VerificationRow verify_entry(const IntegralEntry& entry, const ParamPoint& point, std::optional<double> tol_override,
                             double rhs_scale) {
    if (!entry.constraints(point))
        throw ConstraintError("entry " + entry.id + ": point (" + point.to_string() +
                              ") violates the constraints: " + entry.constraints_text);
    VerificationRow row;
    row.entry_id = entry.id;
    row.group = catalog::to_string(entry.group);
    row.point = point;
    row.tol = tol_override.value_or(catalog::default_tolerance(entry.tol_class));
    row.rhs = std::nan("");
    row.rel_err = std::nan("");

    std::string reason;
    bool converged = true;
    try {
        for (const auto& piece : entry.pieces(point)) {
            const auto r = quad::integrate_entry(piece.integrand, piece.interval, piece.osc, 0.1 * row.tol);
            row.lhs.value += r.value;
            row.lhs.abs_err += r.abs_err;
            row.lhs.evaluations += r.evaluations;
            converged = converged && r.converged;
        }
        if (!converged) reason = "quadrature did not reach the requested tolerance";
    } catch (const ConvergenceError& ex) {
        row.lhs.value = ex.partial();
        row.lhs.abs_err = ex.abs_err();
        row.lhs.evaluations = ex.evaluations();
        converged = false;
        reason = std::string("quadrature: ") + ex.what();
    } catch (const Error& ex) {
        converged = false;
        reason = std::string("integrand: ") + ex.what();
    }
    row.lhs.converged = converged;

    try {
        row.rhs = entry.rhs(point) * rhs_scale;
    } catch (const Error& ex) {
        if (reason.empty()) reason = std::string("closed form: ") + ex.what();
    }
    if (std::isfinite(row.rhs) && std::isfinite(row.lhs.value))
        row.rel_err = std::fabs(row.lhs.value - row.rhs) / (1.0 + std::fabs(row.rhs));

    if (!reason.empty()) {
        row.status = Status::Inconclusive;
        row.reason = reason;
    } else if (!std::isfinite(row.rel_err)) {
        row.status = Status::Inconclusive;
        row.reason = "non-finite value";
    } else {
        row.status = row.rel_err <= row.tol ? Status::Pass : Status::Fail;
    }
    return row;
}

VerificationRow verify_failure(const catalog::FailureSeed& seed) {
    VerificationRow row;
    row.entry_id = seed.id;
    row.group = "seeds";
    row.point = seed.parameters;
    row.lhs.converged = true;
    AdmissibilityInfo info;
    info.expected_endpoint = seed.expected_failing_endpoint;
    try {
        const auto v = hankel::check_condition(seed.seed);
        info.admissible = v.admissible;
        info.zero_exponent = v.zero_exponent;
        info.inf_exponent = v.inf_exponent;
        info.failing_endpoint = v.failing_endpoint;
        if (v.admissible) {
            row.status = Status::Fail;
            row.reason = "seed satisfies the admissibility condition";
        } else if (*v.failing_endpoint == seed.expected_failing_endpoint ||
                   *v.failing_endpoint == hankel::Endpoint::Both) {
            row.status = Status::Pass;
        } else {
            row.status = Status::Fail;
            row.reason = std::string("condition fails at ") + hankel::to_string(*v.failing_endpoint) + ", expected " +
                         hankel::to_string(seed.expected_failing_endpoint);
        }
    } catch (const InconclusiveError& ex) {
        row.status = Status::Inconclusive;
        row.reason = ex.what();
    } catch (const Error& ex) {
        row.status = Status::Inconclusive;
        row.reason = std::string("envelope fit: ") + ex.what();
    }
    row.admissibility = info;
    return row;
}

namespace {

// Reorders a point to the entry's parameter order, rejecting missing or
// unknown names.
ParamPoint normalise_point(const IntegralEntry& e, const ParamPoint& p) {
    ParamPoint out;
    for (const auto& name : e.parameters) {
        if (!p.has(name)) throw ParameterError("entry " + e.id + ": grid point lacks parameter '" + name + "'");
        out.set(name, p[name]);
    }
    for (const auto& [name, v] : p.values()) {
        (void)v;
        if (std::find(e.parameters.begin(), e.parameters.end(), name) == e.parameters.end())
            throw ParameterError("entry " + e.id + ": unknown parameter '" + name + "'");
    }
    return out;
}

struct Task {
    const IntegralEntry* entry = nullptr;
    const catalog::FailureSeed* seed = nullptr;
    ParamPoint point;
    std::size_t grid_index = 0;
    std::optional<double> tol;
    double rhs_scale = 1.0;
};

VerificationRow run_task(const Task& t) {
    if (t.seed) return verify_failure(*t.seed);
    try {
        auto row = verify_entry(*t.entry, t.point, t.tol, t.rhs_scale);
        row.grid_index = t.grid_index;
        return row;
    } catch (const std::exception& ex) {
        VerificationRow row;
        row.entry_id = t.entry->id;
        row.group = catalog::to_string(t.entry->group);
        row.grid_index = t.grid_index;
        row.point = t.point;
        row.status = Status::Inconclusive;
        row.reason = ex.what();
        return row;
    }
}

}  // namespace

VerificationReport run_all(const RunConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    for (const auto& id : config.entries) catalog::entry_by_id(id);
    for (const auto& [id, grid] : config.grids) {
        catalog::entry_by_id(id);
        if (grid.empty()) throw ParameterError("grid override for " + id + " is empty");
    }
    for (const auto& id : config.inject_rhs_error) catalog::entry_by_id(id);

    auto selected = [&](const IntegralEntry& e) {
        if (!config.include_entries) return false;
        if (!config.entries.empty() &&
            std::find(config.entries.begin(), config.entries.end(), e.id) == config.entries.end())
            return false;
        if (!config.groups.empty() &&
            std::find(config.groups.begin(), config.groups.end(), e.group) == config.groups.end())
            return false;
        return true;
    };

    std::vector<Task> tasks;
    for (const auto& e : catalog::all_entries()) {
        if (!selected(e)) continue;
        std::optional<double> tol = config.tol;
        if (!tol) {
            auto it = config.class_tol.find(e.tol_class);
            if (it != config.class_tol.end()) tol = it->second;
        }
        const auto git = config.grids.find(e.id);
        const auto& grid = git != config.grids.end() ? git->second : e.default_grid;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            Task t;
            t.entry = &e;
            t.point = normalise_point(e, grid[i]);
            if (!e.constraints(t.point))
                throw ConstraintError("entry " + e.id + ": point (" + t.point.to_string() +
                                      ") violates the constraints: " + e.constraints_text);
            t.grid_index = i;
            t.tol = tol;
            t.rhs_scale = config.inject_rhs_error.count(e.id) ? 1.01 : 1.0;
            tasks.push_back(std::move(t));
        }
    }
    const std::size_t n_entry_tasks = tasks.size();

    std::vector<std::string> seed_ids;
    if (config.seeds) {
        seed_ids = *config.seeds;
    } else if (!config.include_entries || (config.entries.empty() && config.groups.empty())) {
        for (const auto& s : catalog::all_failures()) seed_ids.push_back(s.id);
    }
    for (const auto& id : seed_ids) catalog::failure_by_id(id);
    for (const auto& s : catalog::all_failures()) {
        if (std::find(seed_ids.begin(), seed_ids.end(), s.id) == seed_ids.end()) continue;
        Task t;
        t.seed = &s;
        tasks.push_back(std::move(t));
    }

    std::vector<VerificationRow> results(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) results[i] = run_task(tasks[i]);
    };
    const unsigned jobs = std::max(1u, std::min<unsigned>(config.jobs, static_cast<unsigned>(tasks.size())));
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    VerificationReport report;
    report.config = config;
    report.rows.assign(std::make_move_iterator(results.begin()),
                       std::make_move_iterator(results.begin() + static_cast<std::ptrdiff_t>(n_entry_tasks)));
    report.failure_rows.assign(std::make_move_iterator(results.begin() + static_cast<std::ptrdiff_t>(n_entry_tasks)),
                               std::make_move_iterator(results.end()));
    report.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

Counts VerificationReport::entry_counts() const {
    Counts c;
    for (const auto& r : rows) c.add(r.status);
    return c;
}

Counts VerificationReport::seed_counts() const {
    Counts c;
    for (const auto& r : failure_rows) c.add(r.status);
    return c;
}

std::map<std::string, Counts> VerificationReport::by_group() const {
    std::map<std::string, Counts> m;
    for (const auto& r : rows) m[r.group].add(r.status);
    for (const auto& r : failure_rows) m[r.group].add(r.status);
    return m;
}

int exit_code(const VerificationReport& report) {
    Counts c = report.entry_counts();
    const Counts s = report.seed_counts();
    c.fail += s.fail;
    c.inconclusive += s.inconclusive;
    if (c.fail > 0) return 1;
    if (c.inconclusive > 0) return 2;
    return 0;
}

}  // namespace hdual::verify
