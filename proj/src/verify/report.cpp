#include <cmath>
#include <cstdio>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hankel_dual/verify.hpp"

namespace hdual::verify {

namespace {

using nlohmann::ordered_json;

ordered_json number(double v) { return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr); }

ordered_json point_json(const catalog::ParamPoint& p) {
    ordered_json o = ordered_json::object();
    for (const auto& [k, v] : p.values()) o[k] = v;
    return o;
}

ordered_json counts_json(const Counts& c) {
    return {{"pass", c.pass}, {"fail", c.fail}, {"inconclusive", c.inconclusive}, {"total", c.total()}};
}

ordered_json row_json(const VerificationRow& r) {
    ordered_json o;
    o["id"] = r.entry_id;
    o["group"] = r.group;
    if (!r.admissibility) {
        o["grid_index"] = r.grid_index;
        o["point"] = point_json(r.point);
        o["lhs"] = number(r.lhs.value);
        o["abs_err"] = number(r.lhs.abs_err);
        o["evaluations"] = r.lhs.evaluations;
        o["converged"] = r.lhs.converged;
        o["rhs"] = number(r.rhs);
        o["rel_err"] = number(r.rel_err);
        o["tol"] = r.tol;
    } else {
        const auto& a = *r.admissibility;
        o["parameters"] = point_json(r.point);
        o["admissible"] = a.admissible;
        o["zero_exponent"] = number(a.zero_exponent);
        o["inf_exponent"] = number(a.inf_exponent);
        o["failing_endpoint"] = a.failing_endpoint ? ordered_json(hankel::to_string(*a.failing_endpoint)) : ordered_json(nullptr);
        o["expected_endpoint"] = hankel::to_string(a.expected_endpoint);
    }
    o["status"] = to_string(r.status);
    o["reason"] = r.reason;
    return o;
}

ordered_json config_json(const RunConfig& c) {
    ordered_json o;
    o["entries"] = c.entries;
    ordered_json groups = ordered_json::array();
    for (auto g : c.groups) groups.push_back(catalog::to_string(g));
    o["groups"] = groups;
    o["seeds"] = c.seeds ? ordered_json(*c.seeds) : ordered_json("auto");
    o["tol"] = c.tol ? ordered_json(*c.tol) : ordered_json(nullptr);
    ordered_json ct = ordered_json::object();
    for (const auto& [k, v] : c.class_tol) ct[catalog::to_string(k)] = v;
    o["class_tol"] = ct;
    ordered_json grids = ordered_json::object();
    for (const auto& [id, g] : c.grids) {
        ordered_json pts = ordered_json::array();
        for (const auto& p : g) pts.push_back(point_json(p));
        grids[id] = pts;
    }
    o["grids"] = grids;
    o["inject_rhs_error"] = std::vector<std::string>(c.inject_rhs_error.begin(), c.inject_rhs_error.end());
    return o;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string csv_number(double v) {
    if (!std::isfinite(v)) return "";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::string to_json(const VerificationReport& report, bool include_wall_time) {
    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["config"] = config_json(report.config);
    ordered_json summary;
    summary["entries"] = counts_json(report.entry_counts());
    summary["seeds"] = counts_json(report.seed_counts());
    ordered_json groups = ordered_json::object();
    for (const auto& [g, c] : report.by_group()) groups[g] = counts_json(c);
    summary["by_group"] = groups;
    summary["exit_code"] = exit_code(report);
    doc["summary"] = summary;
    ordered_json rows = ordered_json::array();
    for (const auto& r : report.rows) rows.push_back(row_json(r));
    doc["rows"] = rows;
    ordered_json seeds = ordered_json::array();
    for (const auto& r : report.failure_rows) seeds.push_back(row_json(r));
    doc["failure_rows"] = seeds;
    if (include_wall_time) doc["wall_time_s"] = report.wall_time_s;
    return doc.dump(2) + "\n";
}

std::string to_csv(const VerificationReport& report) {
    std::ostringstream os;
    os << "schema_version,kind,id,group,grid_index,point,lhs,abs_err,evaluations,converged,rhs,rel_err,tol,"
          "admissible,failing_endpoint,status,reason\n";
    for (const auto& r : report.rows) {
        os << kSchemaVersion << ",entry," << r.entry_id << ',' << r.group << ',' << r.grid_index << ','
           << csv_field(r.point.to_string()) << ',' << csv_number(r.lhs.value) << ',' << csv_number(r.lhs.abs_err)
           << ',' << r.lhs.evaluations << ',' << (r.lhs.converged ? "true" : "false") << ',' << csv_number(r.rhs)
           << ',' << csv_number(r.rel_err) << ',' << csv_number(r.tol) << ",,," << to_string(r.status) << ','
           << csv_field(r.reason) << '\n';
    }
    for (const auto& r : report.failure_rows) {
        const auto& a = *r.admissibility;
        os << kSchemaVersion << ",seed," << r.entry_id << ',' << r.group << ",," << csv_field(r.point.to_string())
           << ",,,,,,,," << (a.admissible ? "true" : "false") << ','
           << (a.failing_endpoint ? hankel::to_string(*a.failing_endpoint) : "") << ',' << to_string(r.status) << ','
           << csv_field(r.reason) << '\n';
    }
    return os.str();
}

std::string to_text(const VerificationReport& report) {
    std::ostringstream os;
    char line[512];
    for (const auto& r : report.rows) {
        std::snprintf(line, sizeof line, "%-6s %-4s %-40s rel_err=%-9.2e tol=%-7.0e %s", r.entry_id.c_str(),
                      r.group.c_str(), r.point.to_string().c_str(), r.rel_err, r.tol, to_string(r.status));
        os << line;
        if (!r.reason.empty()) os << "  (" << r.reason << ')';
        os << '\n';
    }
    for (const auto& r : report.failure_rows) {
        const auto& a = *r.admissibility;
        std::snprintf(line, sizeof line, "%-9s zero=%-8.3f inf=%-8.3f failing=%-8s expected=%-8s %s",
                      r.entry_id.c_str(), a.zero_exponent, a.inf_exponent,
                      a.failing_endpoint ? hankel::to_string(*a.failing_endpoint) : "none",
                      hankel::to_string(a.expected_endpoint), to_string(r.status));
        os << line;
        if (!r.reason.empty()) os << "  (" << r.reason << ')';
        os << '\n';
    }
    const Counts e = report.entry_counts(), s = report.seed_counts();
    std::snprintf(line, sizeof line,
                  "entries: %zu pass, %zu fail, %zu inconclusive | seeds: %zu pass, %zu fail, %zu inconclusive | "
                  "%.2fs\n",
                  e.pass, e.fail, e.inconclusive, s.pass, s.fail, s.inconclusive, report.wall_time_s);
    os << line;
    return os.str();
}

}  // namespace hdual::verify
