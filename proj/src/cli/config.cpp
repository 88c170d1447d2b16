#include "hankel_dual/config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "hankel_dual/errors.hpp"

namespace hdual::cli {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(s);
    while (std::getline(is, item, sep)) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

double parse_positive(const std::string& text, const std::string& where) {
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (text.empty() || end != text.c_str() + text.size() || !std::isfinite(v) || v <= 0)
        throw UsageError(where + ": expected a positive number, got '" + text + "'");
    return v;
}

}  // namespace

unsigned parse_jobs(const std::string& text, const std::string& source) {
    const std::string t = trim(text);
    char* end = nullptr;
    const long v = std::strtol(t.c_str(), &end, 10);
    if (t.empty() || end != t.c_str() + t.size() || v < 1 || v > 1024)
        throw UsageError(source + ": jobs must be an integer in [1, 1024], got '" + text + "'");
    return static_cast<unsigned>(v);
}

FileConfig parse_config(const std::string& text) {
    FileConfig cfg;
    std::istringstream is(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(is, raw)) {
        ++lineno;
        const auto hash = raw.find('#');
        const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) continue;
        const std::string where = "config line " + std::to_string(lineno);
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw UsageError(where + ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw UsageError(where + ": empty key");

        if (key == "entries") {
            cfg.run.entries = split(value, ',');
        } else if (key == "groups") {
            cfg.run.groups.clear();
            for (const auto& g : split(value, ',')) {
                auto parsed = catalog::parse_group(g);
                if (!parsed) throw UsageError(where + ": unknown group '" + g + "'");
                cfg.run.groups.push_back(*parsed);
            }
        } else if (key == "seeds") {
            if (value == "auto")
                cfg.run.seeds.reset();
            else if (value == "none")
                cfg.run.seeds = std::vector<std::string>{};
            else if (value == "all") {
                std::vector<std::string> ids;
                for (const auto& s : catalog::all_failures()) ids.push_back(s.id);
                cfg.run.seeds = ids;
            } else
                cfg.run.seeds = split(value, ',');
        } else if (key == "jobs") {
            cfg.jobs = parse_jobs(value, where);
        } else if (key == "format") {
            if (value != "json" && value != "csv" && value != "text")
                throw UsageError(where + ": format must be json, csv or text");
            cfg.format = value;
        } else if (key == "out") {
            if (value.empty()) throw UsageError(where + ": empty output path");
            cfg.out = value;
        } else if (key == "tol") {
            cfg.run.tol = parse_positive(value, where);
        } else if (key == "tol.decaying") {
            cfg.run.class_tol[catalog::TolClass::Decaying] = parse_positive(value, where);
        } else if (key == "tol.oscillatory") {
            cfg.run.class_tol[catalog::TolClass::Oscillatory] = parse_positive(value, where);
        } else if (key == "tol.singular") {
            cfg.run.class_tol[catalog::TolClass::Singular] = parse_positive(value, where);
        } else if (key == "inject_rhs_error") {
            for (const auto& id : split(value, ',')) cfg.run.inject_rhs_error.insert(id);
        } else if (key.rfind("grid.", 0) == 0) {
            const std::string id = key.substr(5);
            if (id.empty()) throw UsageError(where + ": grid key needs an entry id");
            std::vector<catalog::ParamPoint> grid;
            for (const auto& pt : split(value, ';')) {
                try {
                    grid.push_back(catalog::parse_point(pt));
                } catch (const ParameterError& ex) {
                    throw UsageError(where + ": " + ex.what());
                }
            }
            if (grid.empty()) throw UsageError(where + ": grid for " + id + " is empty");
            cfg.run.grids[id] = grid;
        } else {
            throw UsageError(where + ": unknown key '" + key + "'");
        }
    }
    return cfg;
}

FileConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

}  // namespace hdual::cli
