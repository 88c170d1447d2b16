#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>

#include <nlohmann/json.hpp>

#include "hankel_dual/errors.hpp"
#include "internal.hpp"

namespace hdual::catalog {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string format_number(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

}  // namespace

ParamPoint::ParamPoint(std::initializer_list<std::pair<std::string, double>> init) {
    for (const auto& [k, v] : init) set(k, v);
}

double ParamPoint::operator[](const std::string& name) const {
    for (const auto& [k, v] : values_)
        if (k == name) return v;
    throw ParameterError("parameter '" + name + "' is not set");
}

bool ParamPoint::has(const std::string& name) const {
    return std::any_of(values_.begin(), values_.end(), [&](const auto& kv) { return kv.first == name; });
}

ParamPoint& ParamPoint::set(const std::string& name, double value) {
    for (auto& [k, v] : values_) {
        if (k == name) {
            v = value;
            return *this;
        }
    }
    values_.emplace_back(name, value);
    return *this;
}

std::string ParamPoint::to_string() const {
    std::string out;
    for (const auto& [k, v] : values_) {
        if (!out.empty()) out += ", ";
        out += k + "=" + format_number(v);
    }
    return out;
}

ParamPoint parse_point(const std::string& text) {
    ParamPoint p;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        const std::string item = trim(text.substr(pos, comma - pos));
        pos = comma + 1;
        if (item.empty()) {
            if (comma == text.size()) break;
            throw ParameterError("empty item in parameter point '" + text + "'");
        }
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw ParameterError("expected name=value, got '" + item + "'");
        const std::string name = trim(item.substr(0, eq));
        const std::string value = trim(item.substr(eq + 1));
        if (name.empty() || value.empty()) throw ParameterError("expected name=value, got '" + item + "'");
        char* end = nullptr;
        const double v = std::strtod(value.c_str(), &end);
        if (end != value.c_str() + value.size() || !std::isfinite(v))
            throw ParameterError("bad number '" + value + "' for parameter '" + name + "'");
        if (p.has(name)) throw ParameterError("parameter '" + name + "' given twice");
        p.set(name, v);
    }
    return p;
}

const char* to_string(Group g) {
    switch (g) {
        case Group::G2: return "G2";
        case Group::G3: return "G3";
        case Group::G4: return "G4";
        case Group::G5: return "G5";
        case Group::G6: return "G6";
    }
    return "?";
}

const char* to_string(TolClass t) {
    switch (t) {
        case TolClass::Decaying: return "decaying";
        case TolClass::Oscillatory: return "oscillatory";
        case TolClass::Singular: return "singular";
    }
    return "?";
}

std::optional<Group> parse_group(const std::string& s) {
    for (Group g : {Group::G2, Group::G3, Group::G4, Group::G5, Group::G6})
        if (s == to_string(g)) return g;
    return std::nullopt;
}

double default_tolerance(TolClass t) {
    switch (t) {
        case TolClass::Decaying: return 1e-9;
        case TolClass::Oscillatory: return 1e-7;
        case TolClass::Singular: return 1e-6;
    }
    return 1e-7;
}

const std::vector<IntegralEntry>& all_entries() {
    static const std::vector<IntegralEntry> entries = [] {
        std::vector<IntegralEntry> v;
        detail::add_g2(v);
        detail::add_g3(v);
        detail::add_g4(v);
        detail::add_g5(v);
        detail::add_g6(v);
        return v;
    }();
    return entries;
}

const std::vector<FailureSeed>& all_failures() {
    static const std::vector<FailureSeed> seeds = detail::make_failures();
    return seeds;
}

const std::vector<TheoremSeed>& theorem_seeds() {
    static const std::vector<TheoremSeed> seeds = detail::make_theorem_seeds();
    return seeds;
}

const IntegralEntry& entry_by_id(const std::string& id) {
    for (const auto& e : all_entries())
        if (e.id == id) return e;
    throw UnknownIdError("unknown entry id '" + id + "'");
}

const FailureSeed& failure_by_id(const std::string& id) {
    for (const auto& s : all_failures())
        if (s.id == id) return s;
    throw UnknownIdError("unknown seed id '" + id + "'");
}

EllipticPair elliptic_pair(double a, double b, double c) {
    const double rp = std::hypot(b + c, a);
    const double rm = std::hypot(b - c, a);
    const double sum = rp + rm;
    // R+ - R- = 4bc / (R+ + R-)
    return {sum > 0 ? 2 * b * c / sum : 0.0, sum / 2};
}

double l_gap(double a, double b, double c) { return std::hypot(b + c, a) * std::hypot(b - c, a); }

double heron_area(double a, double b, double c) {
    double s[3] = {a, b, c};
    std::sort(s, s + 3, std::greater<>());
    const double x = s[0], y = s[1], z = s[2];
    if (!(z > 0)) return 0.0;
    const double t = z - (x - y);
    if (t <= 0) return 0.0;
    return 0.25 * std::sqrt((x + (y + z)) * t * (z + (x - y)) * (x + (y - z)));
}

std::string metadata_json(int indent) {
    using nlohmann::ordered_json;
    ordered_json doc;
    doc["schema_version"] = 1;
    ordered_json entries = ordered_json::array();
    for (const auto& e : all_entries()) {
        ordered_json grid = ordered_json::array();
        for (const auto& p : e.default_grid) {
            ordered_json pt = ordered_json::object();
            for (const auto& [k, v] : p.values()) pt[k] = v;
            grid.push_back(pt);
        }
        entries.push_back({{"id", e.id},
                           {"group", to_string(e.group)},
                           {"statement", e.statement},
                           {"variable", e.variable},
                           {"parameters", e.parameters},
                           {"constraints", e.constraints_text},
                           {"provenance", e.provenance},
                           {"tol_class", to_string(e.tol_class)},
                           {"tolerance", default_tolerance(e.tol_class)},
                           {"default_grid", grid}});
    }
    doc["entries"] = entries;
    ordered_json seeds = ordered_json::array();
    for (const auto& s : all_failures()) {
        ordered_json params = ordered_json::object();
        for (const auto& [k, v] : s.parameters.values()) params[k] = v;
        seeds.push_back({{"id", s.id},
                         {"formula", s.formula},
                         {"provenance", s.provenance},
                         {"expected_failing_endpoint", hankel::to_string(s.expected_failing_endpoint)},
                         {"parameters", params}});
    }
    doc["failure_seeds"] = seeds;
    return doc.dump(indent);
}

Selection selection_from_metadata(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& ex) {
        throw ParameterError(std::string("metadata is not valid JSON: ") + ex.what());
    }
    if (!doc.is_object()) throw ParameterError("metadata must be a JSON object");
    Selection sel;
    auto collect = [&](const char* key, std::vector<std::string>& out) {
        if (!doc.contains(key)) return;
        const auto& arr = doc.at(key);
        if (!arr.is_array()) throw ParameterError(std::string("metadata field '") + key + "' must be an array");
        for (const auto& item : arr) {
            if (!item.is_object() || !item.contains("id") || !item.at("id").is_string())
                throw ParameterError(std::string("metadata field '") + key + "' has an item without a string id");
            out.push_back(item.at("id").get<std::string>());
        }
    };
    collect("entries", sel.entries);
    collect("failure_seeds", sel.seeds);
    return sel;
}

}  // namespace hdual::catalog
