// hankel_dual: run the dual-integral catalog, the negative suite, or list
// the catalog.  Exit codes: 0 all pass, 1 any fail, 2 inconclusive only,
// 64 usage error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hankel_dual/catalog.hpp"
#include "hankel_dual/config.hpp"
#include "hankel_dual/errors.hpp"
#include "hankel_dual/verify.hpp"

namespace {

constexpr int kUsage = 64;

using namespace hdual;

std::string render(const verify::VerificationReport& report, const std::string& format) {
    if (format == "csv") return verify::to_csv(report);
    if (format == "text") return verify::to_text(report);
    return verify::to_json(report);
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty() || out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (!f) throw UsageError("cannot write '" + out + "'");
    f << text;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

unsigned resolve_jobs(const std::string& flag, std::optional<unsigned> from_config) {
    if (!flag.empty()) return cli::parse_jobs(flag, "--jobs");
    if (from_config) return *from_config;
    if (const char* env = std::getenv("HANKEL_DUAL_JOBS"); env && *env) return cli::parse_jobs(env, "HANKEL_DUAL_JOBS");
    return 1;
}

void print_list(bool json) {
    if (json) {
        std::cout << catalog::metadata_json() << "\n";
        return;
    }
    for (const auto& e : catalog::all_entries())
        std::printf("%-6s %s  %-11s  %s  [%s]\n", e.id.c_str(), catalog::to_string(e.group),
                    catalog::to_string(e.tol_class), e.constraints_text.c_str(), e.provenance.c_str());
    for (const auto& s : catalog::all_failures())
        std::printf("%-9s seed  fails at %-8s  %s  [%s]\n", s.id.c_str(),
                    hankel::to_string(s.expected_failing_endpoint), s.formula.c_str(), s.provenance.c_str());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical verification of dual Bessel-function integrals"};
    app.require_subcommand(1);

    std::vector<std::string> entries, groups, seeds, inject;
    std::string config_path, select_from, jobs_flag, format, out;
    double tol = 0;
    bool no_seeds = false;

    auto* cmd_verify = app.add_subcommand("verify", "verify catalog entries (and the negative suite)");
    cmd_verify->add_option("--entry", entries, "entry id (repeatable)");
    cmd_verify->add_option("--group", groups, "group G2..G6 (repeatable)");
    cmd_verify->add_option("--seed", seeds, "failure seed id (repeatable)");
    cmd_verify->add_flag("--no-seeds", no_seeds, "skip the negative suite");
    cmd_verify->add_option("--config", config_path, "run configuration file");
    cmd_verify->add_option("--select-from", select_from, "select ids from a 'list --json' document");
    cmd_verify->add_option("--tol", tol, "tolerance for every entry")->check(CLI::PositiveNumber);
    cmd_verify->add_option("--jobs", jobs_flag, "worker threads (default: HANKEL_DUAL_JOBS or 1)");
    cmd_verify->add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    cmd_verify->add_option("--out", out, "output path (default: stdout)");
    cmd_verify->add_option("--inject-rhs-error", inject, "scale this entry's closed form by 1.01 (test fixture)");

    std::vector<std::string> check_seeds;
    std::string check_format, check_out;
    auto* cmd_check = app.add_subcommand("check", "run the admissibility check on the failure seeds");
    cmd_check->add_option("--seed", check_seeds, "seed id (repeatable)");
    cmd_check->add_option("--format", check_format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    cmd_check->add_option("--out", check_out, "output path (default: stdout)");

    bool list_json = false;
    auto* cmd_list = app.add_subcommand("list", "list catalog entries and failure seeds");
    cmd_list->add_flag("--json", list_json, "print the catalog metadata document");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*cmd_list) {
            print_list(list_json);
            return 0;
        }
        if (*cmd_check) {
            verify::RunConfig rc;
            rc.include_entries = false;
            if (!check_seeds.empty()) rc.seeds = check_seeds;
            const auto report = verify::run_all(rc);
            emit(render(report, check_format.empty() ? "text" : check_format), check_out);
            return verify::exit_code(report);
        }

        cli::FileConfig fc;
        if (!config_path.empty()) fc = cli::load_config(config_path);
        verify::RunConfig rc = fc.run;
        if (!select_from.empty()) {
            const auto sel = catalog::selection_from_metadata(read_file(select_from));
            rc.entries = sel.entries;
            rc.seeds = sel.seeds;
            if (rc.entries.empty()) throw UsageError("--select-from: document lists no entries");
        }
        if (!entries.empty()) rc.entries = entries;
        if (!groups.empty()) {
            rc.groups.clear();
            for (const auto& g : groups) {
                auto parsed = catalog::parse_group(g);
                if (!parsed) throw UsageError("unknown group '" + g + "'");
                rc.groups.push_back(*parsed);
            }
        }
        if (!seeds.empty()) rc.seeds = seeds;
        if (no_seeds) rc.seeds = std::vector<std::string>{};
        if (tol > 0) rc.tol = tol;
        for (const auto& id : inject) rc.inject_rhs_error.insert(id);
        rc.jobs = resolve_jobs(jobs_flag, fc.jobs);
        const std::string fmt = !format.empty() ? format : fc.format.value_or("json");
        const std::string dest = !out.empty() ? out : fc.out.value_or("");

        const auto report = verify::run_all(rc);
        emit(render(report, fmt), dest);
        return verify::exit_code(report);
    } catch (const UnknownIdError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ConstraintError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
