#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

namespace {

const std::string kCli = HDUAL_CLI_PATH;
const std::string kTmp = HDUAL_TMP_DIR;

struct Run {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Run run(const std::string& args, const std::string& env = "") {
    const std::string out = kTmp + "/cli_stdout.txt", err = kTmp + "/cli_stderr.txt";
    const std::string cmd = env + (env.empty() ? "" : " ") + "'" + kCli + "' " + args + " >'" + out + "' 2>'" + err + "'";
    const int status = std::system(cmd.c_str());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
}

int count_lines(const std::string& s) {
    int n = 0;
    for (char c : s) n += c == '\n';
    return n;
}

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST_CASE("verify a group as text") {
    const auto r = run("verify --group G6 --format text");
    CHECK(r.code == 0);
    CHECK(r.out.find("entries: 9 pass, 0 fail, 0 inconclusive") != std::string::npos);
}

TEST_CASE("usage errors exit 64") {
    auto r = run("verify --entry NOPE");
    CHECK(r.code == 64);
    CHECK(r.err.find("unknown entry id") != std::string::npos);
    CHECK(run("check --seed BOGUS").code == 64);
    CHECK(run("verify --group G9").code == 64);
    CHECK(run("verify --jobs 0").code == 64);
    CHECK(run("verify --format xml").code == 64);
    CHECK(run("frobnicate").code == 64);
    CHECK(run("").code == 64);
    CHECK(run("verify --config '" + kTmp + "/missing.conf'").code == 64);
}

TEST_CASE("list") {
    const auto r = run("list");
    CHECK(r.code == 0);
    CHECK(count_lines(r.out) == 41 + 16);
    const auto j = run("list --json");
    CHECK(j.code == 0);
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["entries"].size() == 41);
}

TEST_CASE("select-from round trip") {
    auto doc = nlohmann::json::parse(run("list --json").out);
    nlohmann::json subset = doc;
    subset["entries"] = nlohmann::json::array({doc["entries"][2], doc["entries"][5]});
    subset["failure_seeds"] = nlohmann::json::array({doc["failure_seeds"][0]});
    const std::string path = kTmp + "/selection.json";
    write(path, subset.dump());
    const auto r = run("verify --select-from '" + path + "'");
    CHECK(r.code == 0);
    const auto rep = nlohmann::json::parse(r.out);
    CHECK(rep["failure_rows"].size() == 1);
    CHECK(rep["rows"][0]["id"] == doc["entries"][2]["id"]);
}

TEST_CASE("config file and job precedence") {
    const std::string conf = kTmp + "/run.conf";
    write(conf, "entries = T03\nseeds = S6514_1\nformat = csv\njobs = 2\n");
    auto r = run("verify --config '" + conf + "'");
    CHECK(r.code == 0);
    CHECK(count_lines(r.out) == 1 + 3 + 1);
    CHECK(r.out.rfind("schema_version,", 0) == 0);
    // Flag beats config; bad environment value is ignored once either is set.
    CHECK(run("verify --config '" + conf + "' --format text", "HANKEL_DUAL_JOBS=abc").code == 0);
    CHECK(run("verify --entry T03 --format text", "HANKEL_DUAL_JOBS=abc").code == 64);
    CHECK(run("verify --entry T03 --format text", "HANKEL_DUAL_JOBS=3").code == 0);
    write(conf, "entries = T03\nunknown_key = 1\n");
    r = run("verify --config '" + conf + "'");
    CHECK(r.code == 64);
    CHECK(r.err.find("line 2") != std::string::npos);
}

TEST_CASE("output file and injected error") {
    const std::string out = kTmp + "/report.json";
    auto r = run("verify --entry T03 --inject-rhs-error T03 --out '" + out + "'");
    CHECK(r.code == 1);
    CHECK(r.out.empty());
    const auto rep = nlohmann::json::parse(slurp(out));
    CHECK(rep["summary"]["entries"]["fail"] == 3);
}

TEST_CASE("check subcommand") {
    auto r = run("check --seed S6512_1a");
    CHECK(r.code == 0);
    CHECK(count_lines(r.out) == 2);  // one row plus summary
    // The I_nu K_nu seed is admissible for b > c, so the full suite reports a Fail.
    r = run("check");
    CHECK(r.code == 1);
    CHECK(r.out.find("seeds: 15 pass, 1 fail, 0 inconclusive") != std::string::npos);
    r = run("check --format json");
    CHECK(nlohmann::json::parse(r.out)["failure_rows"].size() == 16);
}

TEST_CASE("seed selection on verify") {
    const auto r = run("verify --entry T03 --seed S6514_1 --format csv");
    CHECK(r.code == 0);
    CHECK(count_lines(r.out) == 1 + 3 + 1);
    CHECK(count_lines(run("verify --entry T03 --no-seeds --format csv").out) == 1 + 3);
}
