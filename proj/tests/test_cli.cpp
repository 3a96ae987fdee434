#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

using nlohmann::ordered_json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr interleaved
};

// spawns the binary under test; its path arrives via the environment so the
// suite can run against any build tree
RunResult run_cli(const std::string& args) {
    const char* exe = std::getenv("TWISTSPEC_CLI");
    REQUIRE_MESSAGE(exe != nullptr, "TWISTSPEC_CLI must point at the binary");
    RunResult r;
    std::string cmd = std::string(exe) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.output.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::vector<std::string> split_lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("help exits zero and lists subcommands") {
    RunResult r = run_cli("--help");
    CHECK(r.exit_code == 0);
    for (const char* sub :
         {"matrix", "charpoly", "spectrum", "digraph", "mixing", "bounds", "sweep", "verify"})
        CHECK_MESSAGE(r.output.find(sub) != std::string::npos, sub);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("").exit_code == 2);                       // no subcommand
    CHECK(run_cli("frobnicate").exit_code == 2);             // unknown subcommand
    CHECK(run_cli("matrix").exit_code == 2);                 // missing --genus
    CHECK(run_cli("matrix --genus 5 --bogus").exit_code == 2);
    CHECK(run_cli("matrix --genus 3").exit_code == 2);       // below construction floor
    CHECK(run_cli("matrix --genus abc").exit_code == 2);
    CHECK(run_cli("matrix --genus 1000001").exit_code == 2); // above genus cap
    CHECK(run_cli("sweep --genus 9..5").exit_code == 2);     // reversed range
    CHECK(run_cli("matrix --genus 5 --format csv").exit_code == 2);  // unsupported format
    CHECK(run_cli("spectrum --genus 5 --tol 0").exit_code == 2);
    CHECK(run_cli("spectrum --genus 5 --tol -1e-3").exit_code == 2);
    CHECK(run_cli("matrix --genus 5 --out /nonexistent/dir/x.json").exit_code == 2);
}

TEST_CASE("matrix json round-trips byte for byte") {
    RunResult r = run_cli("matrix --genus 5");
    REQUIRE(r.exit_code == 0);
    CHECK(ordered_json::parse(r.output).dump(2) + "\n" == r.output);
    ordered_json j = ordered_json::parse(r.output);
    CHECK(j["genus"] == 5);
    CHECK(j["dimension"] == 16);
    CHECK(j["basis"].size() == 16);
    CHECK(j["entries"].size() == 16);
    // determinism: same invocation, same bytes
    CHECK(run_cli("matrix --genus 5").output == r.output);
}

TEST_CASE("matrix respects rotation and orientation flags") {
    std::string plus = run_cli("matrix --genus 4 --rotation plus").output;
    std::string minus = run_cli("matrix --genus 4 --rotation minus").output;
    std::string autod = run_cli("matrix --genus 4 --rotation auto").output;
    CHECK(plus != minus);
    CHECK(autod == plus);  // calibration picks the plus rotation

    std::string cols = run_cli("digraph --genus 4 --orientation columns").output;
    std::string rows = run_cli("digraph --genus 4 --orientation rows").output;
    std::string autoo = run_cli("digraph --genus 4 --orientation auto").output;
    CHECK(cols != rows);
    CHECK(autoo == cols);  // calibration picks columns
}

TEST_CASE("charpoly emits the frozen genus-4 coefficients") {
    RunResult r = run_cli("charpoly --genus 4");
    REQUIRE(r.exit_code == 0);
    ordered_json j = ordered_json::parse(r.output);
    const std::vector<std::string> want = {"1", "-1", "-1", "-12", "1",  "1", "22",
                                           "1", "1",  "-12", "-1", "-1", "1"};
    REQUIRE(j["coefficients_ascending"].size() == want.size());
    for (size_t i = 0; i < want.size(); ++i) CHECK(j["coefficients_ascending"][i] == want[i]);
    CHECK(j["matches_reference"] == false);

    RunResult t = run_cli("charpoly --genus 4 --format text");
    CHECK(t.exit_code == 0);
    CHECK(t.output.find("matches_reference: no") != std::string::npos);
}

TEST_CASE("spectrum reports the certified enclosure and exact tolerance") {
    RunResult r = run_cli("spectrum --genus 5");
    REQUIRE(r.exit_code == 0);
    ordered_json j = ordered_json::parse(r.output);
    CHECK(j["tolerance"] == "1/10000000000");
    const std::string lo = j["spectral_radius"]["lower"];
    const std::string hi = j["spectral_radius"]["upper"];
    CHECK(lo.rfind("2.19736605", 0) == 0);
    CHECK(hi.rfind("2.19736605", 0) == 0);
    CHECK(j["perron_vector"]["entries"].size() == 16);

    RunResult coarse = run_cli("spectrum --genus 5 --tol 1/1000");
    ordered_json jc = ordered_json::parse(coarse.output);
    CHECK(jc["tolerance"] == "1/1000");
}

TEST_CASE("digraph defaults to the edge-list text format") {
    RunResult r = run_cli("digraph --genus 4");
    REQUIRE(r.exit_code == 0);
    auto lines = split_lines(r.output);
    REQUIRE_FALSE(lines.empty());
    CHECK(lines[0] == "a0 a1 2");
    RunResult j = run_cli("digraph --genus 4 --format json");
    CHECK(ordered_json::parse(j.output)["kind"] == "digraph");
}

TEST_CASE("mixing report for the calibrated conventions") {
    RunResult r = run_cli("mixing --genus 9");
    REQUIRE(r.exit_code == 0);
    ordered_json j = ordered_json::parse(r.output);
    CHECK(j["primitivity"]["exponent"] == 15);
    CHECK(j["self_loops"][0]["vertex"] == "a1");
    CHECK(j["exact_length_covers"]["all_full"] == true);
    CHECK(j["path_counts"]["max"] == "83");
    CHECK(j["path_counts"]["within_bound"] == false);
}

TEST_CASE("bounds works below the construction floor") {
    RunResult r = run_cli("bounds --genus 2");
    REQUIRE(r.exit_code == 0);
    ordered_json j = ordered_json::parse(r.output);
    CHECK(j["dilatation_source"] == "closed-form-only");
    CHECK(j["ellC_lower"] == "1/3");
    CHECK_FALSE(j.contains("spectral_radius"));

    RunResult r9 = run_cli("bounds --genus 9");
    ordered_json j9 = ordered_json::parse(r9.output);
    CHECK(j9["dilatation_source"] == "certified-enclosure");
    CHECK(j9["ellC_lower"] == "1/17");
    CHECK(j9["mixing_exponent"] == 15);
}

TEST_CASE("sweep emits one csv row per genus plus the frozen header") {
    RunResult r = run_cli("sweep --genus 5..40");
    REQUIRE(r.exit_code == 0);
    auto lines = split_lines(r.output);
    REQUIRE(lines.size() == 37);  // header + 36 rows
    CHECK(lines[0] ==
          "genus,dimension,trace,determinant,lambda_lower,lambda_upper,log_lambda_lower,"
          "log_lambda_upper,dil_lower,dil_upper,dil_upper_sharp,ellC_lower,kappa_lower_lo,"
          "kappa_lower_hi,kappa_upper,kappa_lower_log_g_lo,kappa_lower_log_g_hi,"
          "kappa_upper_log_g,mixing_exponent,filling_floor,rotation,orientation");
    CHECK(lines[5].rfind("9,32,1,1,", 0) == 0);
    CHECK(lines[5].find(",1/17,") != std::string::npos);
    // single-genus form
    RunResult one = run_cli("sweep --genus 7");
    CHECK(split_lines(one.output).size() == 2);
}

TEST_CASE("verify reports named failures and exits 1") {
    RunResult r = run_cli("verify --genus 5..6");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("FAIL charpoly_identity g=5") != std::string::npos);
    CHECK(r.output.find("PASS self_loop_census g=5") != std::string::npos);
    CHECK(r.output.find("PASS mixing_exponent g=6") != std::string::npos);
    CHECK(r.output.find("summary: ") != std::string::npos);
    CHECK(run_cli("verify --genus 3").exit_code == 2);
}

TEST_CASE("the corruption hook flips the reference integrity check") {
    RunResult clean = run_cli("verify --genus 4");
    CHECK(clean.output.find("PASS reference_poly_integrity g=4") != std::string::npos);
    RunResult bad = run_cli("verify --genus 4 --corrupt-reference-poly");
    CHECK(bad.exit_code == 1);
    CHECK(bad.output.find("FAIL reference_poly_integrity g=4") != std::string::npos);
}

TEST_CASE("--out writes the same bytes to a file") {
    const char* path = "/tmp/twistspec_cli_matrix.json";
    std::remove(path);
    RunResult direct = run_cli("matrix --genus 5");
    RunResult filed = run_cli(std::string("matrix --genus 5 --out ") + path);
    REQUIRE(filed.exit_code == 0);
    CHECK(filed.output.empty());
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == direct.output);
    std::remove(path);
}
