#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "turan/canonical.hpp"
#include "turan/families.hpp"
#include "turan/graph6.hpp"

using namespace turan;
using nlohmann::json;

namespace {

struct CliRun {
    int exit_code;
    std::string out;
};

// Runs the installed binary through the shell; stderr folds into stdout.
CliRun run_cli(const std::string& args) {
    const std::string cmd = std::string(TURAN_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

json strip_timing(json j) {
    if (j.is_object()) {
        j.erase("timing_ms");
        for (auto& [key, value] : j.items()) value = strip_timing(value);
    } else if (j.is_array()) {
        for (auto& value : j) value = strip_timing(value);
    }
    return j;
}

std::string temp_path(const std::string& name) {
    return std::string("/tmp/turan_test_") + std::to_string(static_cast<long>(getpid())) + "_" + name;
}

}  // namespace

TEST_CASE("spectral on C4: value 2, residual within tolerance, exit 0") {
    const std::string g6 = to_graph6(make_family({FamilyKind::cycle, 4}));
    const CliRun run = run_cli("spectral --graph6 '" + g6 + "' --matrix adjacency");
    REQUIRE(run.exit_code == 0);
    const json doc = json::parse(run.out);
    CHECK(doc["results"][0]["value"].get<double>() == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(doc["results"][0]["residual"].get<double>() <= 1e-10);
}

TEST_CASE("verify 1.5 at m=4: exit 0 and a single equality witness") {
    const CliRun run = run_cli("verify --theorem 1.5 --m 4");
    REQUIRE(run.exit_code == 0);
    const json doc = json::parse(run.out);
    CHECK(doc["results"]["violations"].empty());
    CHECK(doc["results"]["equality_witnesses"].size() == 1);
}

TEST_CASE("verify 1.1 at m=9 under --nonstrict finds the exception landscape: exit 2") {
    const CliRun run = run_cli("verify --theorem 1.1 --m 9 --nonstrict --jobs 2");
    CHECK(run.exit_code == 2);
    const json doc = json::parse(run.out);
    CHECK(!doc["results"]["violations"].empty());
}

TEST_CASE("conjecture s=1 n=5: exit 0, extremal witness is the friendship graph") {
    const CliRun run = run_cli("conjecture --s 1 --n 5");
    REQUIRE(run.exit_code == 0);
    const json doc = json::parse(run.out);
    CHECK(doc["results"]["counterexamples"].empty());
    const std::string f5 = canonical_form(make_family({FamilyKind::friendship_odd, 5})).bytes;
    CHECK(doc["results"]["c4_free_extremal_witnesses"][0].get<std::string>() == f5);
}

TEST_CASE("enumerate emits one graph6 line per class") {
    const CliRun run = run_cli("enumerate --m 3");
    REQUIRE(run.exit_code == 0);
    std::istringstream lines(run.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line))
        if (!line.empty()) ++count;
    CHECK(count == 5);

    const CliRun counted = run_cli("enumerate --n 4 --count-only");
    REQUIRE(counted.exit_code == 0);
    CHECK(json::parse(counted.out)["results"]["count"].get<int>() == 11);
}

TEST_CASE("usage and input errors exit 1") {
    CHECK(run_cli("").exit_code == 1);
    CHECK(run_cli("verify --m 4").exit_code == 1);             // missing --theorem
    CHECK(run_cli("verify --theorem 9.9 --m 4").exit_code == 1);
    CHECK(run_cli("spectral --graph6 '\x01bad'").exit_code == 1);
    CHECK(run_cli("enumerate --m 13").exit_code == 1);         // above the default cap
    CHECK(run_cli("families --family nope --param 3").exit_code == 1);
}

TEST_CASE("graph6 input from a file reports the failing line") {
    const std::string path = temp_path("bad.g6");
    {
        std::ofstream out(path);
        out << "A_\n!!!not-graph6\n";
    }
    const CliRun run = run_cli("spectral --input " + path);
    CHECK(run.exit_code == 1);
    CHECK(run.out.find("line 2") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("edge-list JSON input") {
    const std::string path = temp_path("graphs.json");
    {
        std::ofstream out(path);
        out << R"([{"n": 4, "edges": [[0,1],[1,2],[2,3],[3,0]]}])";
    }
    const CliRun run = run_cli("spectral --input " + path);
    REQUIRE(run.exit_code == 0);
    const json doc = json::parse(run.out);
    CHECK(doc["results"][0]["value"].get<double>() == doctest::Approx(2.0));
    std::remove(path.c_str());
}

TEST_CASE("reports are byte-stable modulo timing, and recheck reproduces them") {
    const std::string a = temp_path("report_a.jsonl");
    const std::string b = temp_path("report_b.jsonl");
    std::remove(a.c_str());
    std::remove(b.c_str());
    REQUIRE(run_cli("verify --theorem 1.5 --m 4 --m 5 --seed 7 --out " + a).exit_code == 0);
    REQUIRE(run_cli("verify --theorem 1.5 --m 4 --m 5 --seed 7 --out " + b).exit_code == 0);

    std::ifstream fa(a), fb(b);
    std::string la, lb;
    int cells = 0;
    while (std::getline(fa, la) && std::getline(fb, lb)) {
        CHECK(strip_timing(json::parse(la)) == strip_timing(json::parse(lb)));
        ++cells;
    }
    CHECK(cells == 2);  // one JSONL line per (theorem, m) cell

    const CliRun recheck = run_cli("--recheck " + a);
    CHECK(recheck.exit_code == 0);
    CHECK(json::parse(recheck.out)["all_reproduced"].get<bool>());

    std::remove(a.c_str());
    std::remove(b.c_str());
}

TEST_CASE("search subcommand honors the forbidden patterns") {
    const CliRun run = run_cli("search --m 8 --forbid-c4 --restarts 4 --iters 100 --seed 3 --jobs 2");
    REQUIRE(run.exit_code == 0);
    const json doc = json::parse(run.out);
    const Graph best = from_graph6(doc["results"]["best_graph6"].get<std::string>());
    CHECK(!contains_c4(best));
    CHECK(best.size() == 8);
}

TEST_CASE("SPECTRAL_TURAN_CAP env var caps enumeration, flags override it") {
    const CliRun capped = run_cli("enumerate --m 6 --count-only");
    CHECK(capped.exit_code == 0);
    CHECK(run_cli("enumerate --m 13 --count-only").exit_code == 1);

    // env lowers the cap; an explicit flag wins over the env value
    const std::string env = "SPECTRAL_TURAN_CAP=5 " + std::string(TURAN_CLI_PATH);
    std::array<char, 512> buf{};
    std::string out;
    FILE* pipe = popen((env + " enumerate --m 6 --count-only 2>&1").c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
    CHECK(WEXITSTATUS(pclose(pipe)) == 1);

    out.clear();
    pipe = popen((env + " enumerate --m 6 --max-edges 8 --count-only 2>&1").c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
    CHECK(WEXITSTATUS(pclose(pipe)) == 0);
}
