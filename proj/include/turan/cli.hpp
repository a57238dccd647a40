#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace turan::cli {

/// One fully validated invocation. Every field is echoed into the report so
/// a run can be reproduced (and rechecked) from the report alone.
struct RunConfig {
    std::string command;  // spectral | families | enumerate | verify | conjecture | search

    std::vector<std::string> graph6;  // inline graphs
    std::string input_path;           // graph6 lines, or edge-list JSON when *.json
    bool strip_isolated = false;

    std::string matrix = "adjacency";  // spectral: adjacency | signless

    std::string family;  // families
    int param = 0;
    int param2 = 0;

    int m = -1;  // enumerate
    int n = -1;
    bool count_only = false;

    std::string theorem;       // verify: 1.1 .. 1.6
    std::vector<int> m_values;
    int k = 0;
    std::string strictness = "per-theorem";  // strict | nonstrict

    int s = 1;  // conjecture
    std::vector<int> n_values;

    bool forbid_c4 = false;  // search
    int forbid_star = 0;     // 0: unconstrained
    long iters = 2000;
    int restarts = 32;
    int budget = 0;

    double tol = 1e-10;
    std::uint64_t seed = 1;
    int jobs = 0;  // 0: hardware concurrency
    std::string out_path;  // empty: stdout; batch cells append as JSONL
    int max_edges = 0;     // 0: default/env
    int max_vertices = 0;

    std::string recheck_path;  // when set, re-run a report and compare
};

/// Executes the run and writes the report. Exit status: 0 clean, 2 when
/// violations or counterexamples were found (report still written), 1 on
/// usage or runtime errors (thrown; main_entry converts).
int run(const RunConfig& config);

/// argv -> RunConfig -> run, with usage errors mapped to exit 1.
int main_entry(int argc, const char* const* argv);

}  // namespace turan::cli
