#include "turan/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "turan/canonical.hpp"
#include "turan/enumerate.hpp"
#include "turan/families.hpp"
#include "turan/graph6.hpp"
#include "turan/report.hpp"
#include "turan/spectral.hpp"
#include "turan/verify.hpp"

namespace turan::cli {

namespace {

using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

json config_echo(const RunConfig& c) {
    return json{{"command", c.command},
                {"graph6", c.graph6},
                {"input", c.input_path},
                {"strip_isolated", c.strip_isolated},
                {"matrix", c.matrix},
                {"family", c.family},
                {"param", c.param},
                {"param2", c.param2},
                {"m", c.m},
                {"n", c.n},
                {"count_only", c.count_only},
                {"theorem", c.theorem},
                {"m_values", c.m_values},
                {"k", c.k},
                {"strictness", c.strictness},
                {"s", c.s},
                {"n_values", c.n_values},
                {"forbid_c4", c.forbid_c4},
                {"forbid_star", c.forbid_star},
                {"iters", c.iters},
                {"restarts", c.restarts},
                {"budget", c.budget},
                {"tol", c.tol},
                {"seed", c.seed},
                {"jobs", c.jobs},
                {"max_edges", c.max_edges},
                {"max_vertices", c.max_vertices}};
}

RunConfig config_from_echo(const json& j) {
    RunConfig c;
    c.command = j.at("command").get<std::string>();
    c.graph6 = j.at("graph6").get<std::vector<std::string>>();
    c.input_path = j.at("input").get<std::string>();
    c.strip_isolated = j.at("strip_isolated").get<bool>();
    c.matrix = j.at("matrix").get<std::string>();
    c.family = j.at("family").get<std::string>();
    c.param = j.at("param").get<int>();
    c.param2 = j.at("param2").get<int>();
    c.m = j.at("m").get<int>();
    c.n = j.at("n").get<int>();
    c.count_only = j.at("count_only").get<bool>();
    c.theorem = j.at("theorem").get<std::string>();
    c.m_values = j.at("m_values").get<std::vector<int>>();
    c.k = j.at("k").get<int>();
    c.strictness = j.at("strictness").get<std::string>();
    c.s = j.at("s").get<int>();
    c.n_values = j.at("n_values").get<std::vector<int>>();
    c.forbid_c4 = j.at("forbid_c4").get<bool>();
    c.forbid_star = j.at("forbid_star").get<int>();
    c.iters = j.at("iters").get<long>();
    c.restarts = j.at("restarts").get<int>();
    c.budget = j.at("budget").get<int>();
    c.tol = j.at("tol").get<double>();
    c.seed = j.at("seed").get<std::uint64_t>();
    c.jobs = j.at("jobs").get<int>();
    c.max_edges = j.at("max_edges").get<int>();
    c.max_vertices = j.at("max_vertices").get<int>();
    return c;
}

VerifyOptions verify_options(const RunConfig& c) {
    VerifyOptions opts;
    opts.solve.tol = c.tol;
    opts.jobs = c.jobs > 0 ? c.jobs : static_cast<int>(std::thread::hardware_concurrency());
    EnumCaps caps = caps_from_env();
    if (c.max_edges > 0) caps.max_edges = c.max_edges;
    if (c.max_vertices > 0) caps.max_vertices = c.max_vertices;
    opts.caps = caps;
    if (c.strictness == "strict") opts.strictness = Strictness::strict;
    else if (c.strictness == "nonstrict") opts.strictness = Strictness::non_strict;
    else opts.strictness = Strictness::per_theorem;
    return opts;
}

std::vector<Graph> graphs_from_edge_list_json(const json& doc) {
    std::vector<Graph> out;
    const json items = doc.is_array() ? doc : json::array({doc});
    for (std::size_t i = 0; i < items.size(); ++i) {
        const json& item = items[i];
        if (!item.contains("n") || !item.contains("edges"))
            throw std::invalid_argument("edge-list entry " + std::to_string(i) + " needs \"n\" and \"edges\"");
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : item.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        out.push_back(Graph::from_edges(item.at("n").get<int>(), edges));
    }
    return out;
}

std::vector<Graph> read_graph_input(const RunConfig& c) {
    std::vector<Graph> graphs;
    for (const std::string& g6 : c.graph6) graphs.push_back(from_graph6(g6));
    if (!c.input_path.empty()) {
        std::ifstream in(c.input_path);
        if (!in) throw std::runtime_error("cannot open input file: " + c.input_path);
        if (c.input_path.size() >= 5 && c.input_path.substr(c.input_path.size() - 5) == ".json") {
            json doc;
            in >> doc;
            for (Graph& g : graphs_from_edge_list_json(doc)) graphs.push_back(std::move(g));
        } else {
            for (Graph& g : read_graph6_lines(in)) graphs.push_back(std::move(g));
        }
    }
    if (c.strip_isolated)
        for (Graph& g : graphs) g = remove_isolated_vertices(g);
    return graphs;
}

// Report cells accumulate here and are flushed as JSONL: one object per
// line, appended so batch sweeps can resume.
struct ReportSink {
    std::vector<json> cells;

    void add(const RunConfig& c, json results) {
        cells.push_back(json{{"tool", "turan"},
                             {"version", kVersion},
                             {"command", c.command},
                             {"config", config_echo(c)},
                             {"results", std::move(results)}});
    }

    void flush(const RunConfig& c, double elapsed_ms) {
        for (auto& cell : cells) cell["timing_ms"] = elapsed_ms;
        if (c.out_path.empty()) {
            for (const auto& cell : cells) std::cout << cell.dump() << '\n';
            return;
        }
        std::ofstream out(c.out_path, std::ios::app);
        if (!out) throw std::runtime_error("cannot write report to " + c.out_path);
        for (const auto& cell : cells) out << cell.dump() << '\n';
    }
};

int run_spectral(const RunConfig& c, ReportSink& sink) {
    const std::vector<Graph> graphs = read_graph_input(c);
    if (graphs.empty()) throw std::invalid_argument("spectral needs at least one graph (--graph6 or --input)");
    const MatrixKind kind = c.matrix == "signless" ? MatrixKind::signless : MatrixKind::adjacency;
    if (c.matrix != "signless" && c.matrix != "adjacency")
        throw std::invalid_argument("--matrix must be adjacency or signless");
    SolveOptions solve;
    solve.tol = c.tol;
    json results = json::array();
    for (const Graph& g : graphs) {
        const SpectralResult r = spectral_radius(g, kind, solve);
        json item = r;
        item["graph6"] = to_graph6(g);
        item["order"] = g.order();
        item["size"] = g.size();
        item["matrix"] = c.matrix;
        results.push_back(std::move(item));
    }
    sink.add(c, std::move(results));
    return 0;
}

int run_families(const RunConfig& c, ReportSink& sink) {
    FamilySpec spec{family_from_name(c.family), c.param, c.param2};
    const Graph g = make_family(spec);
    SolveOptions solve;
    solve.tol = c.tol;
    const SpectralResult r = adjacency_spectral_radius(g, solve);
    json item{{"family", c.family},
              {"graph6", to_graph6(g)},
              {"order", g.order()},
              {"size", g.size()},
              {"max_degree", max_degree(g)},
              {"c4_free", !contains_c4(g)},
              {"connected", is_connected(g)},
              {"bipartite", is_bipartite(g)},
              {"rho", r.value},
              {"residual", r.residual}};
    if (const auto closed = closed_form_spectral_radius(spec)) item["closed_form_rho"] = *closed;
    sink.add(c, std::move(item));
    return 0;
}

int run_enumerate(const RunConfig& c, const VerifyOptions& opts) {
    if ((c.m < 0) == (c.n < 0)) throw std::invalid_argument("enumerate needs exactly one of --m / --n");
    const EnumStream stream = c.m >= 0 ? EnumStream::by_edges(c.m, true, opts.caps, opts.jobs)
                                       : EnumStream::by_vertices(c.n, opts.caps, opts.jobs);
    if (c.count_only) {
        ReportSink sink;
        sink.add(c, json{{"count", stream.size()}});
        sink.flush(c, 0.0);
        return 0;
    }
    if (c.out_path.empty()) {
        stream.dump(std::cout);
    } else {
        std::ofstream out(c.out_path);
        if (!out) throw std::runtime_error("cannot write to " + c.out_path);
        stream.dump(out);
    }
    return 0;
}

int run_verify(const RunConfig& c, ReportSink& sink) {
    const VerifyOptions opts = verify_options(c);
    std::vector<int> cells = c.m_values;
    if (cells.empty()) {
        if (c.m < 0) throw std::invalid_argument("verify needs --m");
        cells.push_back(c.m);
    }
    const TheoremId id = theorem_from_name(c.theorem);
    bool found = false;
    for (int m : cells) {
        RunConfig cell = c;
        cell.m = m;
        cell.m_values = {m};
        const TheoremReport report = verify_theorem({id, m, c.k}, opts);
        found = found || !report.violations.empty();
        sink.add(cell, report);
    }
    return found ? 2 : 0;
}

int run_conjecture(const RunConfig& c, ReportSink& sink) {
    const VerifyOptions opts = verify_options(c);
    std::vector<int> cells = c.n_values;
    if (cells.empty()) {
        if (c.n < 0) throw std::invalid_argument("conjecture needs --n");
        cells.push_back(c.n);
    }
    bool found = false;
    for (int n : cells) {
        RunConfig cell = c;
        cell.n = n;
        cell.n_values = {n};
        const ConjectureReport report = search_conjecture(c.s, n, opts);
        found = found || !report.counterexamples.empty();
        sink.add(cell, report);
    }
    return found ? 2 : 0;
}

int run_search(const RunConfig& c, ReportSink& sink) {
    if (c.m < 0) throw std::invalid_argument("search needs --m");
    LocalSearchOptions opts;
    opts.iters = c.iters;
    opts.restarts = c.restarts;
    opts.seed = c.seed;
    opts.vertex_budget = c.budget;
    opts.solve.tol = c.tol;
    opts.jobs = c.jobs > 0 ? c.jobs : static_cast<int>(std::thread::hardware_concurrency());
    const std::optional<int> star = c.forbid_star > 0 ? std::optional<int>(c.forbid_star) : std::nullopt;
    const LocalSearchResult res = local_search_max_rho(c.m, c.forbid_c4, star, opts);
    sink.add(c, json{{"m", c.m},
                     {"forbid_c4", c.forbid_c4},
                     {"forbid_star", c.forbid_star},
                     {"best_graph6", to_graph6(res.best)},
                     {"best_canonical", canonical_form(res.best).bytes},
                     {"value", res.spectral.value},
                     {"residual", res.spectral.residual},
                     {"evaluations", res.evaluations},
                     {"best_restart", res.best_restart}});
    return 0;
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

// Re-runs every cell of a previous report from its config echo and demands
// identical classifications (timing aside).
int run_recheck(const RunConfig& c) {
    std::ifstream in(c.recheck_path);
    if (!in) throw std::runtime_error("cannot open report: " + c.recheck_path);
    std::string line;
    int cell_index = 0;
    bool all_match = true;
    json summary = json::array();
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const json cell = json::parse(line);
        RunConfig replay = config_from_echo(cell.at("config"));
        replay.out_path = "";  // results are compared, not written

        ReportSink sink;
        int code = 0;
        if (replay.command == "spectral") code = run_spectral(replay, sink);
        else if (replay.command == "families") code = run_families(replay, sink);
        else if (replay.command == "verify") code = run_verify(replay, sink);
        else if (replay.command == "conjecture") code = run_conjecture(replay, sink);
        else if (replay.command == "search") code = run_search(replay, sink);
        else throw std::invalid_argument("recheck cannot replay command: " + replay.command);
        (void)code;

        if (sink.cells.size() != 1) throw std::logic_error("replay produced an unexpected cell count");
        const bool match = strip_timing(sink.cells[0].at("results")) == strip_timing(cell.at("results"));
        all_match = all_match && match;
        summary.push_back(json{{"cell", cell_index}, {"command", replay.command}, {"reproduced", match}});
        ++cell_index;
    }
    std::cout << json{{"tool", "turan"},
                      {"version", kVersion},
                      {"command", "recheck"},
                      {"report", c.recheck_path},
                      {"cells", summary},
                      {"all_reproduced", all_match}}
                     .dump()
              << '\n';
    return all_match ? 0 : 2;
}

}  // namespace

int run(const RunConfig& config) {
    if (!config.recheck_path.empty()) return run_recheck(config);

    const auto start = std::chrono::steady_clock::now();
    if (config.command == "enumerate") return run_enumerate(config, verify_options(config));

    ReportSink sink;
    int code = 0;
    if (config.command == "spectral") code = run_spectral(config, sink);
    else if (config.command == "families") code = run_families(config, sink);
    else if (config.command == "verify") code = run_verify(config, sink);
    else if (config.command == "conjecture") code = run_conjecture(config, sink);
    else if (config.command == "search") code = run_search(config, sink);
    else throw std::invalid_argument("unknown command: " + config.command);

    const double elapsed =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    sink.flush(config, elapsed);
    return code;
}

int main_entry(int argc, const char* const* argv) {
    RunConfig config;
    CLI::App app{"spectral size-Turan toolkit: quadrilaterals, stars, and spectral radii"};
    app.require_subcommand(0, 1);
    app.set_version_flag("--version", kVersion);
    app.add_option("--recheck", config.recheck_path, "re-run a JSONL report and compare classifications");

    const EnumCaps env_caps = caps_from_env();

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--tol", config.tol, "solver residual tolerance");
        cmd->add_option("--seed", config.seed, "deterministic seed");
        cmd->add_option("--jobs", config.jobs, "worker threads (0: all cores)");
        cmd->add_option("--out", config.out_path, "report path (JSONL, appended)");
        cmd->add_option("--max-edges", config.max_edges, "enumeration cap override")
            ->default_val(env_caps.max_edges);
        cmd->add_option("--max-vertices", config.max_vertices, "enumeration cap override")
            ->default_val(env_caps.max_vertices);
    };

    CLI::App* spectral = app.add_subcommand("spectral", "leading eigenvalue of input graphs");
    spectral->add_option("--graph6", config.graph6, "inline graph6 strings");
    spectral->add_option("--input", config.input_path, "graph6 line file or edge-list *.json");
    spectral->add_option("--matrix", config.matrix, "adjacency | signless");
    spectral->add_flag("--strip-isolated", config.strip_isolated, "drop isolated vertices first");
    add_common(spectral);

    CLI::App* families = app.add_subcommand("families", "construct a named family and report its stats");
    families->add_option("--family", config.family, "family name")->required();
    families->add_option("--param", config.param, "order or size parameter")->required();
    families->add_option("--param2", config.param2, "second part size (complete_bipartite)");
    add_common(families);

    CLI::App* enumerate = app.add_subcommand("enumerate", "isomorph-free graph streams as graph6 lines");
    enumerate->add_option("--m", config.m, "by edge count");
    enumerate->add_option("--n", config.n, "by vertex count");
    enumerate->add_flag("--count-only", config.count_only, "emit the class count instead of graphs");
    add_common(enumerate);

    CLI::App* verify = app.add_subcommand("verify", "exhaustive theorem scan over all classes of size m");
    verify->add_option("--theorem", config.theorem, "1.1 | 1.2 | 1.3 | 1.4 | 1.5 | 1.6")->required();
    verify->add_option("--m", config.m_values, "size(s) to scan; several values make a JSONL batch")
        ->required();
    verify->add_option("--k", config.k, "offset for theorems 1.4 / 1.6");
    verify->add_flag_callback("--strict", [&] { config.strictness = "strict"; },
                              "force a strict hypothesis reading");
    verify->add_flag_callback("--nonstrict", [&] { config.strictness = "nonstrict"; },
                              "force a non-strict hypothesis reading");
    add_common(verify);

    CLI::App* conjecture = app.add_subcommand("conjecture", "order-n scan for threshold counterexamples");
    conjecture->add_option("--s", config.s, "star deficit s (forbids K_{1,n-s})")->required();
    conjecture->add_option("--n", config.n_values, "order(s) to scan")->required();
    add_common(conjecture);

    CLI::App* search = app.add_subcommand("search", "hill-climb for large rho under forbidden subgraphs");
    search->add_option("--m", config.m, "edge count")->required();
    search->add_flag("--forbid-c4", config.forbid_c4, "reject graphs containing C4");
    search->add_option("--forbid-star", config.forbid_star, "reject graphs containing K_{1,t}");
    search->add_option("--iters", config.iters, "rotations per restart");
    search->add_option("--restarts", config.restarts, "independent restarts");
    search->add_option("--budget", config.budget, "vertex budget (0: m+1)");
    add_common(search);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    if (config.recheck_path.empty()) {
        if (app.get_subcommands().empty()) {
            std::cerr << app.help() << std::flush;
            return 1;
        }
        config.command = app.get_subcommands().front()->get_name();
    }

    try {
        return run(config);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace turan::cli
