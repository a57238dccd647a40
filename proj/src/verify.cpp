#include "turan/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>
#include <stdexcept>

#include "turan/canonical.hpp"
#include "turan/families.hpp"
#include "turan/graph6.hpp"
#include "turan/parallel.hpp"
#include "turan/polynomial.hpp"

namespace turan {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Decided {
    Rel rel = Rel::less;
    bool undecided = false;
};

// Float comparison with the exact comparator taking over inside the margin.
Decided decide_rho_sq(const Graph& g, long c, double rho, const VerifyOptions& opts) {
    const double margin = rho * rho - static_cast<double>(c);
    if (std::abs(margin) >= opts.boundary_margin) return {margin > 0 ? Rel::greater : Rel::less, false};
    try {
        return {compare_rho_squared_exact(g, mpq_class(c), opts.exact).relation, false};
    } catch (const CapExceeded&) {
        return {Rel::less, true};
    }
}

Decided decide_q(const Graph& g, long c, double q, const VerifyOptions& opts) {
    const double margin = q - static_cast<double>(c);
    if (std::abs(margin) >= opts.boundary_margin) return {margin > 0 ? Rel::greater : Rel::less, false};
    try {
        return {compare_q_exact(g, mpq_class(c), opts.exact).relation, false};
    } catch (const CapExceeded&) {
        return {Rel::less, true};
    }
}

Decided decide_rho_vs_poly(const Graph& g, const IntPoly& poly, double rho, double root,
                           const VerifyOptions& opts) {
    const double margin = rho - root;
    if (std::abs(margin) >= opts.boundary_margin) return {margin > 0 ? Rel::greater : Rel::less, false};
    try {
        return {compare_rho_vs_poly_exact(g, poly, opts.exact), false};
    } catch (const CapExceeded&) {
        return {Rel::less, true};
    }
}

bool hypothesis_from(Rel rel, bool strict) { return strict ? rel == Rel::greater : rel != Rel::less; }

bool default_strict(TheoremId id) { return id == TheoremId::T1_1; }

IntPoly star_plus_edge_factor(int m) {
    // x^3 - x^2 - (m-1)x + (m-3), the factor of K_{1,m-1}+e's characteristic
    // polynomial that carries its spectral radius.
    return IntPoly({mpz_class(m - 3), mpz_class(-(m - 1)), mpz_class(-1), mpz_class(1)});
}

// rho(G) <= max over edges of sqrt(d(u) d(v)); lets the scan skip the solver
// for graphs that cannot reach the hypothesis threshold.
double rho_upper_bound(const Graph& g) {
    if (g.size() == 0) return 0.0;
    long best = 0;
    for (int u = 0; u < g.order(); ++u)
        for (int v : g.neighbors(u))
            if (u < v) best = std::max(best, static_cast<long>(g.degree(u)) * g.degree(v));
    return std::sqrt(static_cast<double>(best));
}

// q(G) <= max over edges of d(u) + d(v).
double q_upper_bound(const Graph& g) {
    if (g.size() == 0) return 0.0;
    long best = 0;
    for (int u = 0; u < g.order(); ++u)
        for (int v : g.neighbors(u))
            if (u < v) best = std::max(best, static_cast<long>(g.degree(u)) + g.degree(v));
    return static_cast<double>(best);
}

}  // namespace

long theorem_min_size(TheoremId id, int k) {
    switch (id) {
        case TheoremId::T1_1: return 9;
        case TheoremId::T1_2: return 26;
        case TheoremId::T1_3: return 27;
        case TheoremId::T1_4: {
            const long a = static_cast<long>(k) * k + 2 * k + 2;
            const long b = 2 * k + 3;
            return std::max(a * a + k + 1, b * b + k + 1);
        }
        case TheoremId::T1_5: return 4;
        case TheoremId::T1_6: {
            const long half = (static_cast<long>(k) * k + 12 * k + 6 + 1) / 2;  // ceil(k^2/2 + 6k + 3)
            return std::max(half, 7L * k + 25);
        }
    }
    throw std::invalid_argument("unknown theorem id");
}

const char* theorem_name(TheoremId id) {
    switch (id) {
        case TheoremId::T1_1: return "1.1";
        case TheoremId::T1_2: return "1.2";
        case TheoremId::T1_3: return "1.3";
        case TheoremId::T1_4: return "1.4";
        case TheoremId::T1_5: return "1.5";
        case TheoremId::T1_6: return "1.6";
    }
    return "?";
}

TheoremId theorem_from_name(const std::string& name) {
    for (TheoremId id : {TheoremId::T1_1, TheoremId::T1_2, TheoremId::T1_3, TheoremId::T1_4,
                         TheoremId::T1_5, TheoremId::T1_6})
        if (name == theorem_name(id)) return id;
    throw std::invalid_argument("unknown theorem: " + name + " (expected 1.1 .. 1.6)");
}

TheoremReport verify_theorem(const TheoremSpec& spec, const VerifyOptions& opts) {
    return verify_theorem(spec, opts, EnumStream::by_edges(spec.m, true, opts.caps, opts.jobs));
}

TheoremReport verify_theorem(const TheoremSpec& spec, const VerifyOptions& opts, const EnumStream& stream) {
    const auto start = Clock::now();
    const int m = spec.m;
    const int k = spec.k;
    if (m < 1) throw std::invalid_argument("theorem verification needs m >= 1");
    if ((spec.id == TheoremId::T1_4 || spec.id == TheoremId::T1_6) && (k < 0 || k >= m))
        throw std::invalid_argument("k must satisfy 0 <= k < m");
    if ((spec.id == TheoremId::T1_2 || spec.id == TheoremId::T1_3) && m < 3)
        throw std::invalid_argument("the exception families need m >= 3");

    const bool strict = opts.strictness == Strictness::per_theorem ? default_strict(spec.id)
                                                                   : opts.strictness == Strictness::strict;
    const bool signless = spec.id == TheoremId::T1_5 || spec.id == TheoremId::T1_6;

    // Exception-list canonical forms, built once.
    std::set<std::string> exception_forms;
    IntPoly t12_poly;
    double t12_root = 0.0;
    if (spec.id == TheoremId::T1_2) {
        t12_poly = star_plus_edge_factor(m);
        t12_root = largest_root(t12_poly, 1e-13);
        exception_forms.insert(canonical_form(make_family({FamilyKind::star_plus_edge, m})).bytes);
    } else if (spec.id == TheoremId::T1_3) {
        exception_forms.insert(canonical_form(make_family({FamilyKind::star, m + 1})).bytes);
        exception_forms.insert(canonical_form(make_family({FamilyKind::star_plus_edge, m})).bytes);
        exception_forms.insert(canonical_form(make_family({FamilyKind::star_pendant_edge, m})).bytes);
        exception_forms.insert(canonical_form(make_family({FamilyKind::star_union_p2, m})).bytes);
    } else if (spec.id == TheoremId::T1_5) {
        exception_forms.insert(canonical_form(make_family({FamilyKind::star, m + 1})).bytes);
    }

    struct Cls {
        bool hyp = false;
        bool violation = false;
        bool equality = false;
        bool undecided = false;
    };
    std::vector<Cls> results(stream.size());

    parallel_chunks(stream.size(), opts.jobs, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            const Graph g = stream.graph_at(i);
            Cls& out = results[i];

            if (spec.id == TheoremId::T1_2 && (!is_connected(g) || is_bipartite(g))) continue;

            Decided dec;
            if (signless) {
                const long threshold = spec.id == TheoremId::T1_5 ? m + 1 : m - k + 1;
                if (q_upper_bound(g) < threshold - opts.boundary_margin) {
                    dec = {Rel::less, false};
                } else {
                    const double q = signless_laplacian_spectral_radius(g, opts.solve).value;
                    dec = decide_q(g, threshold, q, opts);
                }
            } else if (spec.id == TheoremId::T1_2) {
                if (rho_upper_bound(g) < t12_root - opts.boundary_margin) {
                    dec = {Rel::less, false};
                } else {
                    const double rho = adjacency_spectral_radius(g, opts.solve).value;
                    dec = decide_rho_vs_poly(g, t12_poly, rho, t12_root, opts);
                }
            } else {
                const long c = spec.id == TheoremId::T1_1 ? m : (spec.id == TheoremId::T1_3 ? m - 1 : m - k);
                const double ub = rho_upper_bound(g);
                if (ub * ub < c - opts.boundary_margin) {
                    dec = {Rel::less, false};
                } else {
                    const double rho = adjacency_spectral_radius(g, opts.solve).value;
                    dec = decide_rho_sq(g, c, rho, opts);
                }
            }
            if (dec.undecided) {
                out.undecided = true;
                continue;
            }
            out.equality = dec.rel == Rel::equal;
            out.hyp = hypothesis_from(dec.rel, strict);
            if (!out.hyp) continue;

            bool conclusion = false;
            switch (spec.id) {
                case TheoremId::T1_1:
                    conclusion = contains_c4(g);
                    break;
                case TheoremId::T1_2:
                case TheoremId::T1_3:
                    conclusion = contains_c4(g) ||
                                 exception_forms.count(canonical_form(remove_isolated_vertices(g)).bytes) > 0;
                    break;
                case TheoremId::T1_4:
                    conclusion = contains_c4(g) || max_degree(g) >= m - k;
                    break;
                case TheoremId::T1_5:
                    conclusion = exception_forms.count(canonical_form(remove_isolated_vertices(g)).bytes) > 0;
                    break;
                case TheoremId::T1_6:
                    conclusion = max_degree(g) >= m - k;
                    break;
            }
            out.violation = !conclusion;
        }
    });

    TheoremReport report;
    report.spec = spec;
    report.scanned = static_cast<long>(stream.size());
    report.below_threshold = m < theorem_min_size(spec.id, k);
    for (std::size_t i = 0; i < results.size(); ++i) {
        const Cls& r = results[i];
        if (r.hyp) ++report.hypothesis_hits;
        if (r.violation) report.violations.push_back(stream.key_at(i));
        if (r.equality) report.equality_witnesses.push_back(stream.key_at(i));
        if (r.undecided) report.boundary_undecided.push_back(stream.key_at(i));
    }
    report.elapsed_ms = ms_since(start);
    return report;
}

ExceptionFamilyReport certify_exception_families(int m, int k, const ExactOptions& exact) {
    if (m < 3) throw std::invalid_argument("exception families need m >= 3");
    ExceptionFamilyReport report;
    report.m = m;
    report.k = k;

    const std::vector<std::pair<std::string, Graph>> families = {
        {"star", make_family({FamilyKind::star, m + 1})},
        {"star_plus_edge", make_family({FamilyKind::star_plus_edge, m})},
        {"star_pendant_edge", make_family({FamilyKind::star_pendant_edge, m})},
        {"star_union_p2", make_family({FamilyKind::star_union_p2, m})},
    };

    report.all_c4_free = true;
    report.all_rho_sq_at_least_m_minus_1 = true;
    report.non_star_below_star = true;
    for (const auto& [name, g] : families) {
        FamilyCertificate cert;
        cert.family = name;
        cert.graph6 = to_graph6(g);
        cert.order = g.order();
        cert.size = g.size();
        cert.c4_free = !contains_c4(g);
        cert.rho = adjacency_spectral_radius(g).value;

        auto order_vs = [&](long c) -> Rel {
            if (cert.exact_path) {
                try {
                    return compare_rho_squared_exact(g, mpq_class(c), exact).relation;
                } catch (const CapExceeded&) {
                    cert.exact_path = false;
                }
            }
            const double margin = cert.rho * cert.rho - static_cast<double>(c);
            if (std::abs(margin) < 1e-6) cert.boundary_undecided = true;
            return margin > 0 ? Rel::greater : Rel::less;
        };
        cert.vs_m_minus_1 = order_vs(m - 1);
        cert.vs_m = order_vs(m);
        if (k >= 2) cert.vs_m_minus_k = order_vs(m - k);

        report.all_c4_free = report.all_c4_free && cert.c4_free;
        if (cert.vs_m_minus_1 == Rel::less || cert.boundary_undecided)
            report.all_rho_sq_at_least_m_minus_1 = false;
        if (name != "star" && (cert.vs_m != Rel::less || cert.boundary_undecided))
            report.non_star_below_star = false;
        report.families.push_back(std::move(cert));
    }
    return report;
}

StructuralClaimsReport check_structural_claims(const Graph& g, const SolveOptions& solve) {
    if (!is_connected(g)) throw std::invalid_argument("structural claims need a connected graph");
    StructuralClaimsReport report;
    report.connected = true;
    report.c4_free = !contains_c4(g);

    const SpectralResult adj = adjacency_spectral_radius(g, solve);
    const std::vector<double>& x = *adj.vector;
    int hub = 0;
    for (int u = 1; u < g.order(); ++u)
        if (x[u] > x[hub]) hub = u;
    report.hub = hub;

    const NeighborhoodPartition part = neighborhood_partition(g, hub);
    std::vector<char> in_a(g.order(), 0);
    for (int v : part.a_set) in_a[v] = 1;

    auto d_a = [&](int u) {
        int count = 0;
        for (int v : g.neighbors(u))
            if (in_a[v]) ++count;
        return count;
    };

    for (const auto* side : {&part.b1_set, &part.b2_set}) {
        for (int u : *side) {
            const int d = d_a(u);
            report.max_d_a_over_b = std::max(report.max_d_a_over_b, d);
            if (d >= 2) report.d_a_witnesses.push_back(u);
        }
    }
    for (int a : part.a_set) report.g_a_max_degree = std::max(report.g_a_max_degree, d_a(a));

    report.claim_d_a_ok = !report.c4_free || (report.max_d_a_over_b <= 1 && report.g_a_max_degree <= 1);
    report.contrapositive_ok =
        (report.max_d_a_over_b <= 1 && report.g_a_max_degree <= 1) || !report.c4_free;

    const double rho = adj.value;
    if (rho > 0) {
        double excess = 0.0;
        for (int u : part.b1_set) excess = std::max(excess, x[u] - x[hub] / rho);
        report.claim_b1_max_excess = excess;
        report.claim_b1_ok = !report.c4_free || excess <= 10 * solve.tol;
    } else {
        report.claim_b1_ok = true;
    }

    // rho^2 x_hub expanded over the two-step neighborhoods
    double rhs = static_cast<double>(part.a_set.size()) * x[hub];
    for (int a : part.a_set)
        for (int v : g.neighbors(a))
            if (in_a[v] && a < v) rhs += x[a] + x[v];
    for (const auto* side : {&part.b1_set, &part.b2_set})
        for (int u : *side) rhs += d_a(u) * x[u];
    report.eq_hub_residual = std::abs(rho * rho * x[hub] - rhs);

    report.adjacency_identity_residual = verify_eigen_identities(g, adj, MatrixKind::adjacency);
    const SpectralResult sig = signless_laplacian_spectral_radius(g, solve);
    report.signless_identity_residual = verify_eigen_identities(g, sig, MatrixKind::signless);
    return report;
}

WClaimsReport check_w_claims(const Graph& g, int k, const SolveOptions& solve) {
    if (!is_connected(g)) throw std::invalid_argument("W-set claims need a connected graph");
    if (k < 0) throw std::invalid_argument("k must be >= 0");
    WClaimsReport report;
    report.m = g.size();

    const SpectralResult sig = signless_laplacian_spectral_radius(g, solve);
    report.q = sig.value;
    report.w = w_set(g, sig);
    report.w_size = static_cast<int>(report.w.size());

    const std::vector<double>& x = *sig.vector;
    int hub = 0;
    for (int u = 1; u < g.order(); ++u)
        if (x[u] > x[hub]) hub = u;
    report.hub = hub;
    report.hub_degree = g.degree(hub);
    report.reference_degree = report.m - k - 1;

    VerifyOptions opts;
    opts.solve = solve;
    // Single-graph check: deciding its boundary exactly is the whole point,
    // so allow the charpoly route anywhere canonical labeling works.
    opts.exact.max_vertices = std::max(opts.exact.max_vertices, std::min(g.order(), 64));
    const Decided dec = decide_q(g, report.m - k + 1, report.q, opts);
    report.hypothesis_met = !dec.undecided && dec.rel != Rel::less;
    report.threshold_met = report.m >= theorem_min_size(TheoremId::T1_6, k);
    report.size_one_asserted = report.hypothesis_met && report.threshold_met;
    report.size_one_ok = !report.size_one_asserted || report.w_size == 1;
    return report;
}

ReimanResult reiman_check(const Graph& g) {
    if (contains_c4(g)) return ReimanResult::not_applicable;
    const long n = g.order();
    const long m = g.size();
    const mpz_class lhs = 4 * mpz_class(m) - n;
    if (lhs <= 0) return ReimanResult::pass;
    return lhs * lhs <= mpz_class(n) * n * (4 * mpz_class(n) - 3) ? ReimanResult::pass : ReimanResult::fail;
}

ConjectureReport search_conjecture(int s, int n, const VerifyOptions& opts) {
    const auto start = Clock::now();
    if (s < 1) throw std::invalid_argument("s must be >= 1");
    if (n - s < 2) throw std::invalid_argument("need n - s >= 2");

    ConjectureReport report;
    report.n = n;
    report.s = s;
    report.threshold = (1.0 + std::sqrt(4.0 * (n - s) + 1.0)) / 2.0;
    const IntPoly threshold_poly({mpz_class(-(n - s)), mpz_class(-1), mpz_class(1)});

    const EnumStream stream = EnumStream::by_vertices(n, opts.caps, opts.jobs);
    report.scanned = static_cast<long>(stream.size());

    struct Row {
        double rho = -1.0;  // set for C4-free graphs only
        bool c4_free = false;
        bool star_free = false;
        bool counterexample = false;
    };
    std::vector<Row> rows(stream.size());

    parallel_chunks(stream.size(), opts.jobs, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            const Graph g = stream.graph_at(i);
            Row& row = rows[i];
            row.c4_free = !contains_c4(g);
            row.star_free = max_degree(g) < n - s;
            if (!row.c4_free) continue;
            row.rho = adjacency_spectral_radius(g, opts.solve).value;
            if (row.star_free) {
                const Decided dec = decide_rho_vs_poly(g, threshold_poly, row.rho, report.threshold, opts);
                row.counterexample = !dec.undecided && dec.rel != Rel::less;
            }
        }
    });

    double best_all = -1.0, best_star_free = -1.0;
    for (const Row& row : rows) {
        if (!row.c4_free) continue;
        ++report.c4_free;
        best_all = std::max(best_all, row.rho);
        if (row.star_free) {
            ++report.c4_free_star_free;
            best_star_free = std::max(best_star_free, row.rho);
        }
    }
    report.c4_free_extremal_value = std::max(best_all, 0.0);
    report.extremal_value = std::max(best_star_free, 0.0);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Row& row = rows[i];
        if (!row.c4_free) continue;
        if (row.rho >= best_all - 1e-9) report.c4_free_extremal_witnesses.push_back(stream.key_at(i));
        if (row.star_free && row.rho >= best_star_free - 1e-9)
            report.extremal_witnesses.push_back(stream.key_at(i));
        if (row.counterexample) report.counterexamples.push_back(stream.key_at(i));
    }
    report.elapsed_ms = ms_since(start);
    return report;
}

LocalSearchResult local_search_max_rho(int m, bool forbid_c4, std::optional<int> forbid_star,
                                       const LocalSearchOptions& opts) {
    if (m < 1) throw std::invalid_argument("local search needs m >= 1");
    if (forbid_star && *forbid_star < 1) throw std::invalid_argument("forbidden star size must be >= 1");
    const int n = opts.vertex_budget > 0 ? opts.vertex_budget : m + 1;
    if (static_cast<long>(n) * (n - 1) / 2 < m)
        throw std::invalid_argument("vertex budget too small for the edge count");

    auto is_forbidden = [&](const Graph& g) {
        if (forbid_c4 && contains_c4(g)) return true;
        return forbid_star.has_value() && max_degree(g) >= *forbid_star;
    };

    struct RestartResult {
        bool valid = false;
        double rho = -1.0;
        Graph graph;
        long evaluations = 0;
    };
    std::vector<RestartResult> restarts(std::max(1, opts.restarts));

    parallel_chunks(restarts.size(), opts.jobs, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t r = lo; r < hi; ++r) {
            SplitMix64 rng(opts.seed + 0x9e3779b97f4a7c15ull * (r + 1));
            RestartResult& res = restarts[r];

            Graph cur;
            bool found = false;
            for (int attempt = 0; attempt < 64 && !found; ++attempt) {
                Graph g = random_graph(n, m, rng.next());
                if (!is_forbidden(g)) {
                    cur = std::move(g);
                    found = true;
                }
            }
            if (!found && n >= m + 1) {
                Graph path(n);
                for (int v = 0; v < m; ++v) path.add_edge(v, v + 1);
                if (!is_forbidden(path)) {
                    cur = std::move(path);
                    found = true;
                }
            }
            if (!found) continue;

            double cur_rho = adjacency_spectral_radius(cur, opts.solve).value;
            ++res.evaluations;
            for (long it = 0; it < opts.iters; ++it) {
                Graph cand;
                try {
                    cand = mutate_edge_rotation(cur, rng.next());
                } catch (const std::invalid_argument&) {
                    break;  // no legal rotation from here
                }
                if (is_forbidden(cand)) continue;
                const double cand_rho = adjacency_spectral_radius(cand, opts.solve).value;
                ++res.evaluations;
                if (cand_rho > cur_rho + 1e-12) {
                    cur = std::move(cand);
                    cur_rho = cand_rho;
                }
            }
            res.valid = true;
            res.rho = cur_rho;
            res.graph = std::move(cur);
        }
    });

    LocalSearchResult out;
    std::string best_key;
    for (std::size_t r = 0; r < restarts.size(); ++r) {
        RestartResult& res = restarts[r];
        out.evaluations += res.evaluations;
        if (!res.valid) continue;
        bool better = false;
        if (out.best_restart < 0 || res.rho > out.spectral.value + 1e-12) {
            better = true;
        } else if (std::abs(res.rho - out.spectral.value) <= 1e-12) {
            const std::string key = canonical_form(res.graph).bytes;
            if (key < best_key) better = true;
        }
        if (better) {
            out.best_restart = static_cast<int>(r);
            out.best = res.graph;
            out.spectral.value = res.rho;
            best_key = canonical_form(res.graph).bytes;
        }
    }
    if (out.best_restart < 0)
        throw std::invalid_argument("no feasible start found within the vertex budget");
    out.spectral = adjacency_spectral_radius(out.best, opts.solve);
    return out;
}

}  // namespace turan
