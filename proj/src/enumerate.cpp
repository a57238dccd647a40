#include "turan/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <mutex>
#include <ostream>
#include <stdexcept>

#include "turan/canonical.hpp"
#include "turan/exact.hpp"
#include "turan/graph6.hpp"
#include "turan/parallel.hpp"

namespace turan {

std::uint64_t SplitMix64::next() {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);  // multiple of bound, > 0
    for (;;) {
        const std::uint64_t v = next();
        if (v < limit) return v % bound;
    }
}

EnumCaps caps_from_env(EnumCaps base) {
    if (const char* env = std::getenv("SPECTRAL_TURAN_CAP")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 1)
            throw std::invalid_argument("SPECTRAL_TURAN_CAP must be a positive integer");
        base.max_edges = static_cast<int>(v);
        base.max_vertices = static_cast<int>(v);
    }
    return base;
}

namespace {

std::uint64_t pack_triangle(const Graph& g) {
    // First upper-triangle bit most significant: integer order matches
    // graph6 byte order for a fixed n.
    std::uint64_t key = 0;
    int bit = 0;
    for (int col = 1; col < g.order(); ++col)
        for (int row = 0; row < col; ++row, ++bit)
            if (g.has_edge(row, col)) key |= std::uint64_t(1) << (62 - bit);
    return key;
}

Graph unpack_triangle(std::uint64_t key, int n) {
    Graph g(n);
    int bit = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row, ++bit)
            if ((key >> (62 - bit)) & 1) g.add_edge(row, col);
    return g;
}

// Merge sorted unique `add` into sorted unique `into`.
template <typename T>
void merge_unique(std::vector<T>& into, std::vector<T>& add) {
    std::sort(add.begin(), add.end());
    add.erase(std::unique(add.begin(), add.end()), add.end());
    std::vector<T> merged;
    merged.reserve(into.size() + add.size());
    std::merge(into.begin(), into.end(), add.begin(), add.end(), std::back_inserter(merged));
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    into = std::move(merged);
}

// One BFS level: apply `expand` to every parent, canonicalize candidates,
// dedup deterministically. Parallel chunks merge under a lock; the final
// sorted-unique set is independent of chunking.
template <typename T, typename Parent, typename Expand, typename KeyOf>
std::vector<T> next_level(const std::vector<Parent>& parents, int jobs, const Expand& expand, const KeyOf& key_of) {
    std::vector<T> level;
    std::mutex mu;
    parallel_chunks(parents.size(), jobs, [&](std::size_t lo, std::size_t hi) {
        std::vector<T> local;
        for (std::size_t i = lo; i < hi; ++i) {
            expand(parents[i], [&](const Graph& child) { local.push_back(key_of(child)); });
        }
        std::lock_guard<std::mutex> lock(mu);
        merge_unique(level, local);
    });
    return level;
}

}  // namespace

EnumStream EnumStream::by_edges(int m, bool no_isolated, const EnumCaps& caps, int jobs) {
    (void)no_isolated;  // representatives never carry isolated vertices
    if (m < 1) throw std::invalid_argument("edge count must be >= 1");
    if (m > caps.max_edges)
        throw CapExceeded("edge enumeration capped at m=" + std::to_string(caps.max_edges) +
                          " (requested " + std::to_string(m) + "); raise --max-edges or SPECTRAL_TURAN_CAP");

    std::vector<std::string> level{canonical_form(Graph::from_edges(2, {{0, 1}})).bytes};
    for (int edges = 2; edges <= m; ++edges) {
        auto expand = [](const std::string& key, const auto& emit) {
            const Graph parent = from_graph6(key);
            const int n = parent.order();
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (!parent.has_edge(u, v)) emit(with_edge(parent, u, v));
            Graph grown(n + 1);
            for (int u = 0; u < n; ++u)
                for (int v : parent.neighbors(u))
                    if (u < v) grown.add_edge(u, v);
            for (int u = 0; u < n; ++u) emit(with_edge(grown, u, n));
            Graph two(n + 2);
            for (int u = 0; u < n; ++u)
                for (int v : parent.neighbors(u))
                    if (u < v) two.add_edge(u, v);
            two.add_edge(n, n + 1);
            emit(two);
        };
        level = next_level<std::string>(level, jobs, expand,
                                        [](const Graph& g) { return canonical_form(g).bytes; });
    }
    EnumStream s;
    s.keys_ = std::move(level);
    return s;
}

EnumStream EnumStream::by_vertices(int n, const EnumCaps& caps, int jobs) {
    if (n < 1) throw std::invalid_argument("vertex count must be >= 1");
    if (n > caps.max_vertices)
        throw CapExceeded("vertex enumeration capped at n=" + std::to_string(caps.max_vertices) +
                          " (requested " + std::to_string(n) + "); raise --max-vertices or SPECTRAL_TURAN_CAP");
    if (n > 11) throw CapExceeded("vertex enumeration supports n <= 11");

    std::vector<std::uint64_t> level{0};  // K_1
    for (int order = 2; order <= n; ++order) {
        auto expand = [order](std::uint64_t key, const auto& emit) {
            const Graph parent = unpack_triangle(key, order - 1);
            Graph base(order);
            for (int u = 0; u < order - 1; ++u)
                for (int v : parent.neighbors(u))
                    if (u < v) base.add_edge(u, v);
            const std::uint64_t subsets = std::uint64_t(1) << (order - 1);
            for (std::uint64_t mask = 0; mask < subsets; ++mask) {
                Graph child = base;
                for (int u = 0; u < order - 1; ++u)
                    if ((mask >> u) & 1) child.add_edge(u, order - 1);
                emit(child);
            }
        };
        level = next_level<std::uint64_t>(level, jobs, expand,
                                          [](const Graph& g) { return pack_triangle(canonical_graph(g)); });
    }
    EnumStream s;
    s.keys_ = Packed{n, std::move(level)};
    return s;
}

EnumStream EnumStream::replay(std::istream& in) {
    std::vector<std::string> keys;
    for (const Graph& g : read_graph6_lines(in)) keys.push_back(to_graph6(g));
    EnumStream s;
    s.keys_ = std::move(keys);
    return s;
}

std::size_t EnumStream::size() const {
    if (const auto* v = std::get_if<std::vector<std::string>>(&keys_)) return v->size();
    return std::get<Packed>(keys_).keys.size();
}

Graph EnumStream::graph_at(std::size_t i) const {
    if (const auto* v = std::get_if<std::vector<std::string>>(&keys_)) return from_graph6((*v)[i]);
    const auto& p = std::get<Packed>(keys_);
    return unpack_triangle(p.keys[i], p.n);
}

std::string EnumStream::key_at(std::size_t i) const {
    if (const auto* v = std::get_if<std::vector<std::string>>(&keys_)) return (*v)[i];
    return to_graph6(graph_at(i));
}

void EnumStream::dump(std::ostream& out) const {
    for (std::size_t i = 0; i < size(); ++i) out << key_at(i) << '\n';
}

std::vector<std::pair<std::size_t, std::size_t>> EnumStream::partition(int parts) const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    if (parts < 1) parts = 1;
    const std::size_t total = size();
    const std::size_t chunk = (total + parts - 1) / std::max<std::size_t>(1, parts);
    for (std::size_t lo = 0; lo < total; lo += chunk) out.emplace_back(lo, std::min(total, lo + chunk));
    return out;
}

Graph random_graph(int n, int m, std::uint64_t seed) {
    if (n < 0 || m < 0) throw std::invalid_argument("negative parameters");
    const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
    if (m > max_edges) throw std::invalid_argument("too many edges for this order");
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(max_edges);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    SplitMix64 rng(seed);
    // Partial Fisher-Yates: the first m slots become the sample.
    for (int i = 0; i < m; ++i) {
        const std::size_t j = i + rng.below(pairs.size() - i);
        std::swap(pairs[i], pairs[j]);
    }
    pairs.resize(m);
    return Graph::from_edges(n, pairs);
}

Graph mutate_edge_rotation(const Graph& g, std::uint64_t seed) {
    const int n = g.order();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u))
            if (u < v) edges.emplace_back(u, v);
    if (edges.empty()) throw std::invalid_argument("rotation needs at least one edge");

    // A move exists iff some edge endpoint has a non-neighbor besides the
    // other endpoint; scan once so impossibility is an error, not a hang.
    bool feasible = false;
    for (const auto& [u, v] : edges) {
        if (g.degree(u) < n - 1 || g.degree(v) < n - 1) {
            feasible = true;
            break;
        }
    }
    if (!feasible) throw std::invalid_argument("no legal edge rotation");

    SplitMix64 rng(seed);
    for (;;) {
        const auto& [a, b] = edges[rng.below(edges.size())];
        const bool move_first = rng.below(2) == 0;
        const int moved = move_first ? a : b;
        const int pivot = move_first ? b : a;
        std::vector<int> targets;
        for (int t = 0; t < n; ++t)
            if (t != pivot && !g.has_edge(pivot, t)) targets.push_back(t);
        if (targets.empty()) continue;
        const int t = targets[rng.below(targets.size())];
        Graph h = without_edge(g, pivot, moved);
        h.add_edge(pivot, t);
        return h;
    }
}

}  // namespace turan
