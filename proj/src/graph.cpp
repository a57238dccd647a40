#include "turan/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace turan {

namespace {

int words_for(int n) { return n <= 0 ? 0 : (n + 63) / 64; }

}  // namespace

Graph::Graph(int n) : n_(n), words_(words_for(n)), bits_(static_cast<std::size_t>(n) * words_for(n), 0) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
}

void Graph::check_vertex(int u) const {
    if (u < 0 || u >= n_) throw std::invalid_argument("vertex " + std::to_string(u) + " out of range [0," + std::to_string(n_) + ")");
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    return (row(u)[v >> 6] >> (v & 63)) & 1;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loop edge (" + std::to_string(u) + "," + std::to_string(u) + ")");
    std::uint64_t& wu = bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)];
    if ((wu >> (v & 63)) & 1) throw std::invalid_argument("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    wu |= std::uint64_t(1) << (v & 63);
    bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t(1) << (u & 63);
    ++m_;
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (!has_edge(u, v)) throw std::invalid_argument("no such edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] &= ~(std::uint64_t(1) << (v & 63));
    bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] &= ~(std::uint64_t(1) << (u & 63));
    --m_;
}

int Graph::degree(int u) const {
    check_vertex(u);
    const std::uint64_t* r = row(u);
    int d = 0;
    for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
}

std::vector<int> Graph::neighbors(int u) const {
    check_vertex(u);
    std::vector<int> out;
    const std::uint64_t* r = row(u);
    for (int w = 0; w < words_; ++w) {
        std::uint64_t bits = r[w];
        while (bits) {
            out.push_back(w * 64 + std::countr_zero(bits));
            bits &= bits - 1;
        }
    }
    return out;
}

int max_degree(const Graph& g) {
    int best = 0;
    for (int u = 0; u < g.order(); ++u) best = std::max(best, g.degree(u));
    return best;
}

int min_degree(const Graph& g) {
    if (g.order() == 0) return 0;
    int best = g.degree(0);
    for (int u = 1; u < g.order(); ++u) best = std::min(best, g.degree(u));
    return best;
}

bool contains_star(const Graph& g, int t) {
    if (t < 1) throw std::invalid_argument("star size must be >= 1");
    return max_degree(g) >= t;
}

bool contains_c4(const Graph& g) {
    const int n = g.order();
    const int words = g.row_words();
    for (int u = 0; u < n; ++u) {
        const std::uint64_t* ru = g.row(u);
        for (int v = u + 1; v < n; ++v) {
            const std::uint64_t* rv = g.row(v);
            int common = 0;
            for (int w = 0; w < words; ++w) {
                common += std::popcount(ru[w] & rv[w]);
                if (common >= 2) return true;
            }
        }
    }
    return false;
}

std::vector<std::vector<int>> components(const Graph& g) {
    const int n = g.order();
    std::vector<std::vector<int>> out;
    std::vector<char> seen(n, 0);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int v : g.neighbors(u)) {
                if (!seen[v]) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g) {
    if (g.order() <= 1) return true;
    return components(g).size() == 1;
}

bool is_bipartite(const Graph& g) {
    const int n = g.order();
    std::vector<int> color(n, -1);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : g.neighbors(u)) {
                if (color[v] == -1) {
                    color[v] = color[u] ^ 1;
                    stack.push_back(v);
                } else if (color[v] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

Graph remove_isolated_vertices(const Graph& g) {
    std::vector<int> keep;
    for (int u = 0; u < g.order(); ++u)
        if (g.degree(u) > 0) keep.push_back(u);
    return induced_subgraph(g, keep);
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    Graph h(static_cast<int>(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (g.has_edge(vertices[i], vertices[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

Graph apply_permutation(const Graph& g, const std::vector<int>& new_label) {
    if (static_cast<int>(new_label.size()) != g.order()) throw std::invalid_argument("permutation size mismatch");
    Graph h(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v : g.neighbors(u))
            if (u < v) h.add_edge(new_label[u], new_label[v]);
    return h;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph h(a.order() + b.order());
    for (int u = 0; u < a.order(); ++u)
        for (int v : a.neighbors(u))
            if (u < v) h.add_edge(u, v);
    for (int u = 0; u < b.order(); ++u)
        for (int v : b.neighbors(u))
            if (u < v) h.add_edge(a.order() + u, a.order() + v);
    return h;
}

Graph with_edge(const Graph& g, int u, int v) {
    Graph h = g;
    h.add_edge(u, v);
    return h;
}

Graph without_edge(const Graph& g, int u, int v) {
    Graph h = g;
    h.remove_edge(u, v);
    return h;
}

NeighborhoodPartition neighborhood_partition(const Graph& g, int hub) {
    if (hub < 0 || hub >= g.order()) throw std::invalid_argument("hub out of range");
    NeighborhoodPartition p;
    p.hub = hub;
    const int n = g.order();
    std::vector<char> in_a(n, 0), in_b(n, 0);
    for (int v : g.neighbors(hub)) {
        in_a[v] = 1;
        p.a_set.push_back(v);
    }
    std::vector<int> b_all;
    for (int v = 0; v < n; ++v)
        if (v != hub && !in_a[v]) {
            in_b[v] = 1;
            b_all.push_back(v);
        }
    for (int v : b_all) {
        bool touches_b = false;
        for (int w : g.neighbors(v))
            if (in_b[w]) {
                touches_b = true;
                break;
            }
        (touches_b ? p.b2_set : p.b1_set).push_back(v);
    }
    std::vector<char> in_b1(n, 0);
    for (int v : p.b1_set) in_b1[v] = 1;
    for (int u = 0; u < n; ++u) {
        for (int v : g.neighbors(u)) {
            if (v <= u) continue;
            if (in_a[u] && in_a[v]) ++p.e_a;
            else if (in_b[u] && in_b[v]) ++p.e_b;
            else if ((in_a[u] && in_b[v]) || (in_b[u] && in_a[v])) {
                int b_end = in_b[u] ? u : v;
                (in_b1[b_end] ? p.e_a_b1 : p.e_a_b2)++;
            }
        }
    }
    return p;
}

}  // namespace turan
