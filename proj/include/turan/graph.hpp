#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace turan {

/// Simple undirected graph on vertices 0..n-1, adjacency kept as n rows of
/// packed bits (one or more 64-bit words per row). The edge count is cached.
/// Values are cheap to copy; library operations treat graphs as immutable and
/// return new values, so shared instances are safe to read from any thread.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    /// Builds a graph with exactly the given edges. Throws
    /// std::invalid_argument on loops, duplicate edges, or endpoints >= n.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    int size() const { return m_; }
    int row_words() const { return words_; }

    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    const std::uint64_t* row(int u) const { return bits_.data() + static_cast<std::size_t>(u) * words_; }
    /// First word of a row; the whole row when row_words() == 1.
    std::uint64_t row_word(int u) const { return bits_[static_cast<std::size_t>(u) * words_]; }
    /// Rows are contiguous with stride 1 exactly when row_words() == 1.
    const std::uint64_t* rows1() const { return bits_.data(); }

    int degree(int u) const;
    std::vector<int> neighbors(int u) const;

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int u) const;

    int n_ = 0;
    int m_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

int max_degree(const Graph& g);
int min_degree(const Graph& g);

/// K_{1,t} subgraph test: some vertex has degree >= t. Requires t >= 1.
bool contains_star(const Graph& g, int t);

/// C4 subgraph test: true iff two distinct vertices share >= 2 common
/// neighbors. Doubles as the d_A(u) <= 1 structural check's contrapositive.
bool contains_c4(const Graph& g);

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);

std::vector<std::vector<int>> components(const Graph& g);

/// Graph induced on vertices of degree >= 1, labels compacted in order.
Graph remove_isolated_vertices(const Graph& g);

/// Subgraph induced on `vertices`, relabeled 0..k-1 in the given order.
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

/// Relabels: vertex u becomes new_label[u].
Graph apply_permutation(const Graph& g, const std::vector<int>& new_label);

Graph disjoint_union(const Graph& a, const Graph& b);

Graph with_edge(const Graph& g, int u, int v);
Graph without_edge(const Graph& g, int u, int v);

/// Decomposition of V into {hub} + A + B1 + B2 where A = N(hub),
/// B = V \ N[hub], B1 = vertices of B with no neighbor inside B.
/// Satisfies e_a + e_b + e_a_b1 + e_a_b2 + |A| = m.
struct NeighborhoodPartition {
    int hub = 0;
    std::vector<int> a_set;
    std::vector<int> b1_set;
    std::vector<int> b2_set;
    long e_a = 0;
    long e_b = 0;
    long e_a_b1 = 0;
    long e_a_b2 = 0;
};

NeighborhoodPartition neighborhood_partition(const Graph& g, int hub);

}  // namespace turan
