#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

struct EnumCaps {
    int max_edges = 12;
    int max_vertices = 10;
};

/// SPECTRAL_TURAN_CAP, when set, overrides both caps.
EnumCaps caps_from_env(EnumCaps base = {});

/// A materialized isomorph-free sequence of graphs: every class exactly
/// once, in ascending canonical-graph6 order, so emission is byte-stable
/// across runs and job counts. Indices double as a resumable cursor, and
/// partition() hands out independently scannable index ranges.
class EnumStream {
public:
    /// Every class with exactly m edges. Classes are represented without
    /// isolated vertices; the universe of classes *with* isolates is
    /// unbounded, so no_isolated=false emits the same representatives.
    static EnumStream by_edges(int m, bool no_isolated = true, const EnumCaps& caps = {}, int jobs = 1);

    /// Every class on exactly n vertices, isolated vertices included.
    static EnumStream by_vertices(int n, const EnumCaps& caps = {}, int jobs = 1);

    /// Replays a graph6 line file in file order (no dedup, no reorder).
    static EnumStream replay(std::istream& in);

    std::size_t size() const;
    Graph graph_at(std::size_t i) const;
    std::string key_at(std::size_t i) const;

    struct Cursor {
        std::size_t index = 0;
    };

    void dump(std::ostream& out) const;
    std::vector<std::pair<std::size_t, std::size_t>> partition(int parts) const;

private:
    struct Packed {
        int n = 0;
        std::vector<std::uint64_t> keys;  // upper-triangle bits, first bit most significant
    };

    std::variant<std::vector<std::string>, Packed> keys_;
};

/// Uniform m-edge graph on n labeled vertices; identical for equal seeds on
/// every platform. Throws for infeasible (n, m).
Graph random_graph(int n, int m, std::uint64_t seed);

/// Moves one endpoint of a uniformly chosen edge to a uniformly chosen
/// non-neighbor of the other endpoint, preserving size and simplicity.
/// Throws std::invalid_argument when the graph admits no legal rotation.
Graph mutate_edge_rotation(const Graph& g, std::uint64_t seed);

/// splitmix64; the deterministic seed stream behind every randomized path.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next();
    /// Uniform value in [0, bound) by rejection; bound > 0.
    std::uint64_t below(std::uint64_t bound);
};

}  // namespace turan
