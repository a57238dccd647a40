#pragma once

#include <cstdint>

#include "turan/graph.hpp"

// Brute-force reference implementations the library must agree with. These
// stay deliberately independent of the library's canonical labeling and
// solver paths: permutation search and exhaustive labeled generation only.
namespace turan::oracle {

/// Isomorphism by searching all n! vertex maps. n <= 8.
bool isomorphic_brute(const Graph& a, const Graph& b);

/// Number of isomorphism classes on exactly n vertices: all 2^C(n,2)
/// labeled graphs, deduplicated by the minimum relabeled bitmask. n <= 6.
long count_classes_on_vertices(int n);

/// Number of isomorphism classes with exactly m edges and no isolated
/// vertices: labeled m-edge graphs over every feasible support size up to
/// 2m, deduplicated by sorted per-component minimum-permutation codes.
/// m <= 6.
long count_classes_with_edges(int m);

}  // namespace turan::oracle
