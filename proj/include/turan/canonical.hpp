#pragma once

#include <compare>
#include <string>

#include "turan/graph.hpp"

namespace turan {

/// Canonical encoding of an isomorphism class: the graph6 string of the
/// canonically relabeled graph. Equal exactly for isomorphic graphs.
struct CanonicalForm {
    std::string bytes;
    auto operator<=>(const CanonicalForm&) const = default;
};

/// Canonical labeling for n <= 64: per component, equitable degree
/// refinement with individualization backtracking picks the labeling whose
/// adjacency rows are lexicographically smallest; components are then
/// ordered by (order, encoding). Idempotent and relabeling-invariant.
CanonicalForm canonical_form(const Graph& g);

Graph canonical_graph(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace turan
