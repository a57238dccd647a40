#pragma once

#include <string_view>

#include "turan/graph.hpp"

namespace turan {

/// Named graph families. The size parameter is the ORDER n for
/// star/path/cycle/friendship kinds and the EDGE COUNT m for the
/// star-exception kinds, matching how each family is usually indexed:
///   star(n)                   K_{1,n-1}, hub 0
///   star_plus_edge(m)         K_{1,m-1}+e: star on m vertices plus edge {1,2}
///   star_pendant_edge(m)      K_{1,m-1}^e: star on m vertices plus pendant
///                             vertex m attached to leaf 1
///   star_union_p2(m)          K_{1,m-1} u P2 (m+2 vertices, m edges)
///   path(n), cycle(n)
///   friendship_odd(n)         F_n, (n-1)/2 triangles through hub 0, n odd
///   friendship_even_variant(n) F'_n = F_{n-1} plus pendant at hub, n even
///   complete_bipartite(a,b)   K_{a,b}, parts {0..a-1} and {a..a+b-1}
enum class FamilyKind {
    star,
    star_plus_edge,
    star_pendant_edge,
    star_union_p2,
    path,
    cycle,
    friendship_odd,
    friendship_even_variant,
    complete_bipartite,
};

struct FamilySpec {
    FamilyKind kind = FamilyKind::star;
    int param = 0;
    int param2 = 0;  // complete_bipartite only
};

/// Throws std::invalid_argument when the parameter is below the family
/// minimum (e.g. friendship_odd needs odd n >= 3). Labelings are
/// deterministic: hub = 0 where one exists, leaves ascending.
Graph make_family(const FamilySpec& spec);

const char* family_name(FamilyKind kind);
FamilyKind family_from_name(std::string_view name);

}  // namespace turan
