#include "turan/families.hpp"

#include <stdexcept>
#include <string>

namespace turan {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

Graph star(int n) {
    require(n >= 2, "star needs order >= 2");
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(0, v);
    return g;
}

Graph path(int n) {
    require(n >= 1, "path needs order >= 1");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph friendship(int n) {
    require(n >= 3 && n % 2 == 1, "friendship graph needs odd order >= 3");
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(0, v);
    for (int i = 1; i < n; i += 2) g.add_edge(i, i + 1);
    return g;
}

}  // namespace

Graph make_family(const FamilySpec& spec) {
    const int p = spec.param;
    switch (spec.kind) {
        case FamilyKind::star:
            return star(p);
        case FamilyKind::star_plus_edge: {
            require(p >= 3, "star_plus_edge needs size >= 3");
            Graph g = star(p);  // K_{1,p-1} on p vertices, p-1 edges
            g.add_edge(1, 2);
            return g;
        }
        case FamilyKind::star_pendant_edge: {
            require(p >= 2, "star_pendant_edge needs size >= 2");
            Graph g(p + 1);
            for (int v = 1; v < p; ++v) g.add_edge(0, v);
            g.add_edge(1, p);
            return g;
        }
        case FamilyKind::star_union_p2: {
            require(p >= 2, "star_union_p2 needs size >= 2");
            Graph g(p + 2);
            for (int v = 1; v < p; ++v) g.add_edge(0, v);
            g.add_edge(p, p + 1);
            return g;
        }
        case FamilyKind::path:
            return path(p);
        case FamilyKind::cycle: {
            require(p >= 3, "cycle needs order >= 3");
            Graph g = path(p);
            g.add_edge(p - 1, 0);
            return g;
        }
        case FamilyKind::friendship_odd:
            return friendship(p);
        case FamilyKind::friendship_even_variant: {
            require(p >= 4 && p % 2 == 0, "friendship variant needs even order >= 4");
            Graph g(p);
            for (int v = 1; v < p; ++v) g.add_edge(0, v);
            for (int i = 1; i + 1 < p - 1; i += 2) g.add_edge(i, i + 1);
            return g;
        }
        case FamilyKind::complete_bipartite: {
            require(spec.param >= 1 && spec.param2 >= 1, "complete_bipartite needs both parts >= 1");
            Graph g(spec.param + spec.param2);
            for (int u = 0; u < spec.param; ++u)
                for (int v = 0; v < spec.param2; ++v) g.add_edge(u, spec.param + v);
            return g;
        }
    }
    throw std::invalid_argument("unknown family kind");
}

const char* family_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::star: return "star";
        case FamilyKind::star_plus_edge: return "star_plus_edge";
        case FamilyKind::star_pendant_edge: return "star_pendant_edge";
        case FamilyKind::star_union_p2: return "star_union_p2";
        case FamilyKind::path: return "path";
        case FamilyKind::cycle: return "cycle";
        case FamilyKind::friendship_odd: return "friendship_odd";
        case FamilyKind::friendship_even_variant: return "friendship_even_variant";
        case FamilyKind::complete_bipartite: return "complete_bipartite";
    }
    return "?";
}

FamilyKind family_from_name(std::string_view name) {
    for (FamilyKind k : {FamilyKind::star, FamilyKind::star_plus_edge, FamilyKind::star_pendant_edge,
                         FamilyKind::star_union_p2, FamilyKind::path, FamilyKind::cycle,
                         FamilyKind::friendship_odd, FamilyKind::friendship_even_variant,
                         FamilyKind::complete_bipartite}) {
        if (name == family_name(k)) return k;
    }
    throw std::invalid_argument("unknown family: " + std::string(name));
}

}  // namespace turan
