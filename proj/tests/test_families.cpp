#include <doctest.h>

#include <stdexcept>

#include "turan/canonical.hpp"
#include "turan/families.hpp"
#include "turan/graph.hpp"

using namespace turan;

TEST_CASE("star family") {
    const Graph k13 = make_family({FamilyKind::star, 4});
    CHECK(k13.order() == 4);
    CHECK(k13.size() == 3);
    CHECK(max_degree(k13) == 3);
    CHECK(k13.degree(0) == 3);

    // m = n-1 and hub degree n-1, for a range of orders
    for (int n : {2, 5, 17, 40}) {
        const Graph s = make_family({FamilyKind::star, n});
        CHECK(s.size() == n - 1);
        CHECK(max_degree(s) == n - 1);
    }
    CHECK_THROWS_AS(make_family({FamilyKind::star, 1}), std::invalid_argument);
}

TEST_CASE("star plus edge: size m, order m, one triangle, no C4") {
    const Graph g = make_family({FamilyKind::star_plus_edge, 5});
    CHECK(g.order() == 5);
    CHECK(g.size() == 5);
    CHECK(g.has_edge(1, 2));
    CHECK(!contains_c4(g));
    CHECK(!is_bipartite(g));  // the inserted edge closes a triangle
    CHECK_THROWS_AS(make_family({FamilyKind::star_plus_edge, 2}), std::invalid_argument);

    // m=3 degenerates to the triangle
    CHECK(isomorphic(make_family({FamilyKind::star_plus_edge, 3}), make_family({FamilyKind::cycle, 3})));
}

TEST_CASE("star with pendant edge: size m, order m+1") {
    const Graph g = make_family({FamilyKind::star_pendant_edge, 27});
    CHECK(g.order() == 28);
    CHECK(g.size() == 27);
    CHECK(max_degree(g) == 26);
    CHECK(g.degree(27) == 1);
    CHECK(g.has_edge(1, 27));
    CHECK(!contains_c4(g));

    CHECK(isomorphic(make_family({FamilyKind::star_pendant_edge, 2}), make_family({FamilyKind::path, 3})));
}

TEST_CASE("star union P2 has exactly m edges") {
    for (int m : {2, 5, 30}) {
        const Graph g = make_family({FamilyKind::star_union_p2, m});
        CHECK(g.size() == m);
        CHECK(g.order() == m + 2);
        CHECK(!is_connected(g));
    }
}

TEST_CASE("friendship graphs") {
    const Graph f5 = make_family({FamilyKind::friendship_odd, 5});
    CHECK(f5.order() == 5);
    CHECK(f5.size() == 6);
    CHECK(max_degree(f5) == 4);
    CHECK(f5.has_edge(1, 2));
    CHECK(f5.has_edge(3, 4));
    CHECK(!contains_c4(f5));
    CHECK_THROWS_AS(make_family({FamilyKind::friendship_odd, 6}), std::invalid_argument);
    CHECK(isomorphic(make_family({FamilyKind::friendship_odd, 3}), make_family({FamilyKind::cycle, 3})));

    const Graph f6 = make_family({FamilyKind::friendship_even_variant, 6});
    CHECK(f6.order() == 6);
    CHECK(f6.size() == 7);
    CHECK(f6.degree(0) == 5);
    CHECK(f6.degree(5) == 1);
    CHECK(!contains_c4(f6));
    CHECK_THROWS_AS(make_family({FamilyKind::friendship_even_variant, 5}), std::invalid_argument);
}

TEST_CASE("complete bipartite and name lookup") {
    const Graph k23 = make_family({FamilyKind::complete_bipartite, 2, 3});
    CHECK(k23.order() == 5);
    CHECK(k23.size() == 6);
    CHECK(is_bipartite(k23));

    CHECK(family_from_name("friendship_odd") == FamilyKind::friendship_odd);
    CHECK_THROWS_AS(family_from_name("nope"), std::invalid_argument);
}
