#include <doctest.h>

#include <set>
#include <sstream>

#include "oracles.hpp"
#include "turan/canonical.hpp"
#include "turan/enumerate.hpp"
#include "turan/exact.hpp"
#include "turan/families.hpp"
#include "turan/graph6.hpp"

using namespace turan;

TEST_CASE("by-edges counts at small size") {
    CHECK(EnumStream::by_edges(1).size() == 1);
    CHECK(EnumStream::by_edges(2).size() == 2);
    CHECK(EnumStream::by_edges(3).size() == 5);

    // the five 3-edge classes by name
    const EnumStream s = EnumStream::by_edges(3);
    std::set<std::string> got;
    for (std::size_t i = 0; i < s.size(); ++i) got.insert(s.key_at(i));
    std::set<std::string> expected;
    expected.insert(canonical_form(make_family({FamilyKind::cycle, 3})).bytes);
    expected.insert(canonical_form(make_family({FamilyKind::path, 4})).bytes);
    expected.insert(canonical_form(make_family({FamilyKind::star, 4})).bytes);
    expected.insert(canonical_form(disjoint_union(make_family({FamilyKind::path, 3}), make_family({FamilyKind::path, 2}))).bytes);
    Graph m3(6);
    m3.add_edge(0, 1);
    m3.add_edge(2, 3);
    m3.add_edge(4, 5);
    expected.insert(canonical_form(m3).bytes);
    CHECK(got == expected);
}

TEST_CASE("by-edges counts match the labeled brute-force oracle") {
    for (int m = 1; m <= 5; ++m) {
        CHECK(static_cast<long>(EnumStream::by_edges(m).size()) == oracle::count_classes_with_edges(m));
    }
}

TEST_CASE("by-vertices counts match the labeled brute-force oracle") {
    CHECK(EnumStream::by_vertices(1).size() == 1);
    CHECK(EnumStream::by_vertices(3).size() == 4);
    CHECK(EnumStream::by_vertices(4).size() == 11);
    for (int n = 1; n <= 6; ++n) {
        CHECK(static_cast<long>(EnumStream::by_vertices(n).size()) == oracle::count_classes_on_vertices(n));
    }
}

TEST_CASE("emitted graphs are canonical, unique, isolate-free (by edges)") {
    const EnumStream s = EnumStream::by_edges(6);
    std::set<std::string> seen;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const Graph g = s.graph_at(i);
        CHECK(g.size() == 6);
        CHECK(min_degree(g) >= 1);
        CHECK(canonical_form(g).bytes == s.key_at(i));
        CHECK(seen.insert(s.key_at(i)).second);
    }
}

TEST_CASE("emission order is stable across runs and job counts") {
    const EnumStream a = EnumStream::by_edges(6, true, {}, 1);
    const EnumStream b = EnumStream::by_edges(6, true, {}, 4);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a.key_at(i) == b.key_at(i));

    const EnumStream c = EnumStream::by_vertices(6, {}, 1);
    const EnumStream d = EnumStream::by_vertices(6, {}, 4);
    REQUIRE(c.size() == d.size());
    for (std::size_t i = 0; i < c.size(); ++i) CHECK(c.key_at(i) == d.key_at(i));
}

TEST_CASE("caps are enforced and overridable") {
    CHECK_THROWS_AS(EnumStream::by_edges(13), CapExceeded);
    CHECK_THROWS_AS(EnumStream::by_vertices(11), CapExceeded);
    EnumCaps wide;
    wide.max_edges = 13;
    CHECK_THROWS_AS(EnumStream::by_edges(14, true, wide), CapExceeded);
    CHECK_THROWS_AS(EnumStream::by_edges(0), std::invalid_argument);
}

TEST_CASE("dump and replay round-trip") {
    const EnumStream s = EnumStream::by_edges(4);
    std::ostringstream out;
    s.dump(out);
    std::istringstream in(out.str());
    const EnumStream r = EnumStream::replay(in);
    REQUIRE(r.size() == s.size());
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(r.key_at(i) == s.key_at(i));
}

TEST_CASE("partition covers the stream in order") {
    const EnumStream s = EnumStream::by_edges(5);
    const auto parts = s.partition(4);
    std::size_t expect = 0;
    for (const auto& [lo, hi] : parts) {
        CHECK(lo == expect);
        CHECK(hi > lo);
        expect = hi;
    }
    CHECK(expect == s.size());
}

TEST_CASE("random graphs are deterministic and well-formed") {
    const Graph a = random_graph(9, 12, 42);
    const Graph b = random_graph(9, 12, 42);
    CHECK(a == b);
    CHECK(a.size() == 12);
    CHECK(random_graph(9, 12, 43) != a);
    CHECK_THROWS_AS(random_graph(4, 7, 1), std::invalid_argument);
    CHECK(random_graph(5, 0, 1).size() == 0);
}

TEST_CASE("edge rotation preserves size and simplicity") {
    SplitMix64 rng(71);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 3 + static_cast<int>(rng.below(10));
        const int m = 1 + static_cast<int>(rng.below(n * (n - 1) / 2));
        const Graph g = random_graph(n, m, rng.next());
        if (min_degree(g) == n - 1) continue;  // complete graph: no move
        const std::uint64_t seed = rng.next();
        const Graph h = mutate_edge_rotation(g, seed);
        CHECK(h.size() == g.size());
        CHECK(h != g);
        CHECK(mutate_edge_rotation(g, seed) == h);
    }
}

TEST_CASE("rotation on P2 has no legal move") {
    CHECK_THROWS_AS(mutate_edge_rotation(Graph::from_edges(2, {{0, 1}}), 7), std::invalid_argument);
    CHECK_THROWS_AS(mutate_edge_rotation(make_family({FamilyKind::cycle, 3}), 7), std::invalid_argument);
}
