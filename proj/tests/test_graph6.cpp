#include <doctest.h>

#include <sstream>

#include "turan/enumerate.hpp"
#include "turan/families.hpp"
#include "turan/graph6.hpp"

using namespace turan;

TEST_CASE("graph6 fixed encodings") {
    CHECK(to_graph6(Graph::from_edges(2, {{0, 1}})) == "A_");
    CHECK(from_graph6("A_") == Graph::from_edges(2, {{0, 1}}));
    CHECK(to_graph6(Graph()) == "?");
    CHECK(to_graph6(Graph(1)) == "@");
    CHECK(from_graph6("?").order() == 0);
}

TEST_CASE("graph6 round-trips across sizes, including the long header") {
    SplitMix64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = static_cast<int>(rng.below(20));
        const int max_m = n * (n - 1) / 2;
        const Graph g = random_graph(n, static_cast<int>(rng.below(max_m + 1)), rng.next());
        CHECK(from_graph6(to_graph6(g)) == g);
    }
    const Graph big = make_family({FamilyKind::star, 100});
    const std::string enc = to_graph6(big);
    CHECK(enc[0] == '~');
    CHECK(from_graph6(enc) == big);
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(from_graph6(""), Graph6ParseError);
    CHECK_THROWS_AS(from_graph6("C"), Graph6ParseError);        // truncated payload
    CHECK_THROWS_AS(from_graph6("A_X"), Graph6ParseError);      // trailing bytes
    CHECK_THROWS_AS(from_graph6("A\x01"), Graph6ParseError);    // byte out of range
    CHECK_THROWS_AS(from_graph6("A~"), Graph6ParseError);       // nonzero padding
    CHECK_THROWS_AS(from_graph6("~~~~~~~"), Graph6ParseError);  // oversized header form
}

TEST_CASE("line reader skips headers and reports the failing line") {
    std::istringstream ok(">>graph6<<\nA_\n\nC~\n");
    const auto graphs = read_graph6_lines(ok);
    CHECK(graphs.size() == 2);
    CHECK(graphs[0].size() == 1);
    CHECK(graphs[1].order() == 4);

    std::istringstream empty("");
    CHECK(read_graph6_lines(empty).empty());

    std::istringstream bad("A_\n\x01garbage\n");
    try {
        read_graph6_lines(bad);
        FAIL("expected Graph6ParseError");
    } catch (const Graph6ParseError& e) {
        CHECK(e.line == 2);
    }
}
