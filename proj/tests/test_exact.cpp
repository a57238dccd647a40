#include <doctest.h>

#include <cmath>
#include <vector>

#include "turan/enumerate.hpp"
#include "turan/exact.hpp"
#include "turan/families.hpp"
#include "turan/polynomial.hpp"
#include "turan/spectral.hpp"

using namespace turan;

namespace {

// Independent determinant of (tI - A) at an integer point, by fraction-free
// elimination over rationals. Cross-checks the Berkowitz route.
mpq_class det_shifted(const Graph& g, long t, bool signless) {
    const int n = g.order();
    std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n, 0));
    for (int i = 0; i < n; ++i) {
        m[i][i] = t;
        if (signless) m[i][i] -= g.degree(i);
    }
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) m[u][v] -= 1;
    mpq_class det = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (int r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            const mpq_class f = m[r][col] / m[col][col];
            for (int c2 = col; c2 < n; ++c2) m[r][c2] -= f * m[col][c2];
        }
    }
    return det;
}

IntPoly poly_from(std::vector<long> coeffs) {
    std::vector<mpz_class> c(coeffs.begin(), coeffs.end());
    return IntPoly(std::move(c));
}

}  // namespace

TEST_CASE("characteristic polynomials of small graphs") {
    CHECK(adjacency_charpoly(Graph::from_edges(2, {{0, 1}})).c == poly_from({-1, 0, 1}).c);
    CHECK(adjacency_charpoly(make_family({FamilyKind::cycle, 3})).c == poly_from({-2, -3, 0, 1}).c);
    CHECK(adjacency_charpoly(make_family({FamilyKind::cycle, 4})).c == poly_from({0, 0, -4, 0, 1}).c);
    CHECK(adjacency_charpoly(make_family({FamilyKind::star, 4})).c == poly_from({0, 0, -3, 0, 1}).c);
    // Q(P3) has eigenvalues 0, 1, 3
    CHECK(signless_charpoly(make_family({FamilyKind::path, 3})).c == poly_from({0, 3, -4, 1}).c);
}

TEST_CASE("charpoly agrees with an independent determinant") {
    SplitMix64 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(8));
        const Graph g = random_graph(n, static_cast<int>(rng.below(n * (n - 1) / 2 + 1)), rng.next());
        for (bool signless : {false, true}) {
            const IntPoly p = signless ? signless_charpoly(g) : adjacency_charpoly(g);
            CHECK(p.degree() == n);
            for (long t : {-3L, -1L, 0L, 2L, 5L}) {
                CHECK(eval(p, mpq_class(t)) == det_shifted(g, t, signless));
            }
        }
    }
}

TEST_CASE("sign evaluation at sqrt thresholds") {
    // x^2 - 2 at sqrt(2) is exactly zero, at sqrt(3) positive, sqrt(1) negative
    const IntPoly p = poly_from({-2, 0, 1});
    CHECK(sign_at(p, RootThreshold::sqrt_of(2)) == 0);
    CHECK(sign_at(p, RootThreshold::sqrt_of(3)) == 1);
    CHECK(sign_at(p, RootThreshold::sqrt_of(1)) == -1);
    // odd part matters: x^3 - 2x = x(x^2 - 2)
    const IntPoly q = poly_from({0, -2, 0, 1});
    CHECK(sign_at(q, RootThreshold::sqrt_of(2)) == 0);
    CHECK(sign_at(q, RootThreshold::sqrt_of(5)) == 1);
    CHECK(sign_at(q, RootThreshold::sqrt_of(mpq_class(1, 4))) == -1);
}

TEST_CASE("largest-root comparisons against rational and sqrt thresholds") {
    const Graph star9 = make_family({FamilyKind::star, 10});
    CHECK(compare_rho_squared_exact(star9, 9).relation == Rel::equal);
    CHECK(compare_rho_squared_exact(star9, 8).relation == Rel::greater);
    CHECK(compare_rho_squared_exact(star9, 10).relation == Rel::less);

    const Graph c4 = make_family({FamilyKind::cycle, 4});
    CHECK(compare_rho_squared_exact(c4, 4).relation == Rel::equal);

    const Graph k126e = make_family({FamilyKind::star_plus_edge, 27});
    CHECK(compare_rho_squared_exact(k126e, 27).relation == Rel::less);
    CHECK(compare_rho_squared_exact(k126e, 26).relation == Rel::greater);

    const Graph k14 = make_family({FamilyKind::star, 5});
    CHECK(compare_q_exact(k14, 5).relation == Rel::equal);
    CHECK(compare_q_exact(k14, 6).relation == Rel::less);
    CHECK(compare_q_exact(k14, mpq_class(9, 2)).relation == Rel::greater);
}

TEST_CASE("certificate carries the charpoly and the variation counts") {
    const ExactOrdering ord = compare_rho_squared_exact(make_family({FamilyKind::star, 10}), 9);
    CHECK(ord.certificate.charpoly_coeffs.size() == 11);
    CHECK(ord.certificate.deflations >= 1);
}

TEST_CASE("the K_{1,m-1}+e cubic factor pins its spectral radius") {
    // x^3 - x^2 - (m-1)x + (m-3) carries rho(K_{1,m-1}+e); check against the
    // solver and use it for exact largest-root comparisons.
    for (int m : {4, 9, 27}) {
        const IntPoly cubic = poly_from({m - 3, -(m - 1), -1, 1});
        const double by_root = largest_root(cubic, 1e-12);
        const double by_solver = adjacency_spectral_radius(make_family({FamilyKind::star_plus_edge, m})).value;
        CHECK(std::abs(by_root - by_solver) <= 1e-9);
        CHECK(compare_rho_vs_poly_exact(make_family({FamilyKind::star_plus_edge, m}), cubic) == Rel::equal);
        CHECK(compare_rho_vs_poly_exact(make_family({FamilyKind::star_union_p2, m}), cubic) == Rel::less);
    }
    // rho(K_{1,m}) vs rho(K_{1,m-1}+e) crosses at m = 9, where both equal 3
    CHECK(compare_rho_vs_poly_exact(make_family({FamilyKind::star, 5}), poly_from({1, -3, -1, 1})) == Rel::less);
    CHECK(compare_rho_vs_poly_exact(make_family({FamilyKind::star, 10}), poly_from({6, -8, -1, 1})) == Rel::equal);
    CHECK(compare_rho_vs_poly_exact(make_family({FamilyKind::star, 28}), poly_from({24, -26, -1, 1})) == Rel::greater);
}

TEST_CASE("friendship graph sits exactly on the conjecture threshold polynomial") {
    const Graph f5 = make_family({FamilyKind::friendship_odd, 5});
    const IntPoly threshold = poly_from({-4, -1, 1});  // x^2 - x - 4
    CHECK(compare_rho_vs_poly_exact(f5, threshold) == Rel::equal);
    const Graph c5 = make_family({FamilyKind::cycle, 5});
    CHECK(compare_rho_vs_poly_exact(c5, threshold) == Rel::less);
}

TEST_CASE("largest_root matches closed forms") {
    CHECK(std::abs(largest_root(adjacency_charpoly(make_family({FamilyKind::star, 26}))) - 5.0) <= 1e-11);
    const double f9 = largest_root(adjacency_charpoly(make_family({FamilyKind::friendship_odd, 9})));
    CHECK(std::abs(f9 - (1.0 + std::sqrt(33.0)) / 2.0) <= 1e-11);
}

TEST_CASE("exact path cap") {
    const Graph g = make_family({FamilyKind::star, 7});
    ExactOptions tight;
    tight.max_vertices = 5;
    CHECK_THROWS_AS(compare_rho_squared_exact(g, 6, tight), CapExceeded);
    CHECK(compare_rho_squared_exact(g, 6).relation == Rel::equal);
}

TEST_CASE("exact ordering agrees with the floating solver away from boundaries") {
    SplitMix64 rng(59);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(8));
        const int m = 1 + static_cast<int>(rng.below(n * (n - 1) / 2));
        const Graph g = random_graph(n, m, rng.next());
        const double rho = adjacency_spectral_radius(g).value;
        for (long c : {m - 2, m - 1, m}) {
            if (c < 0) continue;
            const double margin = rho * rho - static_cast<double>(c);
            if (std::abs(margin) <= 1e-6) continue;
            const Rel rel = compare_rho_squared_exact(g, c).relation;
            CHECK(rel == (margin > 0 ? Rel::greater : Rel::less));
        }
    }
}
