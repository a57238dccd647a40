#include <doctest.h>

#include <cmath>
#include <vector>

#include "turan/enumerate.hpp"
#include "turan/families.hpp"
#include "turan/graph.hpp"
#include "turan/kernels.hpp"

using namespace turan;

namespace {

// All variants compiled into this binary and usable on this machine.
std::vector<const kernels::Ops*> available_variants() {
    std::vector<const kernels::Ops*> out{&kernels::scalar_ops()};
    if (const auto* v = kernels::avx2_ops()) out.push_back(v);
    if (const auto* v = kernels::neon_ops()) out.push_back(v);
    return out;
}

}  // namespace

TEST_CASE("matvec variants agree with the scalar reference") {
    SplitMix64 rng(99);
    const auto variants = available_variants();
    REQUIRE(variants.size() >= 1);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(64));
        std::vector<std::uint64_t> rows(n);
        const std::uint64_t live = n == 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << n) - 1);
        for (auto& r : rows) r = rng.next() & live;
        std::vector<double> diag(n), x(kernels::pad4(n), 0.0);
        for (int i = 0; i < n; ++i) diag[i] = static_cast<double>(rng.below(100));
        for (int i = 0; i < n; ++i) x[i] = static_cast<double>(rng.below(1000)) / 999.0;

        std::vector<double> reference(n, 0.0);
        kernels::scalar_ops().masked_matvec64(rows.data(), diag.data(), n, x.data(), reference.data());
        for (const auto* v : variants) {
            std::vector<double> got(n, -1.0);
            v->masked_matvec64(rows.data(), diag.data(), n, x.data(), got.data());
            for (int i = 0; i < n; ++i) CHECK(std::abs(got[i] - reference[i]) <= 1e-11 * (1.0 + std::abs(reference[i])));
        }
    }
}

TEST_CASE("common-pair variants agree exactly") {
    SplitMix64 rng(123);
    const auto variants = available_variants();
    for (int trial = 0; trial < 600; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(40));
        const int m = static_cast<int>(rng.below(n * (n - 1) / 2 + 1));
        const Graph g = random_graph(n, m, rng.next());
        const bool expected = kernels::scalar_ops().has_common_pair64(g.rows1(), n);
        for (const auto* v : variants) CHECK(v->has_common_pair64(g.rows1(), n) == expected);
        CHECK(expected == contains_c4(g));
    }
}

TEST_CASE("common-pair kernel on named graphs") {
    const Graph c4 = make_family({FamilyKind::cycle, 4});
    CHECK(kernels::active_ops().has_common_pair64(c4.rows1(), 4));
    const Graph star = make_family({FamilyKind::star, 10});
    CHECK(!kernels::active_ops().has_common_pair64(star.rows1(), 10));
    const Graph kse = make_family({FamilyKind::star_plus_edge, 27});
    CHECK(!kernels::active_ops().has_common_pair64(kse.rows1(), 27));
}

TEST_CASE("dispatch reports a usable variant") {
    const auto& ops = kernels::active_ops();
    CHECK(ops.name != nullptr);
    CHECK(ops.masked_matvec64 != nullptr);
    CHECK(ops.has_common_pair64 != nullptr);
}
