#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "turan/graph.hpp"
#include "turan/polynomial.hpp"

namespace turan {

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Evidence behind an exact comparison: the integer characteristic
/// polynomial plus the Sturm sign-variation counts the decision came from.
struct ExactCertificate {
    std::vector<std::string> charpoly_coeffs;  // decimal, low degree first
    int variations_at_threshold = 0;
    int variations_at_infinity = 0;
    int deflations = 0;  // multiplicity of the threshold as a root
};

struct ExactOrdering {
    Rel relation = Rel::less;
    ExactCertificate certificate;
};

struct ExactOptions {
    int max_vertices = 40;  // charpoly cost grows fast; callers fall back to floats above this
};

/// Exact sign of rho(G)^2 - c from the adjacency characteristic polynomial:
/// compares the largest root against sqrt(c) by Sturm counting on
/// (sqrt(c), inf). Throws CapExceeded past opts.max_vertices.
ExactOrdering compare_rho_squared_exact(const Graph& g, const mpq_class& c, const ExactOptions& opts = {});

/// Same for the signless Laplacian: exact sign of q(G) - c.
ExactOrdering compare_q_exact(const Graph& g, const mpq_class& c, const ExactOptions& opts = {});

/// Exact sign of rho(G) - (largest root of threshold_poly). Used where the
/// comparison point is itself an algebraic number, e.g. rho(K_{1,m-1}+e).
Rel compare_rho_vs_poly_exact(const Graph& g, const IntPoly& threshold_poly, const ExactOptions& opts = {});

const char* rel_name(Rel r);

}  // namespace turan
