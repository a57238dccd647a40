#pragma once

#include <optional>
#include <vector>

#include "turan/families.hpp"
#include "turan/graph.hpp"

namespace turan {

enum class MatrixKind { adjacency, signless };

struct SolveOptions {
    double tol = 1e-10;        // residual target, infinity norm
    long max_iterations = 1'000'000;
};

/// Leading eigenvalue of A(G) or Q(G) = D(G) + A(G). `vector` is the unit
/// Perron vector and is present exactly when the graph is connected; for
/// disconnected graphs the value is the maximum over components. `residual`
/// is ||M x - value x||_inf for the returned pair, so together with the
/// Weyl bound for symmetric matrices it certifies an eigenvalue within
/// ||M x - value x||_2 of `value`.
struct SpectralResult {
    double value = 0.0;
    std::optional<std::vector<double>> vector;
    double residual = 0.0;
    long iterations = 0;
};

/// Shifted power iteration (shift = component order, all-ones start) with
/// Rayleigh value extraction. Throws std::runtime_error if the residual
/// target is not reached within max_iterations, std::invalid_argument for
/// the empty graph. Always checks value >= 2m/n afterwards.
SpectralResult spectral_radius(const Graph& g, MatrixKind kind, const SolveOptions& opts = {});

inline SpectralResult adjacency_spectral_radius(const Graph& g, const SolveOptions& opts = {}) {
    return spectral_radius(g, MatrixKind::adjacency, opts);
}

inline SpectralResult signless_laplacian_spectral_radius(const Graph& g, const SolveOptions& opts = {}) {
    return spectral_radius(g, MatrixKind::signless, opts);
}

/// Largest residual over the per-vertex eigen-equations, plus (signless
/// case) the edge-sum identity q = sum over edges of (x_i + x_j)^2.
/// Throws std::invalid_argument when r carries no vector.
double verify_eigen_identities(const Graph& g, const SpectralResult& r, MatrixKind kind);

/// Vertices whose Perron coordinate is >= half the maximum coordinate.
std::vector<int> w_set(const Graph& g, const SpectralResult& r);

/// sqrt(m) for stars, (1 + sqrt(4(n-1)+1))/2 for odd friendship graphs,
/// nullopt for families without a closed form here.
std::optional<double> closed_form_spectral_radius(const FamilySpec& spec);

}  // namespace turan
