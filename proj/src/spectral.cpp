#include "turan/spectral.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "turan/kernels.hpp"

namespace turan {

namespace {

struct ComponentSolve {
    double value;
    std::vector<double> vec;  // unit, indexed by component position
    double residual;
    long iterations;
};

// Generic row gather for graphs wider than one word per row.
void matvec_wide(const Graph& g, const std::vector<double>& diag, const std::vector<double>& x, std::vector<double>& y) {
    const int n = g.order();
    const int words = g.row_words();
    for (int i = 0; i < n; ++i) {
        const std::uint64_t* r = g.row(i);
        double acc = 0.0;
        for (int w = 0; w < words; ++w) {
            std::uint64_t bits = r[w];
            while (bits) {
                acc += x[w * 64 + std::countr_zero(bits)];
                bits &= bits - 1;
            }
        }
        y[i] = acc + diag[i] * x[i];
    }
}

ComponentSolve solve_component(const Graph& g, MatrixKind kind, const SolveOptions& opts) {
    const int n = g.order();
    if (n == 1) return {0.0, {1.0}, 0.0, 0};

    const double shift = static_cast<double>(n);
    std::vector<double> diag(n);
    for (int i = 0; i < n; ++i) diag[i] = shift + (kind == MatrixKind::signless ? g.degree(i) : 0.0);

    const bool narrow = g.row_words() == 1;
    const auto& ops = kernels::active_ops();
    const int padded = kernels::pad4(n);
    std::vector<double> x(padded, 0.0), y(padded, 0.0);
    const double inv = 1.0 / std::sqrt(static_cast<double>(n));
    for (int i = 0; i < n; ++i) x[i] = inv;

    auto apply = [&] {
        if (narrow) ops.masked_matvec64(g.rows1(), diag.data(), n, x.data(), y.data());
        else matvec_wide(g, diag, x, y);
    };

    long iter = 0;
    double theta = 0.0, res = 0.0;
    for (;;) {
        apply();
        theta = 0.0;
        for (int i = 0; i < n; ++i) theta += x[i] * y[i];
        res = 0.0;
        for (int i = 0; i < n; ++i) res = std::max(res, std::abs(y[i] - theta * x[i]));
        ++iter;
        if (res <= opts.tol) break;
        if (iter >= opts.max_iterations)
            throw std::runtime_error("power iteration did not reach the residual target (tolerance too tight?)");
        double norm = 0.0;
        for (int i = 0; i < n; ++i) norm += y[i] * y[i];
        norm = std::sqrt(norm);
        for (int i = 0; i < n; ++i) x[i] = y[i] / norm;
    }

    // Iterates stay exactly nonnegative: every entry is a sum of products
    // of nonnegative doubles.
    x.resize(n);
    return {theta - shift, std::move(x), res, iter};
}

}  // namespace

SpectralResult spectral_radius(const Graph& g, MatrixKind kind, const SolveOptions& opts) {
    if (g.order() < 1) throw std::invalid_argument("spectral radius needs at least one vertex");
    if (opts.tol <= 0) throw std::invalid_argument("tolerance must be positive");

    const auto comps = components(g);
    SpectralResult out;
    bool first = true;
    for (const auto& comp : comps) {
        ComponentSolve s = solve_component(induced_subgraph(g, comp), kind, opts);
        out.iterations += s.iterations;
        if (first || s.value > out.value) {
            out.value = s.value;
            out.residual = s.residual;
            if (comps.size() == 1) {
                std::vector<double> full(g.order(), 0.0);
                for (std::size_t i = 0; i < comp.size(); ++i) full[comp[i]] = s.vec[i];
                out.vector = std::move(full);
            }
            first = false;
        }
    }

    if (kind == MatrixKind::adjacency && g.size() > 0) {
        const double lower = 2.0 * g.size() / g.order();
        if (out.value < lower - 1e-8)
            throw std::logic_error("solver value fell below the 2m/n lower bound");
    }
    return out;
}

double verify_eigen_identities(const Graph& g, const SpectralResult& r, MatrixKind kind) {
    if (!r.vector) throw std::invalid_argument("eigen identity check needs a Perron vector (connected input)");
    const auto& x = *r.vector;
    const int n = g.order();
    double worst = 0.0;
    if (kind == MatrixKind::adjacency) {
        for (int u = 0; u < n; ++u) {
            double s = 0.0;
            for (int v : g.neighbors(u)) s += x[v];
            worst = std::max(worst, std::abs(r.value * x[u] - s));
        }
    } else {
        double edge_sum = 0.0;
        for (int u = 0; u < n; ++u) {
            double s = 0.0;
            for (int v : g.neighbors(u)) {
                s += x[v];
                if (u < v) edge_sum += (x[u] + x[v]) * (x[u] + x[v]);
            }
            worst = std::max(worst, std::abs((r.value - g.degree(u)) * x[u] - s));
        }
        worst = std::max(worst, std::abs(r.value - edge_sum));
    }
    return worst;
}

std::vector<int> w_set(const Graph& g, const SpectralResult& r) {
    if (!r.vector) throw std::invalid_argument("W set needs a Perron vector (connected input)");
    const auto& x = *r.vector;
    double xmax = 0.0;
    for (int u = 0; u < g.order(); ++u) xmax = std::max(xmax, x[u]);
    std::vector<int> w;
    for (int u = 0; u < g.order(); ++u)
        if (x[u] >= 0.5 * xmax) w.push_back(u);
    return w;
}

std::optional<double> closed_form_spectral_radius(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::star:
            if (spec.param < 2) throw std::invalid_argument("star needs order >= 2");
            return std::sqrt(static_cast<double>(spec.param - 1));
        case FamilyKind::friendship_odd:
            if (spec.param < 3 || spec.param % 2 == 0) throw std::invalid_argument("friendship graph needs odd order >= 3");
            return (1.0 + std::sqrt(4.0 * (spec.param - 1) + 1.0)) / 2.0;
        default:
            return std::nullopt;
    }
}

}  // namespace turan
