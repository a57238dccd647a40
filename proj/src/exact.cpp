#include "turan/exact.hpp"

namespace turan {

namespace {

void check_cap(const Graph& g, const ExactOptions& opts) {
    if (g.order() > opts.max_vertices)
        throw CapExceeded("exact path capped at " + std::to_string(opts.max_vertices) +
                          " vertices (graph has " + std::to_string(g.order()) + ")");
    if (g.order() < 1) throw std::invalid_argument("exact comparison needs at least one vertex");
}

ExactOrdering decide(const IntPoly& p, const RootThreshold& t) {
    ExactOrdering out;
    out.relation = compare_largest_root(p, t, &out.certificate.deflations,
                                        &out.certificate.variations_at_threshold,
                                        &out.certificate.variations_at_infinity);
    out.certificate.charpoly_coeffs.reserve(p.c.size());
    for (const auto& ci : p.c) out.certificate.charpoly_coeffs.push_back(ci.get_str());
    return out;
}

}  // namespace

ExactOrdering compare_rho_squared_exact(const Graph& g, const mpq_class& c, const ExactOptions& opts) {
    check_cap(g, opts);
    if (c < 0) {
        // rho >= 0 > sqrt of nothing; any nonneg spectral radius wins.
        ExactOrdering out;
        out.relation = Rel::greater;
        return out;
    }
    return decide(adjacency_charpoly(g), RootThreshold::sqrt_of(c));
}

ExactOrdering compare_q_exact(const Graph& g, const mpq_class& c, const ExactOptions& opts) {
    check_cap(g, opts);
    return decide(signless_charpoly(g), RootThreshold::rational(c));
}

Rel compare_rho_vs_poly_exact(const Graph& g, const IntPoly& threshold_poly, const ExactOptions& opts) {
    check_cap(g, opts);
    return compare_largest_roots(adjacency_charpoly(g), threshold_poly);
}

const char* rel_name(Rel r) {
    switch (r) {
        case Rel::less: return "less";
        case Rel::equal: return "equal";
        case Rel::greater: return "greater";
    }
    return "?";
}

}  // namespace turan
