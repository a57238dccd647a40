#include "turan/report.hpp"

#include "turan/exact.hpp"

namespace turan {

using nlohmann::json;

void to_json(json& j, const SpectralResult& r) {
    j = json{{"value", r.value},
             {"residual", r.residual},
             {"iterations", r.iterations},
             {"connected", r.vector.has_value()}};
}

void to_json(json& j, const TheoremReport& r) {
    j = json{{"theorem", theorem_name(r.spec.id)},
             {"m", r.spec.m},
             {"k", r.spec.k},
             {"scanned", r.scanned},
             {"hypothesis_hits", r.hypothesis_hits},
             {"violations", r.violations},
             {"equality_witnesses", r.equality_witnesses},
             {"boundary_undecided", r.boundary_undecided},
             {"below_threshold", r.below_threshold},
             {"timing_ms", r.elapsed_ms}};
}

void to_json(json& j, const FamilyCertificate& r) {
    j = json{{"family", r.family},
             {"graph6", r.graph6},
             {"order", r.order},
             {"size", r.size},
             {"c4_free", r.c4_free},
             {"rho", r.rho},
             {"rho_sq_vs_m_minus_1", rel_name(r.vs_m_minus_1)},
             {"rho_sq_vs_m", rel_name(r.vs_m)},
             {"exact", r.exact_path},
             {"boundary_undecided", r.boundary_undecided}};
    if (r.vs_m_minus_k) j["rho_sq_vs_m_minus_k"] = rel_name(*r.vs_m_minus_k);
}

void to_json(json& j, const ExceptionFamilyReport& r) {
    j = json{{"m", r.m},
             {"k", r.k},
             {"families", r.families},
             {"all_c4_free", r.all_c4_free},
             {"all_rho_sq_at_least_m_minus_1", r.all_rho_sq_at_least_m_minus_1},
             {"non_star_below_star", r.non_star_below_star}};
}

void to_json(json& j, const StructuralClaimsReport& r) {
    j = json{{"connected", r.connected},
             {"c4_free", r.c4_free},
             {"hub", r.hub},
             {"max_d_a_over_b", r.max_d_a_over_b},
             {"g_a_max_degree", r.g_a_max_degree},
             {"d_a_witnesses", r.d_a_witnesses},
             {"claim_d_a_ok", r.claim_d_a_ok},
             {"contrapositive_ok", r.contrapositive_ok},
             {"claim_b1_max_excess", r.claim_b1_max_excess},
             {"claim_b1_ok", r.claim_b1_ok},
             {"eq_hub_residual", r.eq_hub_residual},
             {"adjacency_identity_residual", r.adjacency_identity_residual},
             {"signless_identity_residual", r.signless_identity_residual}};
}

void to_json(json& j, const WClaimsReport& r) {
    j = json{{"q", r.q},
             {"m", r.m},
             {"w", r.w},
             {"w_size", r.w_size},
             {"hypothesis_met", r.hypothesis_met},
             {"threshold_met", r.threshold_met},
             {"size_one_asserted", r.size_one_asserted},
             {"size_one_ok", r.size_one_ok},
             {"hub", r.hub},
             {"hub_degree", r.hub_degree},
             {"reference_degree", r.reference_degree}};
}

void to_json(json& j, const ConjectureReport& r) {
    j = json{{"n", r.n},
             {"s", r.s},
             {"threshold", r.threshold},
             {"scanned", r.scanned},
             {"c4_free", r.c4_free},
             {"c4_free_star_free", r.c4_free_star_free},
             {"extremal_value", r.extremal_value},
             {"extremal_witnesses", r.extremal_witnesses},
             {"c4_free_extremal_value", r.c4_free_extremal_value},
             {"c4_free_extremal_witnesses", r.c4_free_extremal_witnesses},
             {"counterexamples", r.counterexamples},
             {"timing_ms", r.elapsed_ms}};
}

const char* reiman_name(ReimanResult r) {
    switch (r) {
        case ReimanResult::pass: return "pass";
        case ReimanResult::fail: return "fail";
        case ReimanResult::not_applicable: return "not_applicable";
    }
    return "?";
}

}  // namespace turan
