#pragma once

#include <json.hpp>

#include "turan/spectral.hpp"
#include "turan/verify.hpp"

namespace turan {

/// JSON shapes for every report the CLI writes. Key order is alphabetical
/// (nlohmann objects), so identical runs serialize byte-identically.
void to_json(nlohmann::json& j, const SpectralResult& r);
void to_json(nlohmann::json& j, const TheoremReport& r);
void to_json(nlohmann::json& j, const FamilyCertificate& r);
void to_json(nlohmann::json& j, const ExceptionFamilyReport& r);
void to_json(nlohmann::json& j, const StructuralClaimsReport& r);
void to_json(nlohmann::json& j, const WClaimsReport& r);
void to_json(nlohmann::json& j, const ConjectureReport& r);

const char* reiman_name(ReimanResult r);

}  // namespace turan
