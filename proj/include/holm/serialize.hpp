#pragma once

#include <json.hpp>

#include "holm/curves.hpp"
#include "holm/division_polys.hpp"
#include "holm/torsion.hpp"

namespace holm {

// Structured output. Every exact integer or fraction is a decimal string
// ("num/den", "/den" omitted when 1) so nothing is truncated to 64 bits.

nlohmann::json to_json(const EPoint& p);
nlohmann::json to_json(const HPoint& p);
nlohmann::json to_json(const Poly& p);
nlohmann::json to_json(const CurvePoly& p);
nlohmann::json to_json(const LemmaReport& r);
nlohmann::json to_json(const TorsionCertificate& c);

EPoint epoint_from_json(const nlohmann::json& j);
HPoint hpoint_from_json(const nlohmann::json& j);

}  // namespace holm
