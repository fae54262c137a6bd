#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "toriclink/invariants.hpp"

namespace toriclink {

struct ParsedInput {
    std::string name;
    std::optional<Cone> cone;
    std::optional<Fan> fan;
    bool is_cone() const { return cone.has_value(); }
};

// Schema: {"name": str, "ambient_rank": int, "rays": [[int...]...],
// "max_cones": [[int...]...]}; without max_cones the rays define a single
// cone. Distinct errors name the offending element.
ParsedInput parse_fan_json(const nlohmann::json& j, const std::string& fallback_name);
ParsedInput parse_fan_file(const std::string& path);

nlohmann::json betti_json(const BettiTable& t);
nlohmann::json fan_json(const Fan& f, const std::string& name);
nlohmann::json validation_json(const FanValidation& v);
nlohmann::json report_json(const LinkReport& r);

std::string betti_text(const BettiTable& t);
std::string report_text(const LinkReport& r);

}  // namespace toriclink
