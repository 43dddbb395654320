#pragma once

// JSON payloads shared by the subcommands and the claim driver.

#include "k3br/brauer/evaluation.hpp"
#include "k3br/brauer/residue.hpp"
#include "k3br/family/family.hpp"
#include "k3br/geometry/enumeration.hpp"

#include <json.hpp>

namespace k3br::cli {

nlohmann::json to_json(const EvalRecord& r);
nlohmann::json to_json(const ResidueResult& r);
nlohmann::json to_json(const FamilyReport& r);
nlohmann::json to_json(const SmoothnessReport& r);
nlohmann::json to_json(const EvalTable& t);

}  // namespace k3br::cli
