#pragma once

// JSON (schema "v1") and text renderings of verdicts and majorization
// reports. Rationals are always "num/den" strings in JSON.

#include <json.hpp>
#include <string>

#include "sds/ksds.hpp"
#include "sds/majorder.hpp"

namespace sds {

inline constexpr const char* kSchemaVersion = "v1";

nlohmann::json to_json(const MajorizationReport& report);
nlohmann::json to_json(const SearchStats& stats);
nlohmann::json to_json(const Witness& witness);
nlohmann::json to_json(const Verdict& verdict);

Witness witness_from_json(const nlohmann::json& j);

/// "x1 >= x3 >= x2"
std::string render_ordering(const Permutation& sigma);

std::string render_text(const MajorizationReport& report);
std::string render_text(const Verdict& verdict);

}  // namespace sds
