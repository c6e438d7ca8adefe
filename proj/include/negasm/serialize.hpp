#pragma once

#include <string>

#include <json.hpp>

#include "negasm/model.hpp"
#include "negasm/system.hpp"

namespace negasm {

nlohmann::json to_json(const Assembly& a);
Assembly assembly_from_json(const nlohmann::json& j);

nlohmann::json to_json(const AssemblySystem& s);
AssemblySystem system_from_json(const nlohmann::json& j);

std::string canonical_key(const Assembly& a);  // compact deterministic string

}  // namespace negasm
