#pragma once
// Scenarios compiled into the tool.

#include <string>
#include <string_view>
#include <vector>

#include "ecsk/cli/scenario.hpp"

namespace ecsk::cli {

// minkowski, flat-polar, schwarzschild, flrw, flat-contorsion, random-fields
const std::vector<std::string>& builtin_names();

Json builtin_document(std::string_view name);
Scenario builtin_scenario(std::string_view name);

}  // namespace ecsk::cli
