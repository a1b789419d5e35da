#pragma once

#include "multiarr/io.hpp"

#include <optional>
#include <string>
#include <vector>

namespace multiarr {

/// Named arrangements usable wherever a JSON input path is accepted.
std::optional<ArrangementInput> builtin(const std::string& name);
std::vector<std::string> builtin_names();

}  // namespace multiarr
