#pragma once

#include <string_view>
#include <utility>
#include <vector>

namespace oreqb::detail {

/// (file name, contents) of every shipped registry document, sorted by name.
const std::vector<std::pair<std::string_view, std::string_view>>& registry_files();

}  // namespace oreqb::detail
