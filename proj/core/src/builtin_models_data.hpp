#pragma once

#include <string_view>
#include <utility>
#include <vector>

namespace equivar::detail {

const std::vector<std::pair<std::string_view, std::string_view>>& builtin_model_table();

} // namespace equivar::detail
