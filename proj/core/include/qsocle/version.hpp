#pragma once

#include <string_view>

namespace qsocle {

inline constexpr std::string_view version = "0.1.0";
inline constexpr std::string_view tool_name = "qsocle";

} // namespace qsocle
