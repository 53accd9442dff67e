#pragma once

#include <string_view>

namespace graphmass {

inline constexpr std::string_view kVersion = "graphmass-0.1.0";

}  // namespace graphmass
