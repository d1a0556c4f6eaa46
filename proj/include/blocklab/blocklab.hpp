#pragma once

// convenience umbrella

#include "report.hpp"

namespace blocklab {
inline constexpr const char* version_string = "0.1.0";
}
