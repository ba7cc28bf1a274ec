#pragma once

#include <string_view>

namespace twistvol::cli {

/// Parses "1.25", "pi", "pi/3", "2pi/5", "2*pi/5", "3/4*pi". Plain numbers are
/// radians, or degrees when in_degrees is set; expressions containing pi are
/// always radians. Throws InvalidArgument on malformed input.
double parse_angle(std::string_view text, bool in_degrees = false);

} // namespace twistvol::cli
