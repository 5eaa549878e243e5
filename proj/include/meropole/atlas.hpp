#pragma once

#include "meropole/pencil.hpp"

#include <string>
#include <string_view>

namespace meropole {

/// Parses the sectioned atlas format:
///
///   # comment
///   [chart NAME]
///   vars = x, z
///   p = <polynomial>
///   q = <polynomial>
///   base_points = (0, 0); (1/2, 3)      optional
///
///   [overlap FROM TO]
///   <variable of TO> = <polynomial in FROM variables> [over <polynomial>]
///
/// Throws InputError (with the line number) on malformed input.
Atlas parse_atlas(std::string_view text);
Atlas load_atlas(const std::string& path);

}  // namespace meropole
