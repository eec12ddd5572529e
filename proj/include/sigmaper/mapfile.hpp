#pragma once

#include "sigmaper/lifting.hpp"

#include <string>

namespace sigma {

// Line format: "degree <d>", "node <name> = <point>", "image <name> -> <point>".
Lifting parse_map(const std::string& text);
Lifting load_map(const std::string& path);
std::string to_map_text(const Lifting& F);

}  // namespace sigma
