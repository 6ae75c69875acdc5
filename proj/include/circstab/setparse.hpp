#pragma once

#include <string>
#include <vector>

#include "circstab/abelian.hpp"

namespace circstab {

// "12" -> Z_12, "4x4" -> Z_4 x Z_4.
AbelianGroup parse_group(const std::string& text);

// Cyclic: "1,-1,11,-11" (negatives reduced mod n).
// Product: "(2,2),(0,2),(1,3)" with per-coordinate reduction.
std::vector<int> parse_set(const AbelianGroup& g, const std::string& text);

std::string format_set(const AbelianGroup& g, const std::vector<int>& set);

}  // namespace circstab
