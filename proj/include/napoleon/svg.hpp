#pragma once

#include <string>

#include "napoleon/constructions.hpp"

namespace napoleon::svg {

inline constexpr int kCanvasSize = 1000;

/// SVG 1.1 figure of a construction: erected polygons faded, base polygon
/// solid, discovered polygon bold with a marker on every center. The viewBox
/// fits all geometry with a 5% margin. Output depends only on the input
/// coordinates, so identical constructions give identical bytes.
std::string render(const ConstructionResult& result);

}  // namespace napoleon::svg
