#pragma once

// SVG rendering of plane curve images (with marked self-intersections) and
// of two-dimensional subdivisions (cells outlined, p-values as labels).
// Geometry stays rational until the final viewport transform.

#include <string>

#include "tropicast/projection.hpp"

namespace trop {

std::string svg_plane_curve(const PlaneCurveImage& img);
std::string svg_subdivision(const RegularSubdivision& sub);
std::string svg_dual_subdivision(const ImageDualSubdivision& ds);

void write_file(const std::string& path, const std::string& content);

}  // namespace trop
