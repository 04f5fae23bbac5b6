#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "expara/geometry.hpp"

namespace expara::cli {

enum class Figure {
  Exparabola,      // one inscribed parabola, Steiner ellipse, focus
  Max,             // the three max-exparabolas with axes and foci
  Anticomplementary, // admissible region and the axes through the centroid
  Focal,           // focal triangle of the max-exparabolas
  Sequence         // four panels of the iterated focal-triangle sequence
};

std::optional<Figure> figure_from_name(std::string_view name);

// Standalone SVG 1.1 document.  `t` selects the parabola for the
// single-exparabola figure and is ignored otherwise.
std::string render_figure(const Triangle& tri, Figure figure, double t = 0.5);

} // namespace expara::cli
