#pragma once

#include <cstdint>
#include <string>

#include "fromage/cheese.hpp"

namespace fromage {

struct RenderOptions {
  Complex viewport_center = Complex(0.0, 0.0);
  double viewport_width = 2.2;  // world units across the square viewport
  /// Discs below this world radius are skipped; negative means half a pixel
  /// at the chosen viewport.
  double min_radius = -1.0;
  std::uint64_t max_discs = 5000;
  int pixel_width = 1000;
};

/// SVG 1.1 document: the outer disc as a filled circle, deleted discs in
/// the background color. Implicit rings are enumerated only within the
/// viewport and above min_radius; enumeration stops at max_discs and the
/// omitted count is recorded in the document's desc element.
std::string render_svg(const Cheese& c, const RenderOptions& opts);

}  // namespace fromage
