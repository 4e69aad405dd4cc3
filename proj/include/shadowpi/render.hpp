#pragma once

#include <optional>
#include <string>

#include "shadowpi/shadow.hpp"

namespace shadowpi {

struct RenderOptions {
  // Regions to highlight; none highlighted when empty.
  std::optional<SubSelection> selection;
  double size = 480;  // output width and height in px
};

// SVG 1.1 drawing with understrand breaks and gleam/label annotations. Shadows
// carrying a divide provenance are drawn from its coordinates; others get a
// barycentric layout and are marked schematic.
std::string render_svg(const ShadowedPolyhedron& shadow, const RenderOptions& options = {});

}  // namespace shadowpi
