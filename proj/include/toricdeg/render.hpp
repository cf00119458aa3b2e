#pragma once

#include <optional>
#include <string>

#include "toricdeg/lattice_geometry.hpp"

namespace toricdeg::render {

struct Panel {
  std::optional<geom::HPolytope> polytope;
  std::vector<IntVector> points;
  std::vector<IntVector> highlighted;
  std::string title;
};

/// Panels side by side on a shared scale: 40px per unit, half a unit of
/// margin, y pointing up. Output depends only on the input.
std::string svg(const std::vector<Panel>& panels);

}  // namespace toricdeg::render
