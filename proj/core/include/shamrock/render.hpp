#pragma once

#include <optional>
#include <string>

#include "shamrock/lattice.hpp"

namespace shamrock {

struct RenderOptions {
  double unit = 40.0;
  double margin = 10.0;
};

/// SVG with one path per unit triangle; when `tiling` is given, its lozenges
/// are drawn on top, shaded by direction. Output is byte-stable for fixed input.
std::string render_svg(const Region& region, const std::optional<Tiling>& tiling = std::nullopt,
                       const RenderOptions& options = {});

}  // namespace shamrock
