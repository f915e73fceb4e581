#pragma once

#include <cstddef>
#include <span>
#include <string>

#include "crossmetric/forest.hpp"
#include "crossmetric/geometry.hpp"

namespace crossmetric {

struct SvgOptions {
  double size = 800;    // canvas width and height in px
  double margin = 20;   // px between frame and canvas border
  bool legend = true;   // face count of the full arrangement
};

/// Lines in gray clipped to the frame, points as black dots, forest edges in
/// red. The frame is the points' bounding box padded by 5% (or [-1,1]² when
/// there are no points). Output depends only on the inputs. Planar only.
std::string render_svg(const Instance& inst, std::span<const ForestEdge> edges = {}, const SvgOptions& options = {});

}  // namespace crossmetric
