#include "crossmetric/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

#include "crossmetric/arrangement.hpp"
#include "crossmetric/error.hpp"

namespace crossmetric {

namespace {

struct Box {
  double x0, y0, x1, y1;
};

// Segment of a·x + b·y + c = 0 inside the box, if any.
std::optional<std::pair<std::array<double, 2>, std::array<double, 2>>> clip(double a, double b, double c, const Box& box) {
  std::vector<std::array<double, 2>> hits;
  auto add = [&](double x, double y) {
    if (x < box.x0 - 1e-9 || x > box.x1 + 1e-9 || y < box.y0 - 1e-9 || y > box.y1 + 1e-9) return;
    for (const auto& h : hits) {
      if (std::abs(h[0] - x) < 1e-9 && std::abs(h[1] - y) < 1e-9) return;
    }
    hits.push_back({x, y});
  };
  if (b != 0) {
    add(box.x0, -(a * box.x0 + c) / b);
    add(box.x1, -(a * box.x1 + c) / b);
  }
  if (a != 0) {
    add(-(b * box.y0 + c) / a, box.y0);
    add(-(b * box.y1 + c) / a, box.y1);
  }
  if (hits.size() < 2) return std::nullopt;
  return std::make_pair(hits[0], hits[1]);
}

}  // namespace

std::string render_svg(const Instance& inst, std::span<const ForestEdge> edges, const SvgOptions& options) {
  if (inst.dim != 2) throw DimensionUnsupported("rendering needs a planar instance");
  Box box{-1, -1, 1, 1};
  if (!inst.points.empty()) {
    box = {1e300, 1e300, -1e300, -1e300};
    for (const auto& p : inst.points) {
      box.x0 = std::min(box.x0, static_cast<double>(p.coords[0]));
      box.x1 = std::max(box.x1, static_cast<double>(p.coords[0]));
      box.y0 = std::min(box.y0, static_cast<double>(p.coords[1]));
      box.y1 = std::max(box.y1, static_cast<double>(p.coords[1]));
    }
    const double pad = 0.05 * std::max({box.x1 - box.x0, box.y1 - box.y0, 1.0});
    box = {box.x0 - pad, box.y0 - pad, box.x1 + pad, box.y1 + pad};
  }
  const double inner = options.size - 2 * options.margin;
  const double scale = inner / std::max(box.x1 - box.x0, box.y1 - box.y0);
  auto sx = [&](double x) { return options.margin + (x - box.x0) * scale; };
  auto sy = [&](double y) { return options.size - options.margin - (y - box.y0) * scale; };

  std::ostringstream os;
  os << std::fixed << std::setprecision(2);
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << options.size << "\" height=\""
     << options.size << "\" viewBox=\"0 0 " << options.size << ' ' << options.size << "\">\n";
  os << "<rect class=\"frame\" x=\"" << options.margin << "\" y=\"" << options.margin << "\" width=\""
     << (box.x1 - box.x0) * scale << "\" height=\"" << (box.y1 - box.y0) * scale
     << "\" fill=\"white\" stroke=\"black\"/>\n";

  for (const auto& h : inst.hyperplanes) {
    const auto seg = clip(static_cast<double>(h.normal[0]), static_cast<double>(h.normal[1]),
                          static_cast<double>(h.offset), box);
    if (!seg) continue;
    os << "<line class=\"arr\" x1=\"" << sx(seg->first[0]) << "\" y1=\"" << sy(seg->first[1]) << "\" x2=\""
       << sx(seg->second[0]) << "\" y2=\"" << sy(seg->second[1]) << "\" stroke=\"gray\" stroke-width=\"1\"/>\n";
  }
  for (const auto& e : edges) {
    const auto& a = inst.points.at(e.a).coords;
    const auto& b = inst.points.at(e.b).coords;
    os << "<line class=\"mst\" x1=\"" << sx(a[0]) << "\" y1=\"" << sy(a[1]) << "\" x2=\"" << sx(b[0]) << "\" y2=\""
       << sy(b[1]) << "\" stroke=\"red\" stroke-width=\"2\"/>\n";
  }
  for (const auto& p : inst.points) {
    os << "<circle class=\"pt\" cx=\"" << sx(p.coords[0]) << "\" cy=\"" << sy(p.coords[1])
       << "\" r=\"3\" fill=\"black\"/>\n";
  }
  if (options.legend) {
    std::vector<LineId> all(inst.m());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<LineId>(i);
    const std::size_t faces = build_arrangement(inst, all).face_count();
    os << "<text class=\"legend\" x=\"" << options.margin + 4 << "\" y=\"" << options.size - 4
       << "\" font-family=\"sans-serif\" font-size=\"12\">faces: " << faces << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace crossmetric
