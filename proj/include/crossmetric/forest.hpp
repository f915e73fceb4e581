#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "crossmetric/geometry.hpp"

namespace crossmetric {

struct ForestEdge {
  PointId a = 0;
  PointId b = 0;
  std::uint32_t weight = 0;

  friend bool operator==(const ForestEdge&, const ForestEdge&) = default;
};

/// Union-find over n points plus the explicit list of edges that produced the
/// unions. Edges joining an already-connected pair are rejected, so the edge
/// list is always a forest.
class SpanningForest {
 public:
  SpanningForest() = default;
  explicit SpanningForest(std::size_t n);

  std::size_t size() const { return parent_.size(); }
  PointId find(PointId x) const;
  bool connected(PointId a, PointId b) const { return find(a) == find(b); }

  /// Adds the edge if it joins two components; returns whether it did.
  bool add_edge(PointId a, PointId b, std::uint32_t weight);

  std::size_t component_count() const { return components_; }
  bool spanning() const { return components_ <= 1; }
  const std::vector<ForestEdge>& edges() const { return edges_; }
  std::uint64_t total_weight() const;

 private:
  mutable std::vector<PointId> parent_;
  std::vector<std::uint8_t> rank_;
  std::vector<ForestEdge> edges_;
  std::size_t components_ = 0;
};

/// True iff `edges` is acyclic over n vertices and connects them all.
bool is_spanning_tree(std::size_t n, const std::vector<ForestEdge>& edges);

}  // namespace crossmetric
