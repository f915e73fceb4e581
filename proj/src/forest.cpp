#include "crossmetric/forest.hpp"

#include <numeric>

namespace crossmetric {

SpanningForest::SpanningForest(std::size_t n) : parent_(n), rank_(n, 0), components_(n) {
  std::iota(parent_.begin(), parent_.end(), PointId{0});
}

PointId SpanningForest::find(PointId x) const {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool SpanningForest::add_edge(PointId a, PointId b, std::uint32_t weight) {
  PointId ra = find(a);
  PointId rb = find(b);
  if (ra == rb) return false;
  if (rank_[ra] < rank_[rb]) std::swap(ra, rb);
  parent_[rb] = ra;
  if (rank_[ra] == rank_[rb]) ++rank_[ra];
  --components_;
  edges_.push_back({a, b, weight});
  return true;
}

std::uint64_t SpanningForest::total_weight() const {
  std::uint64_t w = 0;
  for (const auto& e : edges_) w += e.weight;
  return w;
}

bool is_spanning_tree(std::size_t n, const std::vector<ForestEdge>& edges) {
  if (n == 0) return edges.empty();
  if (edges.size() != n - 1) return false;
  SpanningForest check(n);
  for (const auto& e : edges) {
    if (e.a >= n || e.b >= n || !check.add_edge(e.a, e.b, e.weight)) return false;
  }
  return check.spanning();
}

}  // namespace crossmetric
