#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "crossmetric/bits.hpp"
#include "crossmetric/geometry.hpp"

namespace crossmetric {

using FaceId = std::uint32_t;
inline constexpr FaceId kNoFace = std::numeric_limits<FaceId>::max();

/// One side of an arrangement edge. `multiplicity` counts the (coincident)
/// input lines crossed; it is 1 unless R contains duplicated geometric lines.
struct Adjacency {
  FaceId neighbor = kNoFace;
  LineId line = 0;  // smallest crossed line id
  std::uint32_t multiplicity = 1;
};

struct ArrangementOptions {
  /// Abort with BudgetExceeded once more faces than this have been created.
  std::optional<std::size_t> face_budget;
};

/// Planar arrangement of a line subset R. Faces are identified by their sign
/// pattern over R (bit t = positive side of lines()[t]) and numbered in
/// lexicographic pattern order.
class Arrangement {
 public:
  std::span<const LineId> lines() const { return lines_; }
  std::size_t face_count() const { return face_count_; }
  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edge_count_; }

  /// V - E + F after adding one vertex at infinity where every ray ends.
  /// Equals 2 for every arrangement.
  long euler_characteristic() const {
    return static_cast<long>(vertex_count_) + 1 - static_cast<long>(edge_count_) + static_cast<long>(face_count_);
  }

  std::span<const std::uint64_t> pattern_words(FaceId f) const {
    return {patterns_.data() + std::size_t{f} * stride_, stride_};
  }
  BitVector sign_pattern(FaceId f) const;
  /// +1 or -1: side of face f with respect to lines()[position].
  int face_sign(FaceId f, std::size_t position) const {
    return (pattern_words(f)[position >> 6] >> (position & 63)) & 1u ? 1 : -1;
  }

  std::span<const Adjacency> neighbors(FaceId f) const {
    return {adjacency_.data() + offsets_[f], adjacency_.data() + offsets_[f + 1]};
  }
  /// Number of unordered adjacent face pairs (one per arrangement edge).
  std::size_t adjacency_pair_count() const { return adjacency_.size() / 2; }

  /// Face with exactly this sign pattern, if it exists.
  std::optional<FaceId> find_face(const BitVector& pattern) const;

  /// Face containing p. Throws OnHyperplane if p lies on a line of R.
  FaceId locate(const Instance& inst, const Point& p) const;

 private:
  friend Arrangement build_arrangement(const Instance&, std::span<const LineId>, const ArrangementOptions&);

  struct WordsHash {
    std::size_t operator()(const std::vector<std::uint64_t>& w) const;
  };

  std::vector<LineId> lines_;
  std::size_t face_count_ = 0;
  std::size_t vertex_count_ = 0;
  std::size_t edge_count_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> patterns_;
  std::vector<std::size_t> offsets_;
  std::vector<Adjacency> adjacency_;
  std::unordered_map<std::vector<std::uint64_t>, FaceId, WordsHash> index_;
};

/// Builds Arr(R) exactly. `lines` may be unsorted or repeat ids; the
/// arrangement uses the sorted distinct set. Parallel and concurrent lines are
/// fine. Throws DimensionUnsupported unless inst.dim == 2.
Arrangement build_arrangement(const Instance& inst, std::span<const LineId> lines,
                              const ArrangementOptions& options = {});

struct FaceLabel {
  int distance = -1;       // -1: not reached
  std::uint32_t source = kNoFace;  // key of the nearest seed

  bool reached() const { return distance >= 0; }
};

struct FloodSeed {
  FaceId face = kNoFace;
  std::uint32_t key = 0;
};

/// Multi-source wavefront over the face-adjacency graph, one distance layer
/// per advance(). Each face is labeled with its distance (lines crossed) and
/// the smallest key among seeds at that distance reachable along a shortest
/// path; every labeled face therefore has a shortest path to its source
/// through faces with the same label.
class Flood {
 public:
  Flood(const Arrangement& arr, std::span<const FloodSeed> seeds);

  /// Finalizes the next nonempty distance layer. False once nothing remains.
  bool advance();
  /// Distance of the last finalized layer; -1 before the first advance.
  int radius() const { return radius_; }
  std::span<const FaceId> layer() const { return layer_; }
  const FaceLabel& label(FaceId f) const { return labels_[f]; }
  const std::vector<FaceLabel>& labels() const { return labels_; }
  std::size_t labeled_count() const { return labeled_; }

 private:
  const Arrangement* arr_;
  std::vector<FaceLabel> labels_;
  std::vector<int> tentative_;
  std::vector<std::uint32_t> seed_key_;
  std::vector<std::vector<FaceId>> buckets_;
  std::vector<FaceId> layer_;
  int radius_ = -1;
  std::size_t labeled_ = 0;
};

/// Multi-source BFS from `sources` (keys = face ids) up to `max_depth`.
/// Faces beyond max_depth stay unlabeled.
std::vector<FaceLabel> face_bfs_layers(const Arrangement& arr, std::span<const FaceId> sources, int max_depth);

}  // namespace crossmetric
