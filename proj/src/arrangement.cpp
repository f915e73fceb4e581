#include "crossmetric/arrangement.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "crossmetric/error.hpp"
#include "crossmetric/random.hpp"

namespace crossmetric {

namespace {

int sgn(Wide v) { return (v > 0) - (v < 0); }

struct Line2 {
  Wide a, b, c;
};

// Determinant a1*b2 - a2*b1; zero iff the lines are parallel.
Wide cross(const Line2& l1, const Line2& l2) { return l1.a * l2.b - l2.a * l1.b; }

bool coincident(const Line2& l1, const Line2& l2) {
  return cross(l1, l2) == 0 && l1.a * l2.c - l2.a * l1.c == 0 && l1.b * l2.c - l2.b * l1.c == 0;
}

// Sign relating a line to a coincident one: +1 if same positive side.
int orientation(const Line2& ref, const Line2& other) {
  return ref.a != 0 ? sgn(ref.a) * sgn(other.a) : sgn(ref.b) * sgn(other.b);
}

// Sign of `other` along the (parallel, distinct) line `base`.
int parallel_side(const Line2& base, const Line2& other) {
  if (base.a != 0) return sgn(other.c * base.a - other.a * base.c) * sgn(base.a);
  return sgn(other.c * base.b - other.b * base.c) * sgn(base.b);
}

// Sign of t(l1) - t(l2), where t is the parameter along `base` (direction
// (-b, a)) of its intersection with a non-parallel line.
int compare_along(const Line2& base, const Line2& l1, const Line2& l2) {
  const Wide x = base.b * l1.c - l1.b * base.c;
  const Wide y = base.c * l1.a - l1.c * base.a;
  const Wide w = cross(base, l1);
  const Wide val = l2.a * x + l2.b * y + l2.c * w;
  return sgn(val) * sgn(w) * sgn(cross(base, l2));
}

}  // namespace

std::size_t Arrangement::WordsHash::operator()(const std::vector<std::uint64_t>& w) const {
  std::uint64_t h = 0x2545f4914f6cdd1dULL;
  for (auto x : w) h = mix64(h ^ x);
  return static_cast<std::size_t>(h);
}

BitVector Arrangement::sign_pattern(FaceId f) const {
  BitVector out(lines_.size());
  auto src = pattern_words(f);
  std::copy(src.begin(), src.end(), out.words().begin());
  return out;
}

std::optional<FaceId> Arrangement::find_face(const BitVector& pattern) const {
  if (pattern.size() != lines_.size()) return std::nullopt;
  std::vector<std::uint64_t> key(pattern.words().begin(), pattern.words().end());
  if (auto it = index_.find(key); it != index_.end()) return it->second;
  return std::nullopt;
}

FaceId Arrangement::locate(const Instance& inst, const Point& p) const {
  BitVector pattern(lines_.size());
  for (std::size_t t = 0; t < lines_.size(); ++t) pattern.set(t, side(inst.hyperplanes[lines_[t]], p) > 0);
  auto face = find_face(pattern);
  if (!face) throw Error("internal: sign pattern of a located point has no face");
  return *face;
}

Arrangement build_arrangement(const Instance& inst, std::span<const LineId> lines, const ArrangementOptions& options) {
  if (inst.dim != 2) throw DimensionUnsupported("arrangements are only built in the plane");
  Arrangement arr;
  arr.lines_.assign(lines.begin(), lines.end());
  std::sort(arr.lines_.begin(), arr.lines_.end());
  arr.lines_.erase(std::unique(arr.lines_.begin(), arr.lines_.end()), arr.lines_.end());
  for (LineId id : arr.lines_) {
    if (id >= inst.m()) throw InvalidInstance("line id " + std::to_string(id) + " out of range");
  }

  const std::size_t r = arr.lines_.size();
  arr.stride_ = words_for_bits(r);
  std::vector<Line2> ln(r);
  for (std::size_t i = 0; i < r; ++i) {
    const auto& h = inst.hyperplanes[arr.lines_[i]];
    ln[i] = {h.normal[0], h.normal[1], h.offset};
  }

  // Coincidence classes; the representative is the smallest position.
  std::vector<std::size_t> rep(r);
  std::iota(rep.begin(), rep.end(), 0);
  for (std::size_t i = 0; i < r; ++i) {
    if (rep[i] != i) continue;
    for (std::size_t j = i + 1; j < r; ++j) {
      if (rep[j] == j && coincident(ln[i], ln[j])) rep[j] = i;
    }
  }

  std::vector<std::vector<std::uint64_t>> created;  // patterns in creation order
  std::vector<std::pair<FaceId, FaceId>> pairs;
  std::vector<Adjacency> pair_info;
  std::unordered_map<std::vector<std::uint64_t>, FaceId, Arrangement::WordsHash> temp_index;

  auto intern = [&](const std::vector<std::uint64_t>& pattern) -> FaceId {
    auto [it, inserted] = temp_index.try_emplace(pattern, static_cast<FaceId>(created.size()));
    if (inserted) {
      created.push_back(pattern);
      if (options.face_budget && created.size() > *options.face_budget) {
        throw BudgetExceeded("arrangement exceeded its face budget of " + std::to_string(*options.face_budget));
      }
    }
    return it->second;
  };

  if (r == 0) intern({});

  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::vector<std::uint64_t> base(arr.stride_);
  std::vector<std::size_t> crossing;
  for (std::size_t g = 0; g < r; ++g) {
    if (rep[g] != g) continue;
    const Line2& L = ln[g];
    std::fill(base.begin(), base.end(), 0);
    auto set_bit = [&](std::vector<std::uint64_t>& w, std::size_t i, bool v) {
      const std::uint64_t m = std::uint64_t{1} << (i & 63);
      w[i >> 6] = v ? (w[i >> 6] | m) : (w[i >> 6] & ~m);
    };

    crossing.clear();
    std::vector<std::size_t> own;
    std::size_t own_count = 0;
    for (std::size_t j = 0; j < r; ++j) {
      if (rep[j] == g) {
        own.push_back(j);
        ++own_count;
      } else if (cross(L, ln[j]) == 0) {
        set_bit(base, j, parallel_side(L, ln[j]) > 0);
      } else {
        crossing.push_back(j);
        // Side of line j well before its crossing with L.
        set_bit(base, j, sgn(cross(L, ln[j])) < 0);
      }
    }
    std::stable_sort(crossing.begin(), crossing.end(),
                     [&](std::size_t a, std::size_t b) { return compare_along(L, ln[a], ln[b]) < 0; });

    // Split into vertex groups of equal parameter.
    std::vector<std::pair<std::size_t, std::size_t>> groups;  // [begin, end) into crossing
    for (std::size_t k = 0; k < crossing.size();) {
      std::size_t e = k + 1;
      while (e < crossing.size() && compare_along(L, ln[crossing[k]], ln[crossing[e]]) == 0) ++e;
      groups.emplace_back(k, e);
      k = e;
    }
    for (auto [b, e] : groups) {
      // Count each vertex once: on the line class with the smallest representative.
      bool smallest = true;
      for (std::size_t k = b; k < e; ++k) smallest = smallest && rep[crossing[k]] > g;
      if (smallest) ++vertices;
    }
    edges += groups.size() + 1;

    std::vector<std::uint64_t> plus = base;
    std::vector<std::uint64_t> minus = base;
    for (std::size_t j : own) {
      const int o = orientation(L, ln[j]);
      set_bit(plus, j, o > 0);
      set_bit(minus, j, o < 0);
    }
    const Adjacency info{kNoFace, arr.lines_[g], static_cast<std::uint32_t>(own_count)};
    for (std::size_t k = 0; k <= groups.size(); ++k) {
      if (k > 0) {
        for (std::size_t idx = groups[k - 1].first; idx < groups[k - 1].second; ++idx) {
          const std::size_t j = crossing[idx];
          plus[j >> 6] ^= std::uint64_t{1} << (j & 63);
          minus[j >> 6] ^= std::uint64_t{1} << (j & 63);
        }
      }
      const FaceId fp = intern(plus);
      const FaceId fm = intern(minus);
      pairs.emplace_back(fp, fm);
      pair_info.push_back(info);
    }
  }

  // Renumber faces in lexicographic pattern order.
  const std::size_t faces = created.size();
  std::vector<FaceId> order(faces);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](FaceId a, FaceId b) { return lexicographic_less(created[a], created[b]); });
  std::vector<FaceId> new_id(faces);
  for (std::size_t i = 0; i < faces; ++i) new_id[order[i]] = static_cast<FaceId>(i);

  arr.face_count_ = faces;
  arr.vertex_count_ = vertices;
  arr.edge_count_ = edges;
  arr.patterns_.assign(faces * arr.stride_, 0);
  for (std::size_t old = 0; old < faces; ++old) {
    std::copy(created[old].begin(), created[old].end(), arr.patterns_.begin() + new_id[old] * arr.stride_);
  }
  arr.index_.reserve(faces);
  for (std::size_t old = 0; old < faces; ++old) arr.index_.emplace(std::move(created[old]), new_id[old]);

  std::vector<std::size_t> degree(faces + 1, 0);
  for (auto [a, b] : pairs) {
    ++degree[new_id[a]];
    ++degree[new_id[b]];
  }
  arr.offsets_.assign(faces + 1, 0);
  for (std::size_t f = 0; f < faces; ++f) arr.offsets_[f + 1] = arr.offsets_[f] + degree[f];
  arr.adjacency_.resize(arr.offsets_[faces]);
  std::vector<std::size_t> fill(arr.offsets_.begin(), arr.offsets_.end() - 1);
  for (std::size_t e = 0; e < pairs.size(); ++e) {
    const FaceId a = new_id[pairs[e].first];
    const FaceId b = new_id[pairs[e].second];
    Adjacency info = pair_info[e];
    info.neighbor = b;
    arr.adjacency_[fill[a]++] = info;
    info.neighbor = a;
    arr.adjacency_[fill[b]++] = info;
  }
  for (std::size_t f = 0; f < faces; ++f) {
    std::sort(arr.adjacency_.begin() + arr.offsets_[f], arr.adjacency_.begin() + arr.offsets_[f + 1],
              [](const Adjacency& x, const Adjacency& y) { return x.neighbor < y.neighbor; });
  }
  return arr;
}

Flood::Flood(const Arrangement& arr, std::span<const FloodSeed> seeds)
    : arr_(&arr),
      labels_(arr.face_count()),
      tentative_(arr.face_count(), -1),
      seed_key_(arr.face_count(), kNoFace) {
  for (const auto& s : seeds) {
    if (s.face >= arr.face_count()) throw Error("flood seed face out of range");
    seed_key_[s.face] = std::min(seed_key_[s.face], s.key);
    if (tentative_[s.face] != 0) {
      tentative_[s.face] = 0;
      if (buckets_.empty()) buckets_.emplace_back();
      buckets_[0].push_back(s.face);
    }
  }
}

bool Flood::advance() {
  layer_.clear();
  int d = radius_ + 1;
  for (; d < static_cast<int>(buckets_.size()); ++d) {
    for (FaceId f : buckets_[d]) {
      if (tentative_[f] == d && !labels_[f].reached()) layer_.push_back(f);
    }
    buckets_[d].clear();
    if (!layer_.empty()) break;
  }
  if (layer_.empty()) return false;
  std::sort(layer_.begin(), layer_.end());
  layer_.erase(std::unique(layer_.begin(), layer_.end()), layer_.end());
  radius_ = d;

  for (FaceId f : layer_) {
    std::uint32_t key = d == 0 ? seed_key_[f] : kNoFace;
    if (d > 0) {
      for (const auto& adj : arr_->neighbors(f)) {
        const FaceLabel& g = labels_[adj.neighbor];
        if (g.reached() && g.distance + static_cast<int>(adj.multiplicity) == d) key = std::min(key, g.source);
      }
    }
    labels_[f] = {d, key};
    ++labeled_;
  }
  for (FaceId f : layer_) {
    for (const auto& adj : arr_->neighbors(f)) {
      if (labels_[adj.neighbor].reached()) continue;
      const int nd = d + static_cast<int>(adj.multiplicity);
      int& t = tentative_[adj.neighbor];
      if (t < 0 || nd < t) {
        t = nd;
        if (buckets_.size() <= static_cast<std::size_t>(nd)) buckets_.resize(nd + 1);
        buckets_[nd].push_back(adj.neighbor);
      }
    }
  }
  return true;
}

std::vector<FaceLabel> face_bfs_layers(const Arrangement& arr, std::span<const FaceId> sources, int max_depth) {
  std::vector<FloodSeed> seeds;
  seeds.reserve(sources.size());
  for (FaceId f : sources) seeds.push_back({f, f});
  Flood flood(arr, seeds);
  while (flood.advance()) {
    if (flood.radius() >= max_depth) break;
  }
  std::vector<FaceLabel> out = flood.labels();
  for (auto& l : out) {
    if (l.distance > max_depth) l = FaceLabel{};
  }
  return out;
}

}  // namespace crossmetric
