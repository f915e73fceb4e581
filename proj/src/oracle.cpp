#include "crossmetric/oracle.hpp"

namespace crossmetric {

BitVector line_mask(std::size_t m, std::span<const LineId> lines) {
  BitVector mask(m);
  for (LineId l : lines) mask.set(l, true);
  return mask;
}

CrossingOracle::CrossingOracle(const Instance& inst, Exec exec)
    : inst_(&inst), signs_(kernels::sign_matrix(inst, exec)) {}

BitVector CrossingOracle::pattern(PointId p, std::span<const LineId> lines) const {
  BitVector out(lines.size());
  for (std::size_t t = 0; t < lines.size(); ++t) {
    if (signs_.get(p, lines[t])) out.set(t, true);
  }
  return out;
}

}  // namespace crossmetric
