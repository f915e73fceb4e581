#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "crossmetric/geometry.hpp"

namespace crossmetric {

/// Canonical compact JSON: keys in the order dim, seed, points, hyperplanes;
/// no whitespace; every number an integer. parse → serialize is byte-exact.
std::string instance_to_json(const Instance& inst);

/// Strict parser: unknown keys, non-integer numbers and shape errors raise
/// InvalidInstance; the result is validated (general position included).
Instance instance_from_json(std::string_view text);

/// 64-bit FNV-1a digest of the canonical JSON, as 16 hex digits.
std::string instance_digest(const Instance& inst);

}  // namespace crossmetric
