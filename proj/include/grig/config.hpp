#pragma once

#include <cstddef>
#include <cstdint>

#include "grig/decision.hpp"
#include "grig/engel.hpp"
#include "grig/tree.hpp"

namespace grig {

/// Run-time knobs shared by the CLI and the acceptance suite. Defaults are
/// the module defaults.
struct Config {
  unsigned max_depth = kDefaultWitnessDepth;
  unsigned order_cap = kDefaultOrderCap;
  unsigned level_cap = kDefaultActiveLevelCap;
  std::size_t tower_cap = kDefaultTowerLengthCap;
  std::size_t walk_length = kDefaultWalkLength;
  std::uint64_t budget = 10000;
  std::uint64_t seed = 1;
};

} // namespace grig
