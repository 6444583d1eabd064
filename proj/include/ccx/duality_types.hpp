#pragma once

#include <utility>
#include <vector>

#include "ccx/bitset.hpp"

namespace ccx {

// Finite ground set with a list of bipartitions (walls). Both sides of a
// wall are nonempty and partition the ground set; duplicate walls are
// rejected by validate().
struct Wallspace {
  int ground = 0;
  std::vector<std::pair<Bitset, Bitset>> walls;

  int wall_count() const { return static_cast<int>(walls.size()); }
  void validate() const;  // throws Error::validation
};

}  // namespace ccx
