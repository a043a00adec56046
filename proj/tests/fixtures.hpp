#pragma once

#include <vector>

#include "declustr/design.hpp"

namespace declustr::testing {

// A 3-(8,4,1) design in a fixed block order; block indices are group ids.
inline std::vector<Block> eight_point_blocks() {
  return {{0, 1, 2, 3}, {0, 1, 4, 5}, {0, 1, 6, 7}, {0, 2, 4, 6}, {0, 2, 5, 7},
          {0, 3, 4, 7}, {0, 3, 5, 6}, {4, 5, 6, 7}, {2, 3, 6, 7}, {2, 3, 4, 5},
          {1, 3, 5, 7}, {1, 3, 4, 6}, {1, 2, 5, 6}, {1, 2, 4, 7}};
}

inline Design eight_point_design() { return validate_design({3, 8, 4, 1}, eight_point_blocks()); }

// The 2-(5,4,3) design of the single-parity declustering example.
inline std::vector<Block> five_point_blocks() {
  return {{0, 1, 2, 3}, {0, 1, 2, 4}, {0, 1, 3, 4}, {0, 2, 3, 4}, {1, 2, 3, 4}};
}

inline Design five_point_design() { return validate_design({2, 5, 4, 3}, five_point_blocks()); }

// Blocks containing all of `inside` and none of `outside`, by direct scan.
inline long long brute_force_count(const std::vector<Block>& blocks, const std::vector<int>& inside,
                                   const std::vector<int>& outside) {
  long long count = 0;
  for (const Block& b : blocks) {
    bool ok = true;
    for (int y : inside) {
      bool found = false;
      for (int x : b) found |= x == y;
      ok &= found;
    }
    for (int z : outside) {
      for (int x : b) ok &= x != z;
    }
    count += ok;
  }
  return count;
}

}  // namespace declustr::testing
