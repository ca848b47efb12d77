#pragma once

#include <array>
#include <vector>

#include "tricert/graph.hpp"

namespace tricert {

struct ForestDecomposition {
  std::array<std::vector<EdgeId>, 3> forests;
  std::vector<EdgeId> kept;  // ascending
};

/// Spanning subgraph with at most 3(n-1) edges that is 3-connected exactly
/// when the input is. Each forest is a breadth-first (scan-first) spanning
/// forest of what the previous forests left over; roots and scans go in
/// ascending node and edge id order. Kept edges retain their ids.
std::pair<MultiGraph, ForestDecomposition> sparsify3(const MultiGraph& g);

}  // namespace tricert
