#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "tricert/graph.hpp"
#include "tricert/subdivision.hpp"
#include "tricert/witness.hpp"

namespace tricert {

/// Outcome of the K4-subdivision search.
struct K4Result {
  std::vector<EdgeId> edges;          // S0 edge ids, ascending (empty on failure)
  std::optional<Witness> witness;     // set on failure
  bool used_fallback = false;         // generic extractor replaced the DFS wiring

  bool found() const { return !witness.has_value(); }
};

/// One DFS from the smallest live node. On success the edge set forms a
/// subdivision of K4 with exactly four branch nodes; it is checked before
/// being returned. On failure a witness for g is returned instead:
/// too few nodes, a low-degree node, disconnection, the root as cut vertex,
/// or a separation pair found on the DFS tree.
/// Precondition: g is simple.
K4Result find_k4_subdivision(const MultiGraph& g);

/// Generic extractor used when the DFS wiring fails its self-check: a cycle,
/// an ear making a theta graph, and a second ear joining the interiors of two
/// theta paths. Returns nullopt if that particular search gets stuck.
std::optional<std::vector<EdgeId>> extract_k4_generic(const MultiGraph& g);

/// True if the edges form a subdivision of K4 (4 branch nodes, 6 links).
bool is_k4_subdivision(const MultiGraph& g, const std::vector<EdgeId>& edges);

}  // namespace tricert
