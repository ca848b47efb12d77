#pragma once

#include <cstddef>
#include <string>

#include "tricert/certificate.hpp"
#include "tricert/graph.hpp"

namespace tricert {

/// Undirected DOT graph of S_stage: S0 plus the first `stage` steps, replayed
/// on the simplification of g. Real nodes are filled; the edges of the next
/// step, if any, are drawn dashed. Throws UsageError if stage exceeds the
/// step count and StructureError / UsageError if the replay fails.
std::string stage_dot(const MultiGraph& g, const PathRepresentation& pr, std::size_t stage);

}  // namespace tricert
