#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "tricert/certificate.hpp"
#include "tricert/graph.hpp"

namespace tricert {

/// Subdivision of edge `sub` by node `x`: the part at `keep` keeps the id of
/// `sub`, the part at the other endpoint gets `part`.
struct Subdivide {
  EdgeId sub = kNoEdge;
  NodeId keep = kNoNode;
  NodeId x = kNoNode;
  EdgeId part = kNoEdge;
  friend bool operator==(const Subdivide&, const Subdivide&) = default;
};

/// Edge between two existing nodes.
struct OpA {
  NodeId u = kNoNode;
  NodeId v = kNoNode;
  EdgeId e = kNoEdge;
  friend bool operator==(const OpA&, const OpA&) = default;
};

/// Subdivide one edge at x, then join x to the existing node y.
struct OpB {
  Subdivide s;
  NodeId y = kNoNode;
  EdgeId e = kNoEdge;
  friend bool operator==(const OpB&, const OpB&) = default;
};

/// Subdivide two edges at x and y, then join x and y.
struct OpC {
  Subdivide s1;
  Subdivide s2;
  EdgeId e = kNoEdge;
  friend bool operator==(const OpC&, const OpC&) = default;
};

/// New node w joined to three distinct existing nodes.
struct OpD {
  NodeId w = kNoNode;
  std::array<NodeId, 3> anchors{kNoNode, kNoNode, kNoNode};
  std::array<EdgeId, 3> edges{kNoEdge, kNoEdge, kNoEdge};
  friend bool operator==(const OpD&, const OpD&) = default;
};

using EdgeOp = std::variant<OpA, OpB, OpC, OpD>;

/// Start graph plus indexed operations. g0 has the node slots and labels of
/// the final graph; only its start nodes are alive.
struct EdgeRepresentation {
  MultiGraph g0;
  std::vector<EdgeOp> ops;
};

/// Pairs of current node ids; each contraction keeps the lower id.
using ContractionSequence = std::vector<std::pair<NodeId, NodeId>>;

/// Removes the steps in reverse order, smoothing with the lowest-index rule.
/// g must be simple and pr must verify on g; throws TransformError otherwise.
EdgeRepresentation path_to_edge(const MultiGraph& g, const PathRepresentation& pr);

/// Replays er and regroups the edges into the paths of each operation.
/// Node and edge ids refer to replay_edge_rep(er).
PathRepresentation edge_to_path(const EdgeRepresentation& er);

/// Applies the operations to g0. Throws ReplayError naming the op on id
/// collisions or references to missing nodes and edges.
MultiGraph replay_edge_rep(const EdgeRepresentation& er);

/// Rewrites a sequence of BG-paths into one that never creates parallel
/// links, using expand operations where needed. g must be simple and pr must
/// verify without expand records.
PathRepresentation to_basic(const MultiGraph& g, const PathRepresentation& pr);

/// Splits every expand record into two BG-paths.
PathRepresentation from_basic(const PathRepresentation& pr);

/// Contractions taking the final graph of er down to K4.
ContractionSequence to_contractions(const EdgeRepresentation& er);

/// Applies contractions in order; each pair must be adjacent.
MultiGraph apply_contractions(const MultiGraph& g, const ContractionSequence& seq);

std::string write_edge_rep(const EdgeRepresentation& er);
/// Labels are resolved through g when given; otherwise node ids follow
/// ascending label order over all labels in the text.
EdgeRepresentation read_edge_rep(std::string_view text, const MultiGraph* g = nullptr);

std::string write_contractions(const MultiGraph& g, const ContractionSequence& seq);

}  // namespace tricert
