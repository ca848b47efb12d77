#pragma once

#include <algorithm>
#include <string>
#include <string_view>

#include "tricert/graph.hpp"

namespace tricert {

enum class WitnessKind {
  kTooFewNodes,
  kLowDegree,
  kDisconnected,
  kCutVertex,
  kSeparationPair,
};

/// Evidence that a graph is not 3-connected.
struct Witness {
  WitnessKind kind = WitnessKind::kTooFewNodes;
  NodeId u = kNoNode;  // low-degree node, cut vertex, or first of the pair
  NodeId v = kNoNode;  // second node of a separation pair

  static Witness too_few_nodes() { return {WitnessKind::kTooFewNodes}; }
  static Witness low_degree(NodeId x) { return {WitnessKind::kLowDegree, x}; }
  static Witness disconnected() { return {WitnessKind::kDisconnected}; }
  static Witness cut_vertex(NodeId x) { return {WitnessKind::kCutVertex, x}; }
  static Witness separation_pair(NodeId a, NodeId b) {
    return {WitnessKind::kSeparationPair, std::min(a, b), std::max(a, b)};
  }

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// "WITNESS SEPPAIR u v" etc. with node labels, newline-terminated.
std::string format_witness(const MultiGraph& g, const Witness& w);

/// Inverse of format_witness; labels are resolved against g. Throws
/// ParseError on unknown keywords or labels.
Witness parse_witness(const MultiGraph& g, std::string_view text);

}  // namespace tricert
