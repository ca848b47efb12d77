#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tricert/errors.hpp"

namespace tricert {

using NodeId = std::int32_t;
using EdgeId = std::int32_t;
using Label = std::uint64_t;

inline constexpr NodeId kNoNode = -1;
inline constexpr EdgeId kNoEdge = -1;

struct EdgeEnds {
  NodeId u = kNoNode;
  NodeId v = kNoNode;
};

/// One entry of a node's incidence list. `side` tells which end of the edge
/// this entry stands for, so self-loops get two distinguishable entries.
struct IncidenceSlot {
  EdgeId edge;
  std::uint8_t side;
};

enum class SmoothIds {
  kKeepLowest,  // the merged edge takes the lower id of the two removed ones
  kFreshId,     // the merged edge gets a new id
};

struct SmoothResult {
  EdgeId merged;   // surviving / new edge, oriented (first, second)
  EdgeId removed;  // id retired by the smoothing (kNoEdge for kFreshId)
  EdgeId first_part;
  EdgeId second_part;
  NodeId first;   // endpoint reached through the lower-id edge
  NodeId second;  // endpoint reached through the higher-id edge
};

/// Index-stable undirected multigraph.
///
/// Node and edge ids are never reused. Deleting marks the slot dead and keeps
/// the last endpoints of an edge, so certificates can keep referring to it.
/// Incidence lists hold exactly the live incident edges; removal is O(1).
class MultiGraph {
 public:
  MultiGraph() = default;
  explicit MultiGraph(std::size_t node_count);
  explicit MultiGraph(std::vector<Label> labels);

  std::size_t node_slots() const { return nodes_.size(); }
  std::size_t edge_slots() const { return edges_.size(); }
  std::size_t node_count() const { return live_nodes_; }
  std::size_t edge_count() const { return live_edges_; }

  bool valid_node(NodeId v) const { return v >= 0 && static_cast<std::size_t>(v) < nodes_.size(); }
  bool valid_edge(EdgeId e) const { return e >= 0 && static_cast<std::size_t>(e) < edges_.size(); }
  bool node_alive(NodeId v) const { return valid_node(v) && nodes_[v].alive; }
  bool edge_alive(EdgeId e) const { return valid_edge(e) && edges_[e].alive; }
  /// True once an id has been assigned to an edge, alive or not.
  bool edge_used(EdgeId e) const { return valid_edge(e) && edges_[e].used; }

  EdgeEnds ends(EdgeId e) const { return {edges_[e].end[0], edges_[e].end[1]}; }
  NodeId other(EdgeId e, NodeId v) const {
    return edges_[e].end[0] == v ? edges_[e].end[1] : edges_[e].end[0];
  }
  bool is_loop(EdgeId e) const { return edges_[e].end[0] == edges_[e].end[1]; }

  Label label(NodeId v) const { return nodes_[v].label; }
  std::vector<Label> labels() const;

  int degree(NodeId v) const { return static_cast<int>(nodes_[v].inc.size()); }
  std::span<const IncidenceSlot> incidence(NodeId v) const { return nodes_[v].inc; }
  /// Distinct neighbors other than v itself, ascending.
  std::vector<NodeId> neighbors(NodeId v) const;
  /// Minimum degree over live nodes; 0 for the empty graph.
  int min_degree() const;

  std::vector<NodeId> live_nodes() const;
  std::vector<EdgeId> live_edges() const;

  NodeId add_node(Label label);
  /// Adds a node whose id must be a dead slot with no incident edges.
  void revive_node(NodeId v);
  /// Marks an isolated node dead.
  void kill_node(NodeId v);
  /// Reserves node slots up to `count`; new slots are dead and labelled by id.
  void reserve_node_slots(std::size_t count);
  void set_label(NodeId v, Label label) { nodes_[v].label = label; }

  EdgeId add_edge(NodeId u, NodeId v);
  /// Creates an edge with a caller-chosen id; the id must never have been used.
  void add_edge_at(EdgeId id, NodeId u, NodeId v);
  void remove_edge(EdgeId e);
  /// Removes all incident edges, then kills v.
  void remove_node(NodeId v);
  /// Re-points a live edge to new endpoints, keeping its id.
  void reattach(EdgeId e, NodeId u, NodeId v);

  /// Smooths v when deg(v) = 2, |N(v)| = 2 and v is not its own neighbor;
  /// returns nullopt (graph untouched) otherwise.
  std::optional<SmoothResult> smooth(NodeId v, SmoothIds ids = SmoothIds::kKeepLowest);

  /// Contracts e into its lower-id endpoint, then collapses parallel classes
  /// at the survivor to their lowest edge id and drops self-loops.
  /// Returns the surviving node.
  NodeId contract(EdgeId e);

 private:
  struct NodeRec {
    Label label = 0;
    bool alive = false;
    std::vector<IncidenceSlot> inc;
  };
  struct EdgeRec {
    std::array<NodeId, 2> end{kNoNode, kNoNode};
    std::array<std::int32_t, 2> pos{-1, -1};
    bool alive = false;
    bool used = false;
  };

  void attach(EdgeId e, NodeId u, NodeId v);
  void detach(EdgeId e);
  void require_node(NodeId v, const char* what) const;

  std::vector<NodeRec> nodes_;
  std::vector<EdgeRec> edges_;
  std::size_t live_nodes_ = 0;
  std::size_t live_edges_ = 0;
};

struct SimplifyReport {
  std::size_t removed_self_loops = 0;
  /// (representative edge id, removed duplicate ids), ascending representative.
  std::vector<std::pair<EdgeId, std::vector<EdgeId>>> merged_parallel_classes;

  bool empty() const { return removed_self_loops == 0 && merged_parallel_classes.empty(); }
};

/// Removes self-loops and keeps the lowest edge id of each parallel class.
/// Surviving edges keep their ids; the result is rebuilt so every incidence
/// list is in ascending edge-id order.
std::pair<MultiGraph, SimplifyReport> simplify(const MultiGraph& g);

bool is_simple(const MultiGraph& g);

MultiGraph smoothed(const MultiGraph& g, NodeId v);
MultiGraph contracted(const MultiGraph& g, EdgeId e);

/// Components of the live nodes, each ascending, ordered by smallest member.
std::vector<std::vector<NodeId>> connected_components(const MultiGraph& g);

/// Number of components after hiding `removed` nodes (at most two).
std::size_t component_count_without(const MultiGraph& g, NodeId a, NodeId b = kNoNode);

/// Unordered node pair as a hash key.
inline std::uint64_t pair_key(NodeId a, NodeId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

/// Map from unordered endpoint pair to the lowest live edge id joining it.
std::unordered_map<std::uint64_t, EdgeId> edge_lookup(const MultiGraph& g);

std::unordered_map<Label, NodeId> label_lookup(const MultiGraph& g);

enum class GraphFormat { kEdgeList, kDimacs };

/// Reads "u v" lines ('#' comments) or DIMACS "p edge n m" / "e u v".
/// Edge-list labels are mapped to dense ids in ascending label order;
/// DIMACS node k gets id k-1. Edge ids follow input order.
MultiGraph parse_graph(std::string_view text, GraphFormat format = GraphFormat::kEdgeList);

/// Sniffs the format: DIMACS if a "p " line appears before any edge line.
GraphFormat detect_format(std::string_view text);

/// Sorted "u v" lines (u <= v) with original labels.
std::string serialize_edge_list(const MultiGraph& g);

}  // namespace tricert
