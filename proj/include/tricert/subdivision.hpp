#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <unordered_map>
#include <variant>
#include <vector>

#include "tricert/graph.hpp"

namespace tricert {

/// Path x = v0, ..., vk = y in the host graph, k >= 1.
struct BGPath {
  std::vector<NodeId> nodes;

  NodeId front() const { return nodes.front(); }
  NodeId back() const { return nodes.back(); }
  std::size_t length() const { return nodes.empty() ? 0 : nodes.size() - 1; }
  friend bool operator==(const BGPath&, const BGPath&) = default;
};

/// Three internally disjoint paths from a new node to three distinct real nodes.
/// Every arm starts at `center` and ends at its anchor.
struct ExpandRecord {
  NodeId center = kNoNode;
  std::array<std::vector<NodeId>, 3> arms;

  NodeId anchor(std::size_t k) const { return arms[k].back(); }
  friend bool operator==(const ExpandRecord&, const ExpandRecord&) = default;
};

using Step = std::variant<BGPath, ExpandRecord>;

/// Maximal path of the subdivision whose inner nodes all have degree 2.
struct Link {
  NodeId a = kNoNode;
  NodeId b = kNoNode;
  std::vector<NodeId> nodes;  // a ... b
  std::vector<EdgeId> edges;  // edges[i] joins nodes[i], nodes[i+1]

  std::size_t length() const { return edges.size(); }
  friend bool operator==(const Link&, const Link&) = default;
};

enum class PathCheck {
  kValid,
  kNotAPath,    // repeated node, too short, or consecutive nodes not joined outside S
  kCondition1,  // S meets the path in more than its endpoints
  kCondition2,  // both endpoints lie in one link, not both as its endpoints
  kCondition3,  // endpoints are inner nodes of two parallel links
};

const char* to_string(PathCheck c);

/// Links of the subgraph given by `edge_in`, oriented so nodes.front() <=
/// nodes.back() and sorted by smallest contained edge id. Throws
/// StructureError on a degree-1 node, a component without real nodes, or a
/// link that closes on itself.
std::vector<Link> compute_links(const MultiGraph& host, std::span<const char> edge_in);

/// Growing subdivision S inside a fixed host graph, with real nodes and the
/// link decomposition kept up to date incrementally.
class SubdivisionState {
 public:
  /// Validates that s0 looks like a subdivision of a 3-connected graph: min
  /// degree 2, at least four real nodes, no loop links and no parallel links.
  static SubdivisionState init(const MultiGraph& host, std::span<const EdgeId> s0_edges);

  const MultiGraph& host() const { return *host_; }

  bool contains_node(NodeId v) const { return degree_[v] > 0; }
  bool contains_edge(EdgeId e) const { return edge_in_[e] != 0; }
  std::span<const char> edge_mask() const { return edge_in_; }
  int degree(NodeId v) const { return degree_[v]; }
  bool is_real(NodeId v) const { return degree_[v] >= 3; }
  bool is_inner(NodeId v) const { return degree_[v] == 2; }

  std::size_t node_count() const { return node_count_; }
  std::size_t edge_count() const { return edge_count_; }
  std::size_t real_count() const { return real_count_; }
  std::vector<EdgeId> edges() const;

  /// Link holding v as an inner node.
  const Link& inner_link(NodeId v) const { return links_[inner_link_of_[v]]; }
  int inner_link_id(NodeId v) const { return inner_link_of_[v]; }
  const Link& link_of_edge(EdgeId e) const { return links_[edge_link_of_[e]]; }
  /// Links with endpoint pair {a, b}.
  int parallel_count(NodeId a, NodeId b) const;

  /// Current links in canonical order (same shape as compute_links).
  std::vector<Link> links() const;

  std::optional<NodeId> smallest_inner_node() const;
  /// S == smooth(S): no inner nodes left.
  bool is_smooth() const { return inner_nodes_.empty(); }
  bool covers_host() const { return edge_count_ == host_->edge_count(); }

  PathCheck check_bg_path(const BGPath& p) const;
  /// Throws UsageError naming the violated condition.
  void apply_bg_path(const BGPath& p);
  bool can_expand(const ExpandRecord& x) const;
  /// Throws UsageError if an anchor is not real, anchors repeat, or an arm
  /// meets S before its anchor.
  void apply_expand(const ExpandRecord& x);

 private:
  explicit SubdivisionState(const MultiGraph& host);

  EdgeId edge_outside(NodeId u, NodeId v) const;
  void add_edge(EdgeId e);
  int add_link(Link link);
  void drop_pair(NodeId a, NodeId b);
  void add_pair(NodeId a, NodeId b);
  void split_link_at(NodeId x);
  void set_degree(NodeId v, int d);

  const MultiGraph* host_;
  std::vector<int> degree_;
  std::vector<char> edge_in_;
  std::vector<int> inner_link_of_;
  std::vector<int> edge_link_of_;
  std::vector<Link> links_;
  std::vector<char> link_alive_;
  std::unordered_map<std::uint64_t, int> parallel_;
  std::set<NodeId> inner_nodes_;
  std::size_t node_count_ = 0;
  std::size_t edge_count_ = 0;
  std::size_t real_count_ = 0;
};

/// Edges of a path step, in order; kNoEdge where consecutive nodes are not adjacent.
std::vector<EdgeId> path_edges(const MultiGraph& g, std::span<const NodeId> nodes);

}  // namespace tricert
