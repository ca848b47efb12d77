#include "tricert/sparsifier.hpp"

#include <algorithm>
#include <deque>

namespace tricert {

namespace {

std::vector<EdgeId> scan_first_forest(const MultiGraph& g, std::vector<char>& taken) {
  std::vector<EdgeId> forest;
  std::vector<char> seen(g.node_slots(), 0);
  std::deque<NodeId> queue;
  for (NodeId root : g.live_nodes()) {
    if (seen[root]) continue;
    seen[root] = 1;
    queue.push_back(root);
    while (!queue.empty()) {
      NodeId v = queue.front();
      queue.pop_front();
      for (auto s : g.incidence(v)) {
        if (taken[s.edge]) continue;
        NodeId w = g.other(s.edge, v);
        if (seen[w]) continue;
        seen[w] = 1;
        taken[s.edge] = 1;
        forest.push_back(s.edge);
        queue.push_back(w);
      }
    }
  }
  std::sort(forest.begin(), forest.end());
  return forest;
}

}  // namespace

std::pair<MultiGraph, ForestDecomposition> sparsify3(const MultiGraph& g) {
  ForestDecomposition dec;
  std::vector<char> taken(g.edge_slots(), 0);
  for (auto& f : dec.forests) f = scan_first_forest(g, taken);

  MultiGraph out;
  out.reserve_node_slots(g.node_slots());
  for (std::size_t v = 0; v < g.node_slots(); ++v) {
    auto id = static_cast<NodeId>(v);
    out.set_label(id, g.label(id));
    if (g.node_alive(id)) out.revive_node(id);
  }
  for (std::size_t e = 0; e < taken.size(); ++e) {
    if (!taken[e]) continue;
    auto id = static_cast<EdgeId>(e);
    dec.kept.push_back(id);
    out.add_edge_at(id, g.ends(id).u, g.ends(id).v);
  }
  return {std::move(out), std::move(dec)};
}

}  // namespace tricert
