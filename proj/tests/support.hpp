#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <vector>

#include "tricert/graph.hpp"
#include "tricert/subdivision.hpp"

namespace testing {

using namespace tricert;

inline MultiGraph graph(const std::string& text) { return parse_graph(text); }

inline NodeId node(const MultiGraph& g, Label l) {
  auto m = label_lookup(g);
  auto it = m.find(l);
  return it == m.end() ? kNoNode : it->second;
}

inline std::vector<NodeId> nodes(const MultiGraph& g, std::initializer_list<Label> ls) {
  std::vector<NodeId> out;
  for (Label l : ls) out.push_back(node(g, l));
  return out;
}

inline BGPath path(const MultiGraph& g, std::initializer_list<Label> ls) { return BGPath{nodes(g, ls)}; }

inline EdgeId edge(const MultiGraph& g, Label a, Label b) {
  auto ids = nodes(g, {a, b});
  for (auto s : g.incidence(ids[0]))
    if (g.other(s.edge, ids[0]) == ids[1]) return s.edge;
  return kNoEdge;
}

inline std::vector<EdgeId> edges(const MultiGraph& g, std::initializer_list<std::pair<Label, Label>> ps) {
  std::vector<EdgeId> out;
  for (auto [a, b] : ps) out.push_back(edge(g, a, b));
  std::sort(out.begin(), out.end());
  return out;
}

inline const char* k4 = "1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n";
// K4 on 1..4 plus node 5 joined to 1, 2, 3.
inline const char* k4_plus5 = "1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n1 5\n5 2\n5 3\n";
inline const char* k4_minus34 = "1 2\n1 3\n1 4\n2 3\n2 4\n";

// Eight node example, a..h as 1..8: S0 is everything but e-h-g.
inline const char* eight_node = "1 2\n2 3\n1 5\n5 6\n4 7\n7 6\n1 4\n3 6\n3 4\n5 8\n8 7\n";

inline std::vector<EdgeId> k4_edges(const MultiGraph& g) {
  return edges(g, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
}

}  // namespace testing
