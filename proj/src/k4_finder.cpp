#include "tricert/k4_finder.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace tricert {

namespace {

struct DfsTree {
  std::vector<NodeId> parent;
  std::vector<EdgeId> parent_edge;
  std::vector<int> pre;    // preorder number, -1 if unvisited
  std::vector<int> size;   // subtree size
  std::vector<int> depth;
  std::vector<int> children;
  std::vector<NodeId> order;  // nodes by preorder
};

// Iterative DFS visiting incident edges in incidence (ascending id) order.
DfsTree run_dfs(const MultiGraph& g, NodeId root) {
  const std::size_t n = g.node_slots();
  DfsTree t{std::vector<NodeId>(n, kNoNode), std::vector<EdgeId>(n, kNoEdge), std::vector<int>(n, -1),
            std::vector<int>(n, 1), std::vector<int>(n, 0), std::vector<int>(n, 0), {}};
  std::vector<std::size_t> cursor(n, 0);
  std::vector<NodeId> stack{root};
  t.pre[root] = 0;
  t.order.push_back(root);
  while (!stack.empty()) {
    NodeId v = stack.back();
    auto inc = g.incidence(v);
    if (cursor[v] == inc.size()) {
      stack.pop_back();
      if (t.parent[v] != kNoNode) t.size[t.parent[v]] += t.size[v];
      continue;
    }
    auto s = inc[cursor[v]++];
    NodeId w = g.other(s.edge, v);
    if (t.pre[w] >= 0) continue;
    t.pre[w] = static_cast<int>(t.order.size());
    t.order.push_back(w);
    t.parent[w] = v;
    t.parent_edge[w] = s.edge;
    t.depth[w] = t.depth[v] + 1;
    ++t.children[v];
    stack.push_back(w);
  }
  return t;
}

NodeId lca(const DfsTree& t, NodeId x, NodeId y) {
  while (t.depth[x] > t.depth[y]) x = t.parent[x];
  while (t.depth[y] > t.depth[x]) y = t.parent[y];
  while (x != y) {
    x = t.parent[x];
    y = t.parent[y];
  }
  return x;
}

bool in_subtree(const DfsTree& t, NodeId root, NodeId v) {
  return t.pre[v] >= t.pre[root] && t.pre[v] < t.pre[root] + t.size[root];
}

// Tree edges on the path between an ancestor and a descendant.
void tree_path_edges(const DfsTree& t, NodeId ancestor, NodeId descendant, std::vector<EdgeId>& out) {
  for (NodeId v = descendant; v != ancestor; v = t.parent[v]) out.push_back(t.parent_edge[v]);
}

EdgeId edge_between(const MultiGraph& g, NodeId u, NodeId v) {
  for (auto s : g.incidence(u))
    if (g.other(s.edge, u) == v) return s.edge;
  return kNoEdge;
}

}  // namespace

bool is_k4_subdivision(const MultiGraph& g, const std::vector<EdgeId>& edges) {
  try {
    auto s = SubdivisionState::init(g, edges);
    return s.real_count() == 4 && s.links().size() == 6;
  } catch (const StructureError&) {
    return false;
  }
}

K4Result find_k4_subdivision(const MultiGraph& g) {
  K4Result res;
  auto fail = [&](Witness w) {
    res.witness = w;
    return res;
  };
  if (g.node_count() < 4) return fail(Witness::too_few_nodes());
  for (NodeId v : g.live_nodes())
    if (g.degree(v) < 3) return fail(Witness::low_degree(v));

  NodeId a = g.live_nodes().front();
  DfsTree t = run_dfs(g, a);
  if (t.order.size() != g.node_count()) return fail(Witness::disconnected());
  if (t.children[a] >= 2) return fail(Witness::cut_vertex(a));
  NodeId b = t.order[1];
  if (t.children[b] >= 2) return fail(Witness::separation_pair(a, b));

  // Two neighbours of a other than b; c is the one visited first.
  std::vector<NodeId> cand;
  for (auto s : g.incidence(a)) {
    NodeId w = g.other(s.edge, a);
    if (w != b && std::find(cand.begin(), cand.end(), w) == cand.end()) cand.push_back(w);
    if (cand.size() == 2) break;
  }
  NodeId c = cand[0];
  NodeId d = cand[1];
  if (t.pre[c] > t.pre[d]) std::swap(c, d);
  NodeId i = lca(t, c, d);
  NodeId j = d;
  while (t.parent[j] != i) j = t.parent[j];

  // Backedge from subtree(j) to an inner node of the tree path a -> i.
  NodeId z = kNoNode;
  NodeId zp = kNoNode;
  for (int k = t.pre[j]; k < t.pre[j] + t.size[j] && z == kNoNode; ++k) {
    NodeId v = t.order[static_cast<std::size_t>(k)];
    for (auto s : g.incidence(v)) {
      NodeId w = g.other(s.edge, v);
      if (w != a && t.pre[w] < t.pre[i]) {
        z = v;
        zp = w;
        break;
      }
    }
  }
  if (z == kNoNode) return fail(Witness::separation_pair(a, i));

  // Branch nodes a, z', i and z'' = lca(z, d); z'' lies strictly below i.
  NodeId zz = lca(t, z, d);
  std::vector<EdgeId> edges;
  tree_path_edges(t, a, i, edges);   // a -> z' -> i
  tree_path_edges(t, i, zz, edges);  // i -> z''
  tree_path_edges(t, zz, d, edges);  // z'' -> d, then d - a
  edges.push_back(edge_between(g, d, a));
  tree_path_edges(t, zz, z, edges);  // z'' -> z, then z - z'
  edges.push_back(edge_between(g, z, zp));
  tree_path_edges(t, i, c, edges);   // c -> i, then c - a
  edges.push_back(edge_between(g, c, a));
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  bool wiring_ok = in_subtree(t, j, zz) && std::find(edges.begin(), edges.end(), kNoEdge) == edges.end() &&
                   is_k4_subdivision(g, edges);
  if (wiring_ok) {
    res.edges = std::move(edges);
    return res;
  }
  auto generic = extract_k4_generic(g);
  if (!generic) throw std::logic_error("K4 subdivision extraction failed on a graph with a valid DFS shape");
  res.edges = std::move(*generic);
  res.used_fallback = true;
  return res;
}

std::optional<std::vector<EdgeId>> extract_k4_generic(const MultiGraph& g) {
  auto nodes = g.live_nodes();
  if (nodes.size() < 4) return std::nullopt;
  DfsTree t = run_dfs(g, nodes.front());

  // Cycle: first non-tree edge met in preorder, closed by its tree path.
  std::vector<char> in_struct_edge(g.edge_slots(), 0);
  std::vector<int> path_idx(g.node_slots(), -2);  // -2 outside, -1 branch, k inner of theta path k
  std::vector<NodeId> cycle;
  for (NodeId v : t.order) {
    for (auto s : g.incidence(v)) {
      NodeId w = g.other(s.edge, v);
      if (s.edge == t.parent_edge[v] || s.edge == t.parent_edge[w] || t.pre[w] < 0 || t.pre[w] > t.pre[v]) continue;
      for (NodeId x = v; x != w; x = t.parent[x]) {
        cycle.push_back(x);
        in_struct_edge[t.parent_edge[x]] = 1;
      }
      cycle.push_back(w);
      in_struct_edge[s.edge] = 1;
      break;
    }
    if (!cycle.empty()) break;
  }
  if (cycle.empty()) return std::nullopt;
  std::vector<char> in_struct(g.node_slots(), 0);
  for (NodeId v : cycle) in_struct[v] = 1;

  // Path from structure node s to structure node t != s, internally outside
  // the structure, with accept(s, t). Multi-start in ascending node order.
  auto find_ear = [&](auto accept) -> std::vector<NodeId> {
    std::vector<NodeId> prev(g.node_slots(), kNoNode);
    std::vector<int> stamp(g.node_slots(), -1);
    for (NodeId s : g.live_nodes()) {
      if (!in_struct[s]) continue;
      for (auto sl : g.incidence(s)) {
        if (in_struct_edge[sl.edge]) continue;
        NodeId w = g.other(sl.edge, s);
        if (in_struct[w]) {
          if (w != s && accept(s, w)) return {s, w};
          continue;
        }
        if (stamp[w] == s) continue;
        std::deque<NodeId> q{w};
        stamp[w] = s;
        prev[w] = s;
        while (!q.empty()) {
          NodeId x = q.front();
          q.pop_front();
          for (auto e : g.incidence(x)) {
            NodeId y = g.other(e.edge, x);
            if (in_struct[y]) {
              if (y != s && accept(s, y)) {
                std::vector<NodeId> path{y};
                for (NodeId p = x; p != s; p = prev[p]) path.push_back(p);
                path.push_back(s);
                std::reverse(path.begin(), path.end());
                return path;
              }
              continue;
            }
            if (stamp[y] == s) continue;
            stamp[y] = s;
            prev[y] = x;
            q.push_back(y);
          }
        }
      }
    }
    return {};
  };
  auto add_path = [&](const std::vector<NodeId>& p) {
    for (std::size_t k = 0; k + 1 < p.size(); ++k) {
      in_struct_edge[edge_between(g, p[k], p[k + 1])] = 1;
      in_struct[p[k]] = 1;
    }
    in_struct[p.back()] = 1;
  };

  auto ear1 = find_ear([](NodeId, NodeId) { return true; });
  if (ear1.empty()) return std::nullopt;
  NodeId u = ear1.front();
  NodeId v = ear1.back();
  // Label theta paths: the two cycle arcs between u and v, and the ear.
  auto ui = static_cast<std::size_t>(std::find(cycle.begin(), cycle.end(), u) - cycle.begin());
  auto vi = static_cast<std::size_t>(std::find(cycle.begin(), cycle.end(), v) - cycle.begin());
  if (ui > vi) std::swap(ui, vi);
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    if (k == ui || k == vi) path_idx[cycle[k]] = -1;
    else path_idx[cycle[k]] = (k > ui && k < vi) ? 0 : 1;
  }
  add_path(ear1);
  for (std::size_t k = 1; k + 1 < ear1.size(); ++k) path_idx[ear1[k]] = 2;

  auto ear2 = find_ear([&](NodeId s, NodeId w) {
    return path_idx[s] >= 0 && path_idx[w] >= 0 && path_idx[s] != path_idx[w];
  });
  if (ear2.empty()) return std::nullopt;
  add_path(ear2);

  std::vector<EdgeId> edges;
  for (std::size_t e = 0; e < in_struct_edge.size(); ++e)
    if (in_struct_edge[e]) edges.push_back(static_cast<EdgeId>(e));
  if (!is_k4_subdivision(g, edges)) return std::nullopt;
  return edges;
}

}  // namespace tricert
