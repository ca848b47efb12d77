#include "tricert/sequencer.hpp"

#include <algorithm>
#include <stdexcept>

#include "tricert/errors.hpp"
#include "tricert/k4_finder.hpp"
#include "tricert/sparsifier.hpp"
#include "tricert/transforms.hpp"
#include "tricert/verifier.hpp"

namespace tricert {

namespace {

// Iterative DFS from `start` over host edges accepted by `use_edge`, entering
// only nodes accepted by `passable`; stops at the first node with `goal`.
// Returns the tree path start..goal, or empty.
template <typename UseEdge, typename Passable, typename Goal>
std::vector<NodeId> dfs_path(const MultiGraph& g, NodeId start, UseEdge use_edge, Passable passable, Goal goal) {
  std::vector<NodeId> parent(g.node_slots(), kNoNode);
  std::vector<char> seen(g.node_slots(), 0);
  std::vector<std::pair<NodeId, std::size_t>> stack{{start, 0}};
  seen[start] = 1;
  while (!stack.empty()) {
    auto& [v, cur] = stack.back();
    auto inc = g.incidence(v);
    if (cur == inc.size()) {
      stack.pop_back();
      continue;
    }
    auto s = inc[cur++];
    if (!use_edge(s.edge)) continue;
    NodeId w = g.other(s.edge, v);
    if (seen[w]) continue;
    seen[w] = 1;
    parent[w] = v;
    if (goal(w)) {
      std::vector<NodeId> path;
      for (NodeId x = w; x != kNoNode; x = parent[x]) path.push_back(x);
      std::reverse(path.begin(), path.end());
      return path;
    }
    if (passable(w)) stack.emplace_back(w, 0);
  }
  return {};
}

std::variant<BGPath, Witness> search_unsmooth(const MultiGraph& g, const SubdivisionState& s, NodeId x) {
  const Link& t = s.inner_link(x);
  const NodeId a = t.a;
  const NodeId b = t.b;
  const auto key = pair_key(a, b);
  auto on_t_or_parallel = [&](NodeId v) {
    if (!s.contains_node(v) || !s.is_inner(v)) return false;
    const Link& l = s.inner_link(v);
    return pair_key(l.a, l.b) == key;
  };
  auto path = dfs_path(
      g, x, [](EdgeId) { return true; },
      [&](NodeId v) { return v != a && v != b && (!s.contains_node(v) || on_t_or_parallel(v)); },
      [&](NodeId v) { return v != a && v != b && s.contains_node(v) && !on_t_or_parallel(v); });
  if (path.empty()) return Witness::separation_pair(a, b);
  std::size_t from = 0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    if (on_t_or_parallel(path[i])) from = i;
  return BGPath{std::vector<NodeId>(path.begin() + static_cast<std::ptrdiff_t>(from), path.end())};
}

std::variant<BGPath, Witness> search_smooth(const MultiGraph& g, const SubdivisionState& s) {
  const bool all_nodes = s.node_count() == g.node_count();
  if (all_nodes) {
    EdgeId best = kNoEdge;
    for (EdgeId e : g.live_edges())
      if (!s.contains_edge(e) && (best == kNoEdge || e < best)) best = e;
    return BGPath{{g.ends(best).u, g.ends(best).v}};
  }
  NodeId x = kNoNode;
  for (NodeId v : g.live_nodes()) {
    if (!s.contains_node(v)) continue;
    for (auto sl : g.incidence(v))
      if (!s.contains_edge(sl.edge)) {
        x = v;
        break;
      }
    if (x != kNoNode) break;
  }
  auto path = dfs_path(
      g, x, [&](EdgeId e) { return !s.contains_edge(e); }, [&](NodeId v) { return !s.contains_node(v); },
      [&](NodeId v) { return s.contains_node(v); });
  if (path.empty()) return Witness::cut_vertex(x);
  return BGPath{std::move(path)};
}

std::optional<Witness> gate(const MultiGraph& g) {
  if (g.node_count() < 4) return Witness::too_few_nodes();
  if (connected_components(g).size() > 1) return Witness::disconnected();
  for (NodeId v : g.live_nodes())
    if (g.degree(v) < 3) return Witness::low_degree(v);
  return std::nullopt;
}

std::vector<EdgeId> resolve_s0(const MultiGraph& raw, const MultiGraph& gs, const std::vector<EdgeId>& s0) {
  auto lookup = edge_lookup(gs);
  std::vector<EdgeId> out;
  for (EdgeId e : s0) {
    if (!raw.edge_alive(e) || raw.is_loop(e)) throw StructureError("S0 edge " + std::to_string(e) + " is not a usable edge");
    out.push_back(lookup.at(pair_key(raw.ends(e).u, raw.ends(e).v)));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct Grown {
  std::variant<PathRepresentation, Witness> verdict;
  std::vector<EdgeId> leftover;
};

Grown grow(const MultiGraph& gs, const std::optional<std::vector<EdgeId>>& s0, bool sparsify) {
  MultiGraph host = sparsify ? sparsify3(gs).first : gs;
  if (s0)
    for (EdgeId e : *s0)
      if (!host.edge_alive(e)) host.add_edge_at(e, gs.ends(e).u, gs.ends(e).v);

  Grown out;
  PathRepresentation pr;
  if (s0) {
    pr.s0_edges = *s0;
  } else {
    auto k4 = find_k4_subdivision(host);
    if (!k4.found()) {
      out.verdict = *k4.witness;
      return out;
    }
    pr.s0_edges = k4.edges;
  }
  auto s = SubdivisionState::init(host, pr.s0_edges);
  while (!s.covers_host()) {
    auto next = find_bg_path(host, s);
    if (auto* w = std::get_if<Witness>(&next)) {
      out.verdict = *w;
      return out;
    }
    auto& p = std::get<BGPath>(next);
    s.apply_bg_path(p);
    pr.steps.emplace_back(std::move(p));
  }
  for (EdgeId e : gs.live_edges()) {
    if (host.edge_alive(e)) continue;
    out.leftover.push_back(e);
    pr.steps.emplace_back(BGPath{{gs.ends(e).u, gs.ends(e).v}});
  }
  out.verdict = std::move(pr);
  return out;
}

}  // namespace

std::variant<BGPath, Witness> find_bg_path(const MultiGraph& g, const SubdivisionState& s) {
  if (s.covers_host()) throw UsageError("subdivision already covers the graph");
  if (auto x = s.smallest_inner_node()) return search_unsmooth(g, s, *x);
  return search_smooth(g, s);
}

CertifyResult certify(const MultiGraph& g_raw, const CertifyOptions& opts) {
  CertifyResult res;
  auto [gs, report] = simplify(g_raw);
  res.simplify_report = std::move(report);
  if (auto w = gate(gs)) {
    res.verdict = *w;
    return res;
  }
  std::optional<std::vector<EdgeId>> s0;
  if (opts.s0) s0 = resolve_s0(g_raw, gs, *opts.s0);

  Grown grown = grow(gs, s0, opts.sparsify);
  if (opts.sparsify && std::holds_alternative<Witness>(grown.verdict) &&
      !verify_witness(g_raw, std::get<Witness>(grown.verdict))) {
    res.sparsifier_bypassed = true;
    grown = grow(gs, s0, false);
  }
  if (auto* w = std::get_if<Witness>(&grown.verdict)) {
    if (!verify_witness(g_raw, *w)) throw std::logic_error("search produced a witness that does not hold");
    res.verdict = *w;
    return res;
  }
  res.sparsifier_leftover = std::move(grown.leftover);
  auto& pr = std::get<PathRepresentation>(grown.verdict);
  if (opts.basic) pr = to_basic(gs, pr);
  res.verdict = std::move(pr);
  return res;
}

}  // namespace tricert
