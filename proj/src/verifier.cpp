#include "tricert/verifier.hpp"

#include <algorithm>

#include "tricert/subdivision.hpp"

namespace tricert {

namespace {

Verdict reject(std::string reason, std::optional<std::size_t> step = std::nullopt) {
  return {false, std::move(reason), step};
}

// Edge ownership: path step i owns 3i, expand arm k of step i owns 3i + k,
// S0 owns 3z. Smoothing may only merge edges of one owner.
struct Owners {
  std::vector<int> of;        // edge -> owner, -1 if none
  std::vector<int> live;      // owner -> live edge count
  std::vector<EdgeId> first;  // owner -> lowest edge id
};

bool adjacent_via(const MultiGraph& g, NodeId small_deg, NodeId other) {
  for (auto s : g.incidence(small_deg))
    if (g.other(s.edge, small_deg) == other) return true;
  return false;
}

bool same_neighbourhood_deg2(const MultiGraph& g, NodeId a, NodeId b) {
  auto na = g.neighbors(a);
  auto nb = g.neighbors(b);
  return na == nb;
}

// Residue must be a subdivision of K4.
std::optional<std::string> check_residue(const MultiGraph& g) {
  std::vector<NodeId> branch;
  for (NodeId v : g.live_nodes()) {
    int d = g.degree(v);
    if (d == 3) branch.push_back(v);
    else if (d != 2) return "residue node " + std::to_string(g.label(v)) + " has degree " + std::to_string(d);
  }
  if (branch.size() != 4) return "residue has " + std::to_string(branch.size()) + " branch nodes, expected 4";
  std::vector<std::uint64_t> pairs;
  std::size_t walked = 0;
  for (NodeId b : branch) {
    for (auto s : g.incidence(b)) {
      NodeId prev = b;
      EdgeId e = s.edge;
      NodeId cur = g.other(e, b);
      ++walked;
      while (g.degree(cur) == 2) {
        auto inc = g.incidence(cur);
        EdgeId next = inc[0].edge == e ? inc[1].edge : inc[0].edge;
        prev = cur;
        e = next;
        cur = g.other(e, prev);
        ++walked;
        if (walked > 2 * g.edge_count()) return std::string("residue contains a cycle without branch nodes");
      }
      if (cur == b) return std::string("residue has a link closing on itself");
      pairs.push_back(pair_key(b, cur));
    }
  }
  if (walked != 2 * g.edge_count()) return std::string("residue has edges outside the four branch nodes' links");
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  if (pairs.size() != 6) return std::string("smoothed residue is not K4");
  return std::nullopt;
}

Verdict check_basic(const MultiGraph& gs, const PathRepresentation& pr) {
  std::optional<SubdivisionState> s;
  try {
    s = SubdivisionState::init(gs, pr.s0_edges);
  } catch (const StructureError& e) {
    return reject(std::string("S0: ") + e.what());
  }
  for (std::size_t i = 0; i < pr.steps.size(); ++i) {
    try {
      if (const auto* p = std::get_if<BGPath>(&pr.steps[i])) {
        NodeId a = p->front();
        NodeId b = p->back();
        bool both_real = s->is_real(a) && s->is_real(b);
        if (both_real && s->parallel_count(a, b) > 0) return reject("step creates parallel links (not basic)", i);
        s->apply_bg_path(*p);
      } else {
        s->apply_expand(std::get<ExpandRecord>(pr.steps[i]));
      }
    } catch (const UsageError& e) {
      return reject(std::string("forward replay: ") + e.what(), i);
    }
  }
  return {true, {}, std::nullopt};
}

}  // namespace

Verdict verify_certificate(const MultiGraph& g_raw, const PathRepresentation& pr, bool basic_mode) {
  auto [gs, report] = simplify(g_raw);
  if (gs.node_count() < 4) return reject("graph has fewer than 4 nodes");
  if (gs.min_degree() < 3) return reject("graph has a node of degree below 3");

  const std::size_t z = pr.steps.size();
  const int s0_owner = static_cast<int>(3 * z);
  Owners own{std::vector<int>(gs.edge_slots(), -1), std::vector<int>(3 * z + 1, 0),
             std::vector<EdgeId>(3 * z + 1, kNoEdge)};
  auto claim = [&](EdgeId e, int owner) {
    if (!gs.edge_alive(e) || own.of[e] >= 0) return false;
    own.of[e] = owner;
    ++own.live[owner];
    if (own.first[owner] == kNoEdge || e < own.first[owner]) own.first[owner] = e;
    return true;
  };

  for (EdgeId e : pr.s0_edges)
    if (!claim(e, s0_owner)) return reject("S0 lists a non-edge or repeats an edge");

  // Partition: every step is a path in G and the steps plus S0 cover E exactly once.
  std::vector<std::size_t> stamp(gs.node_slots(), SIZE_MAX);
  auto claim_path = [&](std::span<const NodeId> nodes, int owner, std::size_t i, bool first_may_repeat) {
    if (nodes.size() < 2) return false;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      NodeId v = nodes[k];
      if (!gs.node_alive(v)) return false;
      if (stamp[v] == i && !(k == 0 && first_may_repeat)) return false;
      stamp[v] = i;
    }
    for (EdgeId e : path_edges(gs, nodes))
      if (!claim(e, owner)) return false;
    return true;
  };
  for (std::size_t i = 0; i < z; ++i) {
    const int base = static_cast<int>(3 * i);
    if (const auto* p = std::get_if<BGPath>(&pr.steps[i])) {
      if (!claim_path(p->nodes, base, i, false)) return reject("step is not a path over unused edges of G", i);
      continue;
    }
    const auto& x = std::get<ExpandRecord>(pr.steps[i]);
    for (int k = 0; k < 3; ++k) {
      const auto& arm = x.arms[static_cast<std::size_t>(k)];
      if (arm.empty() || arm.front() != x.center || !claim_path(arm, base + k, i, k > 0))
        return reject("expand arm is not a path over unused edges of G", i);
    }
  }
  for (EdgeId e : gs.live_edges())
    if (own.of[e] < 0) return reject("edge " + std::to_string(gs.label(gs.ends(e).u)) + "-" +
                                     std::to_string(gs.label(gs.ends(e).v)) + " is not covered");

  // Reverse removal.
  MultiGraph w = gs;
  auto single_edge = [&](int owner, NodeId p, NodeId q) -> EdgeId {
    EdgeId e = own.first[owner];
    if (own.live[owner] != 1 || !w.edge_alive(e)) return kNoEdge;
    auto [u, v] = w.ends(e);
    return (u == p && v == q) || (u == q && v == p) ? e : kNoEdge;
  };
  auto delete_edge = [&](EdgeId e) {
    --own.live[own.of[e]];
    w.remove_edge(e);
  };
  auto smooth = [&](NodeId v) {
    auto inc = w.incidence(v);
    if (own.of[inc[0].edge] != own.of[inc[1].edge]) return false;
    int owner = own.of[inc[0].edge];
    if (!w.smooth(v, SmoothIds::kKeepLowest)) return false;
    --own.live[owner];
    return true;
  };

  for (std::size_t i = z; i-- > 0;) {
    const int base = static_cast<int>(3 * i);
    if (const auto* p = std::get_if<BGPath>(&pr.steps[i])) {
      NodeId a = p->front();
      NodeId b = p->back();
      EdgeId e = single_edge(base, a, b);
      if (e == kNoEdge) return reject("step is not reduced to a single edge at its removal", i);
      delete_edge(e);
      int da = w.degree(a);
      int db = w.degree(b);
      if (da < 2 || db < 2) return reject("endpoint does not lie on the remaining subdivision (condition 1)", i);
      if ((da == 2 && adjacent_via(w, a, b)) || (db == 2 && adjacent_via(w, b, a)))
        return reject("endpoints lie on one link (condition 2)", i);
      if (da == 2 && db == 2 && same_neighbourhood_deg2(w, a, b))
        return reject("endpoints are inner nodes of parallel links (condition 3)", i);
      if (da == 2 && !smooth(a)) return reject("endpoint cannot be smoothed", i);
      if (db == 2 && !smooth(b)) return reject("endpoint cannot be smoothed", i);
      continue;
    }
    const auto& x = std::get<ExpandRecord>(pr.steps[i]);
    NodeId c = x.center;
    if (w.degree(c) != 3) return reject("expand center does not have degree 3 at its removal", i);
    std::array<NodeId, 3> anchors{x.anchor(0), x.anchor(1), x.anchor(2)};
    std::array<EdgeId, 3> arm_edges{};
    for (int k = 0; k < 3; ++k) {
      arm_edges[static_cast<std::size_t>(k)] = single_edge(base + k, c, anchors[static_cast<std::size_t>(k)]);
      if (arm_edges[static_cast<std::size_t>(k)] == kNoEdge) return reject("expand arm is not reduced to a single edge", i);
    }
    if (anchors[0] == anchors[1] || anchors[0] == anchors[2] || anchors[1] == anchors[2])
      return reject("expand anchors are not distinct", i);
    for (EdgeId e : arm_edges) delete_edge(e);
    w.kill_node(c);
    for (NodeId a : anchors)
      if (w.degree(a) < 3) return reject("expand anchor is not a real node", i);
  }

  if (auto bad = check_residue(w)) return reject("S0: " + *bad);
  if (basic_mode) return check_basic(gs, pr);
  return {true, {}, std::nullopt};
}

bool verify_witness(const MultiGraph& g_raw, const Witness& wit) {
  auto [g, report] = simplify(g_raw);
  switch (wit.kind) {
    case WitnessKind::kTooFewNodes: return g.node_count() < 4;
    case WitnessKind::kLowDegree: return g.node_alive(wit.u) && g.degree(wit.u) <= 2;
    case WitnessKind::kDisconnected: return connected_components(g).size() > 1;
    case WitnessKind::kCutVertex: return g.node_alive(wit.u) && component_count_without(g, wit.u) > 1;
    case WitnessKind::kSeparationPair:
      return g.node_alive(wit.u) && g.node_alive(wit.v) && wit.u != wit.v &&
             component_count_without(g, wit.u, wit.v) > 1;
  }
  return false;
}

}  // namespace tricert
