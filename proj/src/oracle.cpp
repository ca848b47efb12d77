#include "tricert/oracle.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

namespace tricert {

bool is_3_connected_brute(const MultiGraph& g_raw) {
  auto [g, report] = simplify(g_raw);
  if (g.node_count() < 4) return false;
  if (connected_components(g).size() != 1) return false;
  auto nodes = g.live_nodes();
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i + 1; j < nodes.size(); ++j)
      if (component_count_without(g, nodes[i], nodes[j]) > 1) return false;
  return true;
}

MultiGraph gen_3_connected(std::size_t n_target, std::uint64_t seed, OpMix mix) {
  if (mix.b == 0 && mix.c == 0) mix.b = 1;
  const std::uint64_t total = std::uint64_t{mix.a} + mix.b + mix.c;
  std::mt19937_64 rng(seed);
  std::vector<std::pair<NodeId, NodeId>> edges{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  std::unordered_set<std::uint64_t> adj;
  for (auto [u, v] : edges) adj.insert(pair_key(u, v));
  auto n = static_cast<NodeId>(4);
  const auto target = static_cast<NodeId>(std::max<std::size_t>(n_target, 4));

  auto subdivide = [&](std::size_t idx, NodeId x) {
    auto [p, q] = edges[idx];
    adj.erase(pair_key(p, q));
    edges[idx] = {p, x};
    edges.emplace_back(x, q);
    adj.insert(pair_key(p, x));
    adj.insert(pair_key(x, q));
  };
  auto join = [&](NodeId u, NodeId v) {
    edges.emplace_back(u, v);
    adj.insert(pair_key(u, v));
  };

  while (n < target) {
    std::uint64_t r = rng() % total;
    if (r < mix.a) {
      auto full = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
      if (edges.size() == full) continue;
      for (int attempt = 0; attempt < 32; ++attempt) {
        auto u = static_cast<NodeId>(rng() % static_cast<std::uint64_t>(n));
        auto v = static_cast<NodeId>(rng() % static_cast<std::uint64_t>(n));
        if (u != v && !adj.count(pair_key(u, v))) {
          join(u, v);
          break;
        }
      }
    } else if (r < mix.a + mix.b || n + 2 > target) {
      std::size_t idx = rng() % edges.size();
      auto [p, q] = edges[idx];
      NodeId y = 0;
      do {
        y = static_cast<NodeId>(rng() % static_cast<std::uint64_t>(n));
      } while (y == p || y == q);
      NodeId x = n++;
      subdivide(idx, x);
      join(x, y);
    } else {
      std::size_t i = rng() % edges.size();
      std::size_t j = rng() % (edges.size() - 1);
      if (j >= i) ++j;
      NodeId x = n++;
      NodeId y = n++;
      subdivide(i, x);
      subdivide(j, y);
      join(x, y);
    }
  }
  MultiGraph g(static_cast<std::size_t>(n));
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

MultiGraph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  MultiGraph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng) < p) g.add_edge(static_cast<NodeId>(i), static_cast<NodeId>(j));
  return g;
}

MultiGraph graph_from_mask(std::size_t n, std::uint64_t mask) {
  MultiGraph g(n);
  std::size_t bit = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++bit)
      if (mask >> bit & 1U) g.add_edge(static_cast<NodeId>(i), static_cast<NodeId>(j));
  return g;
}

const char* to_string(MutationKind k) {
  switch (k) {
    case MutationKind::kDropStep: return "drop-step";
    case MutationKind::kDuplicateStep: return "duplicate-step";
    case MutationKind::kRedirectEndpoint: return "redirect-endpoint";
    case MutationKind::kSwapDependent: return "swap-dependent";
    case MutationKind::kDeleteS0Edge: return "delete-s0-edge";
  }
  return "?";
}

namespace {

bool redirect(const MultiGraph& g, std::vector<Step>& steps, std::mt19937_64& rng) {
  std::vector<std::size_t> paths;
  for (std::size_t i = 0; i < steps.size(); ++i)
    if (std::holds_alternative<BGPath>(steps[i])) paths.push_back(i);
  if (paths.empty()) return false;
  auto nodes = g.live_nodes();
  const std::size_t off = rng() % paths.size();
  const bool back = rng() % 2 == 1;
  for (std::size_t t = 0; t < paths.size(); ++t) {
    auto& p = std::get<BGPath>(steps[paths[(off + t) % paths.size()]]).nodes;
    for (int side = 0; side < 2; ++side) {
      bool at_back = back != (side == 1);
      NodeId nb = at_back ? p[p.size() - 2] : p[1];
      auto adj = g.neighbors(nb);
      const std::size_t start = rng() % nodes.size();
      for (std::size_t k = 0; k < nodes.size(); ++k) {
        NodeId cand = nodes[(start + k) % nodes.size()];
        if (cand == nb || std::binary_search(adj.begin(), adj.end(), cand)) continue;
        if (std::find(p.begin(), p.end(), cand) != p.end()) continue;
        (at_back ? p.back() : p.front()) = cand;
        return true;
      }
    }
  }
  return false;
}

bool swap_dependent(const MultiGraph& g, std::vector<Step>& steps, std::mt19937_64& rng) {
  std::vector<int> inner_of(g.node_slots(), -1);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  auto mark = [&](const std::vector<NodeId>& seq, std::size_t i) {
    for (std::size_t k = 1; k + 1 < seq.size(); ++k) inner_of[seq[k]] = static_cast<int>(i);
  };
  auto depends = [&](NodeId end, std::size_t j) {
    if (inner_of[end] >= 0) pairs.emplace_back(static_cast<std::size_t>(inner_of[end]), j);
  };
  for (std::size_t j = 0; j < steps.size(); ++j) {
    if (const auto* p = std::get_if<BGPath>(&steps[j])) {
      depends(p->front(), j);
      depends(p->back(), j);
      mark(p->nodes, j);
    } else {
      const auto& x = std::get<ExpandRecord>(steps[j]);
      for (std::size_t a = 0; a < 3; ++a) depends(x.anchor(a), j);
      for (const auto& arm : x.arms) mark(arm, j);
    }
  }
  if (pairs.empty()) return false;
  auto [i, j] = pairs[rng() % pairs.size()];
  std::swap(steps[i], steps[j]);
  return true;
}

}  // namespace

Mutation mutate_certificate(const MultiGraph& g, const PathRepresentation& pr, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto first = static_cast<int>(rng() % 5);
  for (int t = 0; t < 5; ++t) {
    auto kind = static_cast<MutationKind>((first + t) % 5);
    Mutation m{pr, kind, false};
    auto& steps = m.pr.steps;
    switch (kind) {
      case MutationKind::kDropStep:
        if (steps.empty()) continue;
        steps.erase(steps.begin() + static_cast<std::ptrdiff_t>(rng() % steps.size()));
        break;
      case MutationKind::kDuplicateStep: {
        if (steps.empty()) continue;
        auto at = static_cast<std::ptrdiff_t>(rng() % steps.size());
        Step copy = steps[static_cast<std::size_t>(at)];
        steps.insert(steps.begin() + at + 1, std::move(copy));
        break;
      }
      case MutationKind::kRedirectEndpoint:
        if (!redirect(g, steps, rng)) continue;
        break;
      case MutationKind::kSwapDependent:
        if (!swap_dependent(g, steps, rng)) continue;
        break;
      case MutationKind::kDeleteS0Edge:
        if (m.pr.s0_edges.empty()) continue;
        m.pr.s0_edges.erase(m.pr.s0_edges.begin() + static_cast<std::ptrdiff_t>(rng() % m.pr.s0_edges.size()));
        break;
    }
    m.applied = true;
    return m;
  }
  return {pr, MutationKind::kDropStep, false};
}

}  // namespace tricert
