#include "tricert/subdivision.hpp"

#include <algorithm>
#include <string>

namespace tricert {

const char* to_string(PathCheck c) {
  switch (c) {
    case PathCheck::kValid: return "valid";
    case PathCheck::kNotAPath: return "not a path in the host graph";
    case PathCheck::kCondition1: return "path meets the subdivision outside its endpoints";
    case PathCheck::kCondition2: return "both endpoints lie in one link";
    case PathCheck::kCondition3: return "endpoints are inner nodes of parallel links";
  }
  return "?";
}

namespace {

EdgeId lowest_edge_between(const MultiGraph& g, NodeId u, NodeId v) {
  if (!g.node_alive(u) || !g.node_alive(v)) return kNoEdge;
  NodeId scan = g.degree(u) <= g.degree(v) ? u : v;
  NodeId target = scan == u ? v : u;
  EdgeId best = kNoEdge;
  for (auto s : g.incidence(scan)) {
    if (g.other(s.edge, scan) == target && u != v && (best == kNoEdge || s.edge < best)) best = s.edge;
  }
  return best;
}

void orient(Link& l) {
  if (l.nodes.front() > l.nodes.back()) {
    std::reverse(l.nodes.begin(), l.nodes.end());
    std::reverse(l.edges.begin(), l.edges.end());
  }
  l.a = l.nodes.front();
  l.b = l.nodes.back();
}

void sort_links(std::vector<Link>& links) {
  for (auto& l : links) orient(l);
  std::sort(links.begin(), links.end(), [](const Link& x, const Link& y) {
    return *std::min_element(x.edges.begin(), x.edges.end()) < *std::min_element(y.edges.begin(), y.edges.end());
  });
}

}  // namespace

std::vector<EdgeId> path_edges(const MultiGraph& g, std::span<const NodeId> nodes) {
  std::vector<EdgeId> out;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) out.push_back(lowest_edge_between(g, nodes[i], nodes[i + 1]));
  return out;
}

std::vector<Link> compute_links(const MultiGraph& host, std::span<const char> edge_in) {
  std::vector<int> deg(host.node_slots(), 0);
  std::size_t total = 0;
  for (std::size_t e = 0; e < edge_in.size(); ++e) {
    if (!edge_in[e]) continue;
    auto [u, v] = host.ends(static_cast<EdgeId>(e));
    ++deg[u];
    ++deg[v];
    ++total;
  }
  for (std::size_t v = 0; v < deg.size(); ++v)
    if (deg[v] == 1) throw StructureError("node " + std::to_string(host.label(static_cast<NodeId>(v))) + " has degree 1");

  std::vector<char> used(edge_in.size(), 0);
  std::vector<Link> links;
  std::size_t covered = 0;
  for (std::size_t r = 0; r < deg.size(); ++r) {
    if (deg[r] < 3) continue;
    auto root = static_cast<NodeId>(r);
    for (auto s : host.incidence(root)) {
      if (!edge_in[s.edge] || used[s.edge]) continue;
      Link l;
      l.nodes.push_back(root);
      NodeId cur = root;
      EdgeId e = s.edge;
      while (true) {
        used[e] = 1;
        ++covered;
        l.edges.push_back(e);
        cur = host.other(e, cur);
        l.nodes.push_back(cur);
        if (deg[cur] != 2) break;
        EdgeId next = kNoEdge;
        for (auto t : host.incidence(cur))
          if (edge_in[t.edge] && !used[t.edge]) next = t.edge;
        if (next == kNoEdge) break;
        e = next;
      }
      if (l.nodes.front() == l.nodes.back())
        throw StructureError("link through node " + std::to_string(host.label(root)) + " closes on itself");
      links.push_back(std::move(l));
    }
  }
  if (covered != total) throw StructureError("edge set contains a cycle without branch nodes");
  sort_links(links);
  return links;
}

SubdivisionState::SubdivisionState(const MultiGraph& host)
    : host_(&host),
      degree_(host.node_slots(), 0),
      edge_in_(host.edge_slots(), 0),
      inner_link_of_(host.node_slots(), -1),
      edge_link_of_(host.edge_slots(), -1) {}

SubdivisionState SubdivisionState::init(const MultiGraph& host, std::span<const EdgeId> s0_edges) {
  SubdivisionState s(host);
  for (EdgeId e : s0_edges) {
    if (!host.edge_alive(e)) throw StructureError("S0 edge " + std::to_string(e) + " is not in the graph");
    if (host.is_loop(e)) throw StructureError("S0 contains a self-loop");
    if (s.edge_in_[e]) throw StructureError("S0 lists edge " + std::to_string(e) + " twice");
    s.add_edge(e);
  }
  auto links = compute_links(host, s.edge_in_);
  if (s.real_count_ < 4) throw StructureError("S0 has fewer than four branch nodes");
  for (auto& l : links) {
    if (s.parallel_count(l.a, l.b) > 0)
      throw StructureError("S0 has two links between " + std::to_string(host.label(l.a)) + " and " +
                           std::to_string(host.label(l.b)));
    s.add_link(std::move(l));
  }
  return s;
}

void SubdivisionState::set_degree(NodeId v, int d) {
  int old = degree_[v];
  if (old == 0 && d > 0) ++node_count_;
  if (old < 3 && d >= 3) ++real_count_;
  if (old >= 3 && d < 3) --real_count_;
  if (old == 2) inner_nodes_.erase(v);
  if (d == 2) inner_nodes_.insert(v);
  degree_[v] = d;
}

void SubdivisionState::add_edge(EdgeId e) {
  auto [u, v] = host_->ends(e);
  edge_in_[e] = 1;
  ++edge_count_;
  set_degree(u, degree_[u] + 1);
  set_degree(v, degree_[v] + 1);
}

int SubdivisionState::add_link(Link link) {
  int id = static_cast<int>(links_.size());
  link.a = link.nodes.front();
  link.b = link.nodes.back();
  for (std::size_t i = 1; i + 1 < link.nodes.size(); ++i) inner_link_of_[link.nodes[i]] = id;
  for (EdgeId e : link.edges) edge_link_of_[e] = id;
  add_pair(link.a, link.b);
  links_.push_back(std::move(link));
  link_alive_.push_back(1);
  return id;
}

void SubdivisionState::add_pair(NodeId a, NodeId b) { ++parallel_[pair_key(a, b)]; }

void SubdivisionState::drop_pair(NodeId a, NodeId b) {
  auto it = parallel_.find(pair_key(a, b));
  if (--it->second == 0) parallel_.erase(it);
}

int SubdivisionState::parallel_count(NodeId a, NodeId b) const {
  auto it = parallel_.find(pair_key(a, b));
  return it == parallel_.end() ? 0 : it->second;
}

std::vector<EdgeId> SubdivisionState::edges() const {
  std::vector<EdgeId> out;
  for (std::size_t e = 0; e < edge_in_.size(); ++e)
    if (edge_in_[e]) out.push_back(static_cast<EdgeId>(e));
  return out;
}

std::vector<Link> SubdivisionState::links() const {
  std::vector<Link> out;
  for (std::size_t i = 0; i < links_.size(); ++i)
    if (link_alive_[i]) out.push_back(links_[i]);
  sort_links(out);
  return out;
}

std::optional<NodeId> SubdivisionState::smallest_inner_node() const {
  if (inner_nodes_.empty()) return std::nullopt;
  return *inner_nodes_.begin();
}

EdgeId SubdivisionState::edge_outside(NodeId u, NodeId v) const {
  if (!host_->node_alive(u) || !host_->node_alive(v) || u == v) return kNoEdge;
  NodeId scan = host_->degree(u) <= host_->degree(v) ? u : v;
  NodeId target = scan == u ? v : u;
  EdgeId best = kNoEdge;
  for (auto s : host_->incidence(scan))
    if (!edge_in_[s.edge] && host_->other(s.edge, scan) == target && (best == kNoEdge || s.edge < best))
      best = s.edge;
  return best;
}

PathCheck SubdivisionState::check_bg_path(const BGPath& p) const {
  const auto& n = p.nodes;
  if (n.size() < 2) return PathCheck::kNotAPath;
  for (NodeId v : n)
    if (!host_->node_alive(v)) return PathCheck::kNotAPath;
  {
    std::vector<NodeId> sorted = n;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return PathCheck::kNotAPath;
  }
  bool any_edge_in_s = false;
  for (std::size_t i = 0; i + 1 < n.size(); ++i) {
    if (edge_outside(n[i], n[i + 1]) == kNoEdge) {
      if (lowest_edge_between(*host_, n[i], n[i + 1]) == kNoEdge) return PathCheck::kNotAPath;
      any_edge_in_s = true;
    }
  }
  NodeId x = n.front();
  NodeId y = n.back();
  if (!contains_node(x) || !contains_node(y) || any_edge_in_s) return PathCheck::kCondition1;
  for (std::size_t i = 1; i + 1 < n.size(); ++i)
    if (contains_node(n[i])) return PathCheck::kCondition1;

  auto shares_link = [&](NodeId inner, NodeId other) {
    const Link& l = inner_link(inner);
    return inner_link_of_[other] == inner_link_of_[inner] || other == l.a || other == l.b;
  };
  if ((is_inner(x) && shares_link(x, y)) || (is_inner(y) && shares_link(y, x))) return PathCheck::kCondition2;
  if (is_inner(x) && is_inner(y)) {
    const Link& lx = inner_link(x);
    const Link& ly = inner_link(y);
    if (pair_key(lx.a, lx.b) == pair_key(ly.a, ly.b)) return PathCheck::kCondition3;
  }
  return PathCheck::kValid;
}

void SubdivisionState::split_link_at(NodeId x) {
  int id = inner_link_of_[x];
  Link& l = links_[id];
  auto pos = static_cast<std::size_t>(std::find(l.nodes.begin(), l.nodes.end(), x) - l.nodes.begin());
  Link tail;
  tail.nodes.assign(l.nodes.begin() + static_cast<std::ptrdiff_t>(pos), l.nodes.end());
  tail.edges.assign(l.edges.begin() + static_cast<std::ptrdiff_t>(pos), l.edges.end());
  drop_pair(l.a, l.b);
  l.nodes.resize(pos + 1);
  l.edges.resize(pos);
  l.b = x;
  add_pair(l.a, l.b);
  inner_link_of_[x] = -1;
  add_link(std::move(tail));
}

void SubdivisionState::apply_bg_path(const BGPath& p) {
  if (auto c = check_bg_path(p); c != PathCheck::kValid)
    throw UsageError(std::string("not a BG-path: ") + to_string(c));
  const auto& n = p.nodes;
  Link link;
  link.nodes = n;
  for (std::size_t i = 0; i + 1 < n.size(); ++i) link.edges.push_back(edge_outside(n[i], n[i + 1]));
  for (NodeId end : {n.front(), n.back()})
    if (is_inner(end)) split_link_at(end);
  for (EdgeId e : link.edges) add_edge(e);
  add_link(std::move(link));
}

bool SubdivisionState::can_expand(const ExpandRecord& x) const {
  NodeId w = x.center;
  if (!host_->node_alive(w) || contains_node(w)) return false;
  std::vector<NodeId> seen{w};
  for (const auto& arm : x.arms) {
    if (arm.size() < 2 || arm.front() != w) return false;
    NodeId anchor = arm.back();
    if (!host_->node_alive(anchor) || !is_real(anchor)) return false;
    for (std::size_t i = 1; i < arm.size(); ++i) {
      if (!host_->node_alive(arm[i])) return false;
      if (i + 1 < arm.size() && contains_node(arm[i])) return false;
      seen.push_back(arm[i]);
    }
    for (std::size_t i = 0; i + 1 < arm.size(); ++i)
      if (edge_outside(arm[i], arm[i + 1]) == kNoEdge) return false;
  }
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

void SubdivisionState::apply_expand(const ExpandRecord& x) {
  if (!can_expand(x)) throw UsageError("invalid expand operation at center " + std::to_string(x.center));
  for (const auto& arm : x.arms) {
    Link link;
    link.nodes = arm;
    for (std::size_t i = 0; i + 1 < arm.size(); ++i) link.edges.push_back(edge_outside(arm[i], arm[i + 1]));
    for (EdgeId e : link.edges) add_edge(e);
    add_link(std::move(link));
  }
}

}  // namespace tricert
