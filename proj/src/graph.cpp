#include "tricert/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "text_util.hpp"

namespace tricert {

MultiGraph::MultiGraph(std::size_t node_count) : nodes_(node_count), live_nodes_(node_count) {
  for (std::size_t v = 0; v < node_count; ++v) {
    nodes_[v].label = v;
    nodes_[v].alive = true;
  }
}

MultiGraph::MultiGraph(std::vector<Label> labels) : nodes_(labels.size()), live_nodes_(labels.size()) {
  for (std::size_t v = 0; v < labels.size(); ++v) {
    nodes_[v].label = labels[v];
    nodes_[v].alive = true;
  }
}

std::vector<Label> MultiGraph::labels() const {
  std::vector<Label> out(nodes_.size());
  for (std::size_t v = 0; v < nodes_.size(); ++v) out[v] = nodes_[v].label;
  return out;
}

std::vector<NodeId> MultiGraph::neighbors(NodeId v) const {
  std::vector<NodeId> out;
  out.reserve(nodes_[v].inc.size());
  for (auto s : nodes_[v].inc) {
    NodeId w = edges_[s.edge].end[1 - s.side];
    if (w != v) out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int MultiGraph::min_degree() const {
  int best = -1;
  for (const auto& n : nodes_) {
    if (!n.alive) continue;
    int d = static_cast<int>(n.inc.size());
    if (best < 0 || d < best) best = d;
  }
  return best < 0 ? 0 : best;
}

std::vector<NodeId> MultiGraph::live_nodes() const {
  std::vector<NodeId> out;
  out.reserve(live_nodes_);
  for (std::size_t v = 0; v < nodes_.size(); ++v)
    if (nodes_[v].alive) out.push_back(static_cast<NodeId>(v));
  return out;
}

std::vector<EdgeId> MultiGraph::live_edges() const {
  std::vector<EdgeId> out;
  out.reserve(live_edges_);
  for (std::size_t e = 0; e < edges_.size(); ++e)
    if (edges_[e].alive) out.push_back(static_cast<EdgeId>(e));
  return out;
}

void MultiGraph::require_node(NodeId v, const char* what) const {
  if (!node_alive(v)) throw UsageError(std::string(what) + ": node " + std::to_string(v) + " is not alive");
}

NodeId MultiGraph::add_node(Label label) {
  NodeRec rec;
  rec.label = label;
  rec.alive = true;
  nodes_.push_back(std::move(rec));
  ++live_nodes_;
  return static_cast<NodeId>(nodes_.size() - 1);
}

void MultiGraph::reserve_node_slots(std::size_t count) {
  while (nodes_.size() < count) {
    NodeRec rec;
    rec.label = nodes_.size();
    nodes_.push_back(std::move(rec));
  }
}

void MultiGraph::revive_node(NodeId v) {
  if (!valid_node(v)) throw UsageError("revive_node: id out of range");
  if (nodes_[v].alive) throw UsageError("revive_node: node " + std::to_string(v) + " already alive");
  nodes_[v].alive = true;
  ++live_nodes_;
}

void MultiGraph::kill_node(NodeId v) {
  require_node(v, "kill_node");
  if (!nodes_[v].inc.empty()) throw UsageError("kill_node: node still has edges");
  nodes_[v].alive = false;
  --live_nodes_;
}

void MultiGraph::attach(EdgeId e, NodeId u, NodeId v) {
  auto& rec = edges_[e];
  rec.end = {u, v};
  rec.pos[0] = static_cast<std::int32_t>(nodes_[u].inc.size());
  nodes_[u].inc.push_back({e, 0});
  rec.pos[1] = static_cast<std::int32_t>(nodes_[v].inc.size());
  nodes_[v].inc.push_back({e, 1});
}

void MultiGraph::detach(EdgeId e) {
  auto& rec = edges_[e];
  for (int side : {1, 0}) {
    NodeId n = rec.end[side];
    auto& inc = nodes_[n].inc;
    std::int32_t pos = rec.pos[side];
    IncidenceSlot last = inc.back();
    inc[pos] = last;
    edges_[last.edge].pos[last.side] = pos;
    inc.pop_back();
    rec.pos[side] = -1;
  }
}

EdgeId MultiGraph::add_edge(NodeId u, NodeId v) {
  require_node(u, "add_edge");
  require_node(v, "add_edge");
  EdgeId id = static_cast<EdgeId>(edges_.size());
  edges_.emplace_back();
  edges_[id].alive = true;
  edges_[id].used = true;
  attach(id, u, v);
  ++live_edges_;
  return id;
}

void MultiGraph::add_edge_at(EdgeId id, NodeId u, NodeId v) {
  require_node(u, "add_edge_at");
  require_node(v, "add_edge_at");
  if (id < 0) throw UsageError("add_edge_at: negative edge id");
  if (static_cast<std::size_t>(id) >= edges_.size()) edges_.resize(static_cast<std::size_t>(id) + 1);
  if (edges_[id].used) throw UsageError("add_edge_at: edge id " + std::to_string(id) + " already used");
  edges_[id].alive = true;
  edges_[id].used = true;
  attach(id, u, v);
  ++live_edges_;
}

void MultiGraph::remove_edge(EdgeId e) {
  if (!edge_alive(e)) throw UsageError("remove_edge: edge " + std::to_string(e) + " is not alive");
  detach(e);
  edges_[e].alive = false;
  --live_edges_;
}

void MultiGraph::remove_node(NodeId v) {
  require_node(v, "remove_node");
  while (!nodes_[v].inc.empty()) remove_edge(nodes_[v].inc.back().edge);
  nodes_[v].alive = false;
  --live_nodes_;
}

void MultiGraph::reattach(EdgeId e, NodeId u, NodeId v) {
  if (!edge_alive(e)) throw UsageError("reattach: edge " + std::to_string(e) + " is not alive");
  require_node(u, "reattach");
  require_node(v, "reattach");
  detach(e);
  attach(e, u, v);
}

std::optional<SmoothResult> MultiGraph::smooth(NodeId v, SmoothIds ids) {
  require_node(v, "smooth");
  const auto& inc = nodes_[v].inc;
  if (inc.size() != 2) return std::nullopt;
  EdgeId e = inc[0].edge;
  EdgeId f = inc[1].edge;
  if (e == f) return std::nullopt;  // self-loop
  if (e > f) std::swap(e, f);
  NodeId p = other(e, v);
  NodeId q = other(f, v);
  if (p == q || p == v || q == v) return std::nullopt;

  SmoothResult r{};
  r.first_part = e;
  r.second_part = f;
  r.first = p;
  r.second = q;
  if (ids == SmoothIds::kKeepLowest) {
    remove_edge(f);
    reattach(e, p, q);
    r.merged = e;
    r.removed = f;
  } else {
    remove_edge(e);
    remove_edge(f);
    r.merged = add_edge(p, q);
    r.removed = kNoEdge;
  }
  nodes_[v].alive = false;
  --live_nodes_;
  return r;
}

NodeId MultiGraph::contract(EdgeId e) {
  if (!edge_alive(e)) throw UsageError("contract: edge " + std::to_string(e) + " is not alive");
  if (is_loop(e)) throw ContractError("contract: edge " + std::to_string(e) + " is a self-loop");
  NodeId lo = std::min(edges_[e].end[0], edges_[e].end[1]);
  NodeId hi = std::max(edges_[e].end[0], edges_[e].end[1]);
  remove_edge(e);

  std::vector<IncidenceSlot> moving(nodes_[hi].inc.begin(), nodes_[hi].inc.end());
  for (auto s : moving) {
    EdgeId f = s.edge;
    if (!edges_[f].alive || edges_[f].end[s.side] != hi) continue;  // second slot of a loop
    NodeId o = edges_[f].end[1 - s.side];
    if (o == lo || o == hi) {
      remove_edge(f);
      continue;
    }
    if (s.side == 0)
      reattach(f, lo, o);
    else
      reattach(f, o, lo);
  }

  std::unordered_map<NodeId, EdgeId> best;
  std::vector<EdgeId> drop;
  for (auto s : nodes_[lo].inc) {
    EdgeId f = s.edge;
    NodeId o = edges_[f].end[1 - s.side];
    if (o == lo) {
      drop.push_back(f);
      continue;
    }
    auto [it, inserted] = best.emplace(o, f);
    if (!inserted) {
      drop.push_back(std::max(it->second, f));
      it->second = std::min(it->second, f);
    }
  }
  std::sort(drop.begin(), drop.end());
  drop.erase(std::unique(drop.begin(), drop.end()), drop.end());
  for (EdgeId f : drop) remove_edge(f);

  nodes_[hi].alive = false;
  --live_nodes_;
  return lo;
}

std::pair<MultiGraph, SimplifyReport> simplify(const MultiGraph& g) {
  MultiGraph out;
  out.reserve_node_slots(g.node_slots());
  for (std::size_t v = 0; v < g.node_slots(); ++v) {
    out.set_label(static_cast<NodeId>(v), g.label(static_cast<NodeId>(v)));
    if (g.node_alive(static_cast<NodeId>(v))) out.revive_node(static_cast<NodeId>(v));
  }
  SimplifyReport report;
  std::unordered_map<std::uint64_t, std::size_t> class_of;  // pair -> index into classes
  std::vector<std::pair<EdgeId, std::vector<EdgeId>>> classes;
  for (std::size_t i = 0; i < g.edge_slots(); ++i) {
    auto e = static_cast<EdgeId>(i);
    if (!g.edge_alive(e)) continue;
    auto [u, v] = g.ends(e);
    if (u == v) {
      ++report.removed_self_loops;
      continue;
    }
    auto [it, inserted] = class_of.emplace(pair_key(u, v), classes.size());
    if (inserted) {
      classes.push_back({e, {}});
      out.add_edge_at(e, u, v);
    } else {
      classes[it->second].second.push_back(e);
    }
  }
  for (auto& c : classes)
    if (!c.second.empty()) report.merged_parallel_classes.push_back(std::move(c));
  return {std::move(out), std::move(report)};
}

bool is_simple(const MultiGraph& g) {
  std::unordered_map<std::uint64_t, int> seen;
  for (EdgeId e : g.live_edges()) {
    auto [u, v] = g.ends(e);
    if (u == v) return false;
    if (++seen[pair_key(u, v)] > 1) return false;
  }
  return true;
}

MultiGraph smoothed(const MultiGraph& g, NodeId v) {
  MultiGraph out = g;
  out.smooth(v, SmoothIds::kFreshId);
  return out;
}

MultiGraph contracted(const MultiGraph& g, EdgeId e) {
  MultiGraph out = g;
  out.contract(e);
  return out;
}

std::vector<std::vector<NodeId>> connected_components(const MultiGraph& g) {
  std::vector<std::vector<NodeId>> comps;
  std::vector<char> seen(g.node_slots(), 0);
  std::vector<NodeId> stack;
  for (NodeId s : g.live_nodes()) {
    if (seen[s]) continue;
    comps.emplace_back();
    auto& comp = comps.back();
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      NodeId v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (auto slot : g.incidence(v)) {
        NodeId w = g.other(slot.edge, v);
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
  }
  return comps;
}

std::size_t component_count_without(const MultiGraph& g, NodeId a, NodeId b) {
  std::vector<char> seen(g.node_slots(), 0);
  if (g.valid_node(a)) seen[a] = 1;
  if (g.valid_node(b)) seen[b] = 1;
  std::size_t count = 0;
  std::vector<NodeId> stack;
  for (NodeId s : g.live_nodes()) {
    if (seen[s]) continue;
    ++count;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      NodeId v = stack.back();
      stack.pop_back();
      for (auto slot : g.incidence(v)) {
        NodeId w = g.other(slot.edge, v);
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return count;
}

std::unordered_map<std::uint64_t, EdgeId> edge_lookup(const MultiGraph& g) {
  std::unordered_map<std::uint64_t, EdgeId> out;
  out.reserve(g.edge_count() * 2);
  for (EdgeId e : g.live_edges()) {
    auto [u, v] = g.ends(e);
    out.emplace(pair_key(u, v), e);  // live_edges is ascending, so the lowest id wins
  }
  return out;
}

std::unordered_map<Label, NodeId> label_lookup(const MultiGraph& g) {
  std::unordered_map<Label, NodeId> out;
  out.reserve(g.node_slots() * 2);
  for (std::size_t v = 0; v < g.node_slots(); ++v) out.emplace(g.label(static_cast<NodeId>(v)), static_cast<NodeId>(v));
  return out;
}

namespace {

using detail::for_each_line;
using detail::split_ws;
using detail::to_u64;

constexpr std::uint64_t kMaxNodes = std::uint64_t{1} << 26;

MultiGraph parse_edge_list(std::string_view text) {
  std::vector<std::pair<Label, Label>> pairs;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tok = split_ws(line);
    if (tok.empty()) return;
    std::uint64_t u = 0;
    std::uint64_t v = 0;
    if (tok.size() != 2 || !to_u64(tok[0], u) || !to_u64(tok[1], v))
      throw ParseError(line_no, "expected two non-negative integers \"u v\"");
    pairs.emplace_back(u, v);
  });
  std::vector<Label> labels;
  labels.reserve(pairs.size() * 2);
  for (auto [u, v] : pairs) {
    labels.push_back(u);
    labels.push_back(v);
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  if (labels.size() > kMaxNodes) throw SizeError("graph has too many nodes");
  auto id = [&](Label l) {
    return static_cast<NodeId>(std::lower_bound(labels.begin(), labels.end(), l) - labels.begin());
  };
  MultiGraph g(labels);
  for (auto [u, v] : pairs) g.add_edge(id(u), id(v));
  return g;
}

MultiGraph parse_dimacs(std::string_view text) {
  std::optional<MultiGraph> g;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::size_t last_line = 0;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    last_line = line_no;
    auto tok = split_ws(line);
    if (tok.empty() || tok[0] == "c") return;
    if (tok[0] == "p") {
      if (g) throw ParseError(line_no, "duplicate problem line");
      if (tok.size() != 4 || !to_u64(tok[2], n) || !to_u64(tok[3], m))
        throw ParseError(line_no, "expected \"p edge n m\"");
      if (n > kMaxNodes) throw SizeError("node count " + std::to_string(n) + " exceeds limit");
      std::vector<Label> labels(n);
      std::iota(labels.begin(), labels.end(), Label{1});
      g.emplace(std::move(labels));
      return;
    }
    if (tok[0] == "e") {
      if (!g) throw ParseError(line_no, "edge line before problem line");
      std::uint64_t u = 0;
      std::uint64_t v = 0;
      if (tok.size() != 3 || !to_u64(tok[1], u) || !to_u64(tok[2], v))
        throw ParseError(line_no, "expected \"e u v\"");
      if (u < 1 || v < 1 || u > n || v > n) throw ParseError(line_no, "node out of range 1..n");
      g->add_edge(static_cast<NodeId>(u - 1), static_cast<NodeId>(v - 1));
      return;
    }
    throw ParseError(line_no, "unknown DIMACS line type");
  });
  if (!g) throw ParseError(last_line, "missing problem line");
  if (g->edge_count() != m)
    throw ParseError(last_line, "header announces " + std::to_string(m) + " edges, found " +
                                    std::to_string(g->edge_count()));
  return std::move(*g);
}

}  // namespace

GraphFormat detect_format(std::string_view text) {
  GraphFormat fmt = GraphFormat::kEdgeList;
  bool decided = false;
  for_each_line(text, [&](std::size_t, std::string_view line) {
    if (decided) return;
    auto tok = split_ws(line);
    if (tok.empty() || tok[0][0] == '#' || tok[0] == "c") return;
    fmt = tok[0] == "p" ? GraphFormat::kDimacs : GraphFormat::kEdgeList;
    decided = true;
  });
  return fmt;
}

MultiGraph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::kDimacs ? parse_dimacs(text) : parse_edge_list(text);
}

std::string serialize_edge_list(const MultiGraph& g) {
  std::vector<std::pair<Label, Label>> lines;
  lines.reserve(g.edge_count());
  for (EdgeId e : g.live_edges()) {
    Label a = g.label(g.ends(e).u);
    Label b = g.label(g.ends(e).v);
    if (a > b) std::swap(a, b);
    lines.emplace_back(a, b);
  }
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (auto [a, b] : lines) {
    out += std::to_string(a);
    out += ' ';
    out += std::to_string(b);
    out += '\n';
  }
  return out;
}

}  // namespace tricert
