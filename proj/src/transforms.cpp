#include "tricert/transforms.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "text_util.hpp"
#include "tricert/errors.hpp"
#include "tricert/subdivision.hpp"
#include "tricert/verifier.hpp"

namespace tricert {

namespace {

EdgeId min_edge(const MultiGraph& g, std::span<const NodeId> nodes) {
  auto es = path_edges(g, nodes);
  return *std::min_element(es.begin(), es.end());
}

Subdivide as_subdivide(const SmoothResult& r, NodeId x) { return {r.merged, r.first, x, r.removed}; }

MultiGraph fresh_copy(const MultiGraph& w) {
  MultiGraph out;
  out.reserve_node_slots(w.node_slots());
  for (std::size_t v = 0; v < w.node_slots(); ++v) {
    auto id = static_cast<NodeId>(v);
    out.set_label(id, w.label(id));
    if (w.node_alive(id)) out.revive_node(id);
  }
  for (EdgeId e : w.live_edges()) out.add_edge_at(e, w.ends(e).u, w.ends(e).v);
  return out;
}

std::string op_name(std::size_t k) { return "op " + std::to_string(k); }

// Forward replay shared by replay_edge_rep, edge_to_path and to_contractions.
// `on_sub(op, sub_record, other_end)` and `on_new(op, edge, arm)` observe it.
template <typename OnSub, typename OnNew>
MultiGraph replay(const EdgeRepresentation& er, OnSub on_sub, OnNew on_new) {
  MultiGraph g = fresh_copy(er.g0);
  std::size_t k = 0;
  auto fail = [&](const std::string& what) { throw ReplayError(op_name(k) + ": " + what); };
  auto add = [&](EdgeId e, NodeId u, NodeId v, int arm) {
    if (!g.node_alive(u) || !g.node_alive(v)) fail("endpoint is not a node of the current graph");
    if (u == v) fail("edge would be a self-loop");
    if (e < 0 || g.edge_used(e)) fail("edge id " + std::to_string(e) + " is already in use");
    g.add_edge_at(e, u, v);
    on_new(k, e, arm);
  };
  auto new_node = [&](NodeId x) {
    if (!g.valid_node(x) || g.node_alive(x) || g.degree(x) != 0) fail("new node id is not free");
    g.revive_node(x);
  };
  auto subdivide = [&](const Subdivide& s) {
    if (!g.edge_alive(s.sub)) fail("edge " + std::to_string(s.sub) + " is not in the current graph");
    auto [u, v] = g.ends(s.sub);
    if (s.keep != u && s.keep != v) fail("kept endpoint is not an end of the subdivided edge");
    NodeId q = g.other(s.sub, s.keep);
    new_node(s.x);
    g.reattach(s.sub, s.keep, s.x);
    if (s.part < 0 || g.edge_used(s.part)) fail("edge id " + std::to_string(s.part) + " is already in use");
    g.add_edge_at(s.part, s.x, q);
    on_sub(k, s, q);
  };
  for (; k < er.ops.size(); ++k) {
    const EdgeOp& op = er.ops[k];
    if (const auto* a = std::get_if<OpA>(&op)) {
      add(a->e, a->u, a->v, 0);
    } else if (const auto* b = std::get_if<OpB>(&op)) {
      subdivide(b->s);
      add(b->e, b->s.x, b->y, 0);
    } else if (const auto* c = std::get_if<OpC>(&op)) {
      subdivide(c->s1);
      subdivide(c->s2);
      add(c->e, c->s1.x, c->s2.x, 0);
    } else {
      const auto& d = std::get<OpD>(op);
      const auto& an = d.anchors;
      if (an[0] == an[1] || an[0] == an[2] || an[1] == an[2]) fail("anchors are not distinct");
      new_node(d.w);
      for (int j = 0; j < 3; ++j) add(d.edges[static_cast<std::size_t>(j)], d.w, an[static_cast<std::size_t>(j)], j);
    }
  }
  return g;
}

BGPath oriented(const SubdivisionState& s, BGPath p) {
  if (s.is_real(p.front()) && s.is_inner(p.back())) std::reverse(p.nodes.begin(), p.nodes.end());
  return p;
}

// Nodes w..end along a path given as a node list containing w.
std::vector<NodeId> walk_from(const std::vector<NodeId>& path, NodeId w, bool toward_front) {
  auto it = std::find(path.begin(), path.end(), w);
  if (toward_front) return std::vector<NodeId>(std::make_reverse_iterator(it + 1), path.rend());
  return std::vector<NodeId>(it, path.end());
}

std::vector<NodeId> concat(std::vector<NodeId> a, const std::vector<NodeId>& b) {
  a.insert(a.end(), b.begin() + 1, b.end());
  return a;
}

}  // namespace

EdgeRepresentation path_to_edge(const MultiGraph& g, const PathRepresentation& pr) {
  if (!is_simple(g)) throw TransformError("graph must be simple");
  if (auto v = verify_certificate(g, pr); !v) throw TransformError("certificate rejected: " + v.reason);
  MultiGraph w = g;
  std::vector<EdgeOp> rev;
  rev.reserve(pr.steps.size());
  for (std::size_t i = pr.steps.size(); i-- > 0;) {
    if (const auto* p = std::get_if<BGPath>(&pr.steps[i])) {
      NodeId a = p->front();
      NodeId b = p->back();
      EdgeId e = min_edge(g, p->nodes);
      w.remove_edge(e);
      std::optional<SmoothResult> ra;
      std::optional<SmoothResult> rb;
      if (w.degree(a) == 2) ra = w.smooth(a);
      if (w.degree(b) == 2) rb = w.smooth(b);
      if (ra && rb) rev.emplace_back(OpC{as_subdivide(*ra, a), as_subdivide(*rb, b), e});
      else if (ra) rev.emplace_back(OpB{as_subdivide(*ra, a), b, e});
      else if (rb) rev.emplace_back(OpB{as_subdivide(*rb, b), a, e});
      else rev.emplace_back(OpA{a, b, e});
      continue;
    }
    const auto& x = std::get<ExpandRecord>(pr.steps[i]);
    OpD d;
    d.w = x.center;
    for (std::size_t j = 0; j < 3; ++j) {
      d.anchors[j] = x.anchor(j);
      d.edges[j] = min_edge(g, x.arms[j]);
      w.remove_edge(d.edges[j]);
    }
    w.kill_node(x.center);
    rev.emplace_back(d);
  }
  EdgeRepresentation er{fresh_copy(w), {}};
  er.ops.assign(rev.rbegin(), rev.rend());
  return er;
}

MultiGraph replay_edge_rep(const EdgeRepresentation& er) {
  return replay(er, [](std::size_t, const Subdivide&, NodeId) {}, [](std::size_t, EdgeId, int) {});
}

PathRepresentation edge_to_path(const EdgeRepresentation& er) {
  // Owner 0 is the start graph; op k arm j owns 1 + 3k + j.
  std::vector<int> owner;
  std::vector<std::vector<EdgeId>> lists(1 + 3 * er.ops.size());
  auto own = [&](EdgeId e, int o) {
    if (owner.size() <= static_cast<std::size_t>(e)) owner.resize(static_cast<std::size_t>(e) + 1, -1);
    owner[static_cast<std::size_t>(e)] = o;
    lists[static_cast<std::size_t>(o)].push_back(e);
  };
  for (EdgeId e : er.g0.live_edges()) own(e, 0);
  MultiGraph g = replay(
      er, [&](std::size_t, const Subdivide& s, NodeId) { own(s.part, owner[static_cast<std::size_t>(s.sub)]); },
      [&](std::size_t k, EdgeId e, int arm) { own(e, static_cast<int>(1 + 3 * k) + arm); });

  // Chain extraction from per-node incidence restricted to one owner.
  std::vector<std::array<EdgeId, 2>> slot(g.node_slots(), {kNoEdge, kNoEdge});
  auto chain = [&](int o, NodeId from, NodeId to) {
    const auto& es = lists[static_cast<std::size_t>(o)];
    for (EdgeId e : es)
      for (NodeId v : {g.ends(e).u, g.ends(e).v}) (slot[v][0] == kNoEdge ? slot[v][0] : slot[v][1]) = e;
    std::vector<NodeId> nodes{from};
    EdgeId prev = kNoEdge;
    NodeId cur = from;
    for (std::size_t n = 0; n < es.size(); ++n) {
      EdgeId next = slot[cur][0] != prev ? slot[cur][0] : slot[cur][1];
      if (next == kNoEdge) break;
      prev = next;
      cur = g.other(next, cur);
      nodes.push_back(cur);
    }
    for (EdgeId e : es)
      for (NodeId v : {g.ends(e).u, g.ends(e).v}) slot[v] = {kNoEdge, kNoEdge};
    if (nodes.size() != es.size() + 1 || cur != to) throw TransformError("operation edges do not form a path");
    return nodes;
  };

  PathRepresentation pr;
  pr.s0_edges = lists[0];
  std::sort(pr.s0_edges.begin(), pr.s0_edges.end());
  for (std::size_t k = 0; k < er.ops.size(); ++k) {
    const int o = static_cast<int>(1 + 3 * k);
    const EdgeOp& op = er.ops[k];
    if (const auto* a = std::get_if<OpA>(&op)) {
      pr.steps.emplace_back(BGPath{chain(o, a->u, a->v)});
    } else if (const auto* b = std::get_if<OpB>(&op)) {
      pr.steps.emplace_back(BGPath{chain(o, b->s.x, b->y)});
    } else if (const auto* c = std::get_if<OpC>(&op)) {
      pr.steps.emplace_back(BGPath{chain(o, c->s1.x, c->s2.x)});
    } else {
      const auto& d = std::get<OpD>(op);
      ExpandRecord x;
      x.center = d.w;
      for (std::size_t j = 0; j < 3; ++j) x.arms[j] = chain(o + static_cast<int>(j), d.w, d.anchors[j]);
      pr.steps.emplace_back(std::move(x));
    }
  }
  return pr;
}

PathRepresentation to_basic(const MultiGraph& g, const PathRepresentation& pr) {
  if (!is_simple(g)) throw TransformError("graph must be simple");
  std::optional<SubdivisionState> st;
  try {
    st = SubdivisionState::init(g, pr.s0_edges);
  } catch (const StructureError& e) {
    throw TransformError(std::string("S0: ") + e.what());
  }
  SubdivisionState& s = *st;

  PathRepresentation out;
  out.s0_edges = pr.s0_edges;
  out.basic = true;
  auto emit = [&](Step step) {
    try {
      if (auto* p = std::get_if<BGPath>(&step)) {
        *p = oriented(s, std::move(*p));
        s.apply_bg_path(*p);
      } else {
        s.apply_expand(std::get<ExpandRecord>(step));
      }
    } catch (const UsageError& e) {
      throw TransformError(std::string("rewritten step is invalid: ") + e.what());
    }
    out.steps.push_back(std::move(step));
  };

  // Non-basic paths held back until a later step attaches to one of their inner nodes.
  std::vector<std::vector<NodeId>> pending;
  std::vector<int> pending_of(g.node_slots(), -1);
  std::size_t live_pending = 0;
  auto retire = [&](int id) {
    auto& p = pending[static_cast<std::size_t>(id)];
    for (std::size_t i = 1; i + 1 < p.size(); ++i) pending_of[p[i]] = -1;
    --live_pending;
  };
  std::vector<BGPath> deferred;

  for (const Step& step : pr.steps) {
    const auto* q = std::get_if<BGPath>(&step);
    if (!q) throw TransformError("input already contains expand operations");
    NodeId u = q->front();
    NodeId v = q->back();
    if (pending_of[u] < 0 && pending_of[v] < 0) {
      bool non_basic = s.contains_node(u) && s.contains_node(v) && s.is_real(u) && s.is_real(v) &&
                       s.parallel_count(u, v) > 0;
      if (!non_basic) {
        emit(*q);
      } else if (q->length() == 1) {
        deferred.push_back(*q);
      } else {
        pending.push_back(q->nodes);
        ++live_pending;
        for (std::size_t i = 1; i + 1 < q->nodes.size(); ++i) pending_of[q->nodes[i]] = static_cast<int>(pending.size() - 1);
      }
      continue;
    }
    // Orient Q as w .. v with w an inner node of a held-back path P = a .. b.
    std::vector<NodeId> qn = q->nodes;
    if (pending_of[qn.front()] < 0) std::reverse(qn.begin(), qn.end());
    const NodeId w = qn.front();
    v = qn.back();
    const int pid = pending_of[w];
    const std::vector<NodeId> p = pending[static_cast<std::size_t>(pid)];
    const NodeId a = p.front();
    const int pid2 = pending_of[v];
    retire(pid);
    if (pid2 < 0) {
      if (!s.contains_node(v)) throw TransformError("step does not end on the subdivision");
      if (s.is_real(v)) {
        ExpandRecord x;
        x.center = w;
        x.arms = {walk_from(p, w, true), walk_from(p, w, false), qn};
        emit(std::move(x));
      } else {
        const Link& l = s.inner_link(v);
        const bool a_free = a != l.a && a != l.b;
        std::vector<NodeId> q_rev(qn.rbegin(), qn.rend());
        emit(BGPath{concat(q_rev, walk_from(p, w, a_free))});
        emit(BGPath{walk_from(p, w, !a_free)});
      }
      continue;
    }
    const std::vector<NodeId> p2 = pending[static_cast<std::size_t>(pid2)];
    retire(pid2);
    const bool a_free = a != p2.front() && a != p2.back();
    std::vector<NodeId> q_rev(qn.rbegin(), qn.rend());
    ExpandRecord x;
    x.center = v;
    x.arms = {walk_from(p2, v, true), walk_from(p2, v, false), concat(q_rev, walk_from(p, w, a_free))};
    emit(std::move(x));
    emit(BGPath{walk_from(p, w, !a_free)});
  }
  if (live_pending > 0) throw TransformError("a held-back path never received an attachment");

  while (!deferred.empty()) {
    std::vector<BGPath> rest;
    for (auto& d : deferred) {
      bool ok = s.check_bg_path(d) == PathCheck::kValid &&
                !(s.is_real(d.front()) && s.is_real(d.back()) && s.parallel_count(d.front(), d.back()) > 0);
      if (ok) emit(std::move(d));
      else rest.push_back(std::move(d));
    }
    if (rest.size() == deferred.size()) throw TransformError("remaining edges cannot be added without parallel links");
    deferred = std::move(rest);
  }
  return out;
}

PathRepresentation from_basic(const PathRepresentation& pr) {
  PathRepresentation out;
  out.s0_edges = pr.s0_edges;
  for (const Step& step : pr.steps) {
    if (std::holds_alternative<BGPath>(step)) {
      out.steps.push_back(step);
      continue;
    }
    auto arms = std::get<ExpandRecord>(step).arms;
    std::sort(arms.begin(), arms.end(), [](const auto& x, const auto& y) { return x.back() < y.back(); });
    std::vector<NodeId> through(arms[0].rbegin(), arms[0].rend());
    out.steps.emplace_back(BGPath{concat(through, arms[1])});
    out.steps.emplace_back(BGPath{arms[2]});
  }
  return out;
}

ContractionSequence to_contractions(const EdgeRepresentation& er) {
  // Other end of every subdivided edge, per op (two entries for C).
  std::vector<std::array<NodeId, 2>> far(er.ops.size(), {kNoNode, kNoNode});
  MultiGraph g = replay(
      er,
      [&](std::size_t k, const Subdivide&, NodeId q) {
        auto& f = far[k];
        (f[0] == kNoNode ? f[0] : f[1]) = q;
      },
      [](std::size_t, EdgeId, int) {});

  std::vector<NodeId> parent(g.node_slots());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](NodeId v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  ContractionSequence seq;
  auto contract = [&](NodeId x, NodeId t) {
    NodeId rx = find(x);
    NodeId rt = find(t);
    seq.emplace_back(rx, rt);
    parent[std::max(rx, rt)] = std::min(rx, rt);
  };
  auto larger = [&](NodeId p, NodeId q) { return find(p) > find(q) ? p : q; };

  for (std::size_t k = er.ops.size(); k-- > 0;) {
    const EdgeOp& op = er.ops[k];
    if (const auto* b = std::get_if<OpB>(&op)) {
      contract(b->s.x, larger(b->s.keep, far[k][0]));
    } else if (const auto* c = std::get_if<OpC>(&op)) {
      NodeId p1 = c->s1.keep, q1 = far[k][0], p2 = c->s2.keep, q2 = far[k][1];
      std::set<NodeId> e1{find(p1), find(q1)};
      std::set<NodeId> e2{find(p2), find(q2)};
      std::vector<NodeId> shared;
      std::set_intersection(e1.begin(), e1.end(), e2.begin(), e2.end(), std::back_inserter(shared));
      NodeId t1 = larger(p1, q1);
      NodeId t2 = larger(p2, q2);
      if (shared.size() == 1) {
        t1 = find(p1) == shared[0] ? q1 : p1;
        t2 = find(p2) == shared[0] ? q2 : p2;
      }
      contract(c->s1.x, t1);
      contract(c->s2.x, t2);
    } else if (const auto* d = std::get_if<OpD>(&op)) {
      auto an = d->anchors;
      std::sort(an.begin(), an.end());
      contract(d->w, larger(an[0], an[1]));
    }
  }
  return seq;
}

MultiGraph apply_contractions(const MultiGraph& g, const ContractionSequence& seq) {
  MultiGraph out = g;
  for (auto [u, v] : seq) {
    if (!out.node_alive(u) || !out.node_alive(v)) throw ContractError("contraction names a missing node");
    EdgeId e = kNoEdge;
    for (auto s : out.incidence(u))
      if (out.other(s.edge, u) == v) e = s.edge;
    if (e == kNoEdge) throw ContractError("contracted nodes are not adjacent");
    out.contract(e);
  }
  return out;
}

// Text formats.

std::string write_edge_rep(const EdgeRepresentation& er) {
  const MultiGraph& g = er.g0;
  auto l = [&](NodeId v) { return std::to_string(g.label(v)); };
  auto id = [](EdgeId e) { return std::to_string(e); };
  std::size_t n = g.node_count();
  std::size_t m = g.edge_count();
  std::string ops;
  for (const EdgeOp& op : er.ops) {
    if (const auto* a = std::get_if<OpA>(&op)) {
      m += 1;
      ops += "A " + l(a->u) + " " + l(a->v) + " " + id(a->e) + "\n";
    } else if (const auto* b = std::get_if<OpB>(&op)) {
      n += 1;
      m += 2;
      ops += "B " + id(b->s.sub) + " " + l(b->s.x) + " " + id(b->s.part) + " " + l(b->y) + " " + id(b->e) + " " +
             l(b->s.keep) + "\n";
    } else if (const auto* c = std::get_if<OpC>(&op)) {
      n += 2;
      m += 3;
      ops += "C " + id(c->s1.sub) + " " + l(c->s1.x) + " " + id(c->s1.part) + " " + id(c->s2.sub) + " " + l(c->s2.x) +
             " " + id(c->s2.part) + " " + id(c->e) + " " + l(c->s1.keep) + " " + l(c->s2.keep) + "\n";
    } else {
      const auto& d = std::get<OpD>(op);
      n += 1;
      m += 3;
      ops += "D " + l(d.w) + " " + l(d.anchors[0]) + " " + l(d.anchors[1]) + " " + l(d.anchors[2]) + " " +
             id(d.edges[0]) + " " + id(d.edges[1]) + " " + id(d.edges[2]) + "\n";
    }
  }
  std::string out = "edgerep v1\nn " + std::to_string(n) + " m " + std::to_string(m) + "\n";
  out += "G0 " + std::to_string(g.edge_count()) + "\n";
  for (EdgeId e : g.live_edges()) out += id(e) + " " + l(g.ends(e).u) + " " + l(g.ends(e).v) + "\n";
  out += "OPS " + std::to_string(er.ops.size()) + "\n" + ops;
  return out;
}

EdgeRepresentation read_edge_rep(std::string_view text, const MultiGraph* host) {
  constexpr std::uint64_t kMaxEdgeId = std::uint64_t{1} << 26;
  std::vector<std::pair<std::size_t, std::vector<std::string_view>>> rows;
  detail::for_each_line(text, [&](std::size_t no, std::string_view line) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tok = detail::split_ws(line);
    if (!tok.empty()) rows.emplace_back(no, std::move(tok));
  });
  std::size_t r = 0;
  auto row = [&](std::string_view what) -> const std::vector<std::string_view>& {
    if (r == rows.size()) throw ParseError(rows.empty() ? 1 : rows.back().first, "unexpected end, expected " + std::string(what));
    return rows[r++].second;
  };
  auto line = [&]() { return rows[r - 1].first; };
  auto num = [&](std::string_view tok) {
    std::uint64_t v = 0;
    if (!detail::to_u64(tok, v)) throw ParseError(line(), "expected a non-negative integer, got '" + std::string(tok) + "'");
    return v;
  };
  auto eid = [&](std::string_view tok) {
    auto v = num(tok);
    if (v >= kMaxEdgeId) throw ParseError(line(), "edge id too large");
    return static_cast<EdgeId>(v);
  };

  const auto& head = row("header");
  if (head.size() != 2 || head[0] != "edgerep" || head[1] != "v1") throw ParseError(line(), "expected \"edgerep v1\"");
  const auto& nm = row("size line");
  if (nm.size() != 4 || nm[0] != "n" || nm[2] != "m") throw ParseError(line(), "expected \"n <n> m <m>\"");
  const auto& g0h = row("G0 line");
  if (g0h.size() != 2 || g0h[0] != "G0") throw ParseError(line(), "expected \"G0 <k>\"");
  auto k = num(g0h[1]);
  if (k > rows.size()) throw ParseError(line(), "G0 count exceeds the input");

  struct RawEdge {
    std::size_t line;
    EdgeId id;
    Label u, v;
  };
  std::vector<RawEdge> g0_edges;
  for (std::uint64_t i = 0; i < k; ++i) {
    const auto& t = row("G0 edge");
    if (t.size() != 3) throw ParseError(line(), "expected \"<id> <u> <v>\"");
    g0_edges.push_back({line(), eid(t[0]), num(t[1]), num(t[2])});
  }
  const auto& oh = row("OPS line");
  if (oh.size() != 2 || oh[0] != "OPS") throw ParseError(line(), "expected \"OPS <z>\"");
  auto z = num(oh[1]);
  if (z > rows.size()) throw ParseError(line(), "OPS count exceeds the input");
  std::vector<std::pair<std::size_t, std::vector<std::string_view>>> op_rows;
  for (std::uint64_t i = 0; i < z; ++i) {
    const auto& t = row("operation");
    op_rows.emplace_back(line(), t);
    static const std::string_view kinds = "ABCD";
    static const std::size_t arity[] = {4, 7, 10, 8};
    auto kind = t[0].size() == 1 ? kinds.find(t[0][0]) : std::string_view::npos;
    if (kind == std::string_view::npos) throw ParseError(line(), "unknown operation '" + std::string(t[0]) + "'");
    if (t.size() != arity[kind]) throw ParseError(line(), "wrong number of fields for operation " + std::string(t[0]));
  }
  if (r != rows.size()) throw ParseError(rows[r].first, "trailing content after the last operation");

  // Node positions of each op kind, used to collect labels.
  auto node_fields = [](char kind) -> std::vector<std::size_t> {
    switch (kind) {
      case 'A': return {1, 2};
      case 'B': return {2, 4, 6};
      case 'C': return {2, 5, 8, 9};
      default: return {1, 2, 3, 4};
    }
  };
  MultiGraph g0;
  std::unordered_map<Label, NodeId> ids;
  if (host) {
    g0 = MultiGraph(host->labels());
    ids = label_lookup(*host);
  } else {
    std::vector<Label> labels;
    for (const auto& e : g0_edges) {
      labels.push_back(e.u);
      labels.push_back(e.v);
    }
    for (const auto& [no, t] : op_rows) {
      for (std::size_t f : node_fields(t[0][0])) {
        std::uint64_t v = 0;
        if (!detail::to_u64(t[f], v)) throw ParseError(no, "expected a node label, got '" + std::string(t[f]) + "'");
        labels.push_back(v);
      }
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    g0 = MultiGraph(labels);
    for (std::size_t i = 0; i < labels.size(); ++i) ids.emplace(labels[i], static_cast<NodeId>(i));
  }
  std::size_t cur_line = 0;
  auto node = [&](std::string_view tok) {
    std::uint64_t v = 0;
    if (!detail::to_u64(tok, v)) throw ParseError(cur_line, "expected a node label, got '" + std::string(tok) + "'");
    auto it = ids.find(v);
    if (it == ids.end()) throw ParseError(cur_line, "unknown node label " + std::string(tok));
    return it->second;
  };
  auto edge = [&](std::string_view tok) {
    std::uint64_t v = 0;
    if (!detail::to_u64(tok, v) || v >= kMaxEdgeId) throw ParseError(cur_line, "bad edge id '" + std::string(tok) + "'");
    return static_cast<EdgeId>(v);
  };

  std::vector<char> in_g0(g0.node_slots(), 0);
  for (const auto& e : g0_edges) {
    NodeId u = ids.count(e.u) ? ids[e.u] : kNoNode;
    NodeId v = ids.count(e.v) ? ids[e.v] : kNoNode;
    if (u == kNoNode || v == kNoNode) throw ParseError(e.line, "unknown node label in G0");
    if (u == v) throw ParseError(e.line, "G0 edge is a self-loop");
    in_g0[u] = in_g0[v] = 1;
  }
  for (NodeId v : g0.live_nodes())
    if (!in_g0[v]) g0.remove_node(v);
  for (const auto& e : g0_edges) {
    if (g0.edge_used(e.id)) throw ParseError(e.line, "G0 repeats edge id " + std::to_string(e.id));
    g0.add_edge_at(e.id, ids[e.u], ids[e.v]);
  }

  EdgeRepresentation er{std::move(g0), {}};
  for (const auto& [no, t] : op_rows) {
    cur_line = no;
    switch (t[0][0]) {
      case 'A': er.ops.emplace_back(OpA{node(t[1]), node(t[2]), edge(t[3])}); break;
      case 'B': er.ops.emplace_back(OpB{{edge(t[1]), node(t[6]), node(t[2]), edge(t[3])}, node(t[4]), edge(t[5])}); break;
      case 'C':
        er.ops.emplace_back(OpC{{edge(t[1]), node(t[8]), node(t[2]), edge(t[3])},
                                {edge(t[4]), node(t[9]), node(t[5]), edge(t[6])},
                                edge(t[7])});
        break;
      default:
        er.ops.emplace_back(OpD{node(t[1]), {node(t[2]), node(t[3]), node(t[4])}, {edge(t[5]), edge(t[6]), edge(t[7])}});
    }
  }
  return er;
}

std::string write_contractions(const MultiGraph& g, const ContractionSequence& seq) {
  std::string out;
  for (auto [u, v] : seq) out += "c " + std::to_string(g.label(u)) + " " + std::to_string(g.label(v)) + "\n";
  return out;
}

}  // namespace tricert
