#include "tricert/certificate.hpp"

#include <algorithm>

#include "text_util.hpp"
#include "tricert/errors.hpp"

namespace tricert {

using detail::for_each_line;
using detail::split_ws;
using detail::to_u64;

namespace {

void append_nodes(std::string& out, const MultiGraph& g, const std::vector<NodeId>& nodes) {
  out += std::to_string(nodes.size() - 1);
  for (NodeId v : nodes) {
    out += ' ';
    out += std::to_string(g.label(v));
  }
}

// Meaningful lines of a certificate, each split into tokens.
struct Lines {
  std::vector<std::pair<std::size_t, std::vector<std::string_view>>> rows;
  std::size_t pos = 0;

  explicit Lines(std::string_view text) {
    for_each_line(text, [&](std::size_t no, std::string_view line) {
      if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      auto tok = split_ws(line);
      if (!tok.empty()) rows.emplace_back(no, std::move(tok));
    });
  }

  const std::vector<std::string_view>& next(std::string_view what) {
    if (pos == rows.size()) throw ParseError(rows.empty() ? 1 : rows.back().first, "unexpected end, expected " + std::string(what));
    return rows[pos++].second;
  }
  std::size_t line() const { return pos == 0 ? 1 : rows[pos - 1].first; }
  bool done() const { return pos == rows.size(); }
};

std::uint64_t number(const Lines& in, std::string_view tok) {
  std::uint64_t v = 0;
  if (!to_u64(tok, v)) throw ParseError(in.line(), "expected a non-negative integer, got '" + std::string(tok) + "'");
  return v;
}

// Header plus raw label records; shared by read_certificate and graph_from_certificate.
struct RawCertificate {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<std::pair<Label, Label>> s0;
  struct Record {
    bool expand = false;
    std::vector<std::vector<Label>> parts;  // one for a path, three arms for an expand
  };
  std::vector<Record> steps;
};

RawCertificate parse_raw(std::string_view text) {
  Lines in(text);
  RawCertificate raw;
  const auto& head = in.next("header");
  if (head.size() != 2 || head[0] != "tricert" || head[1] != "v1") throw ParseError(in.line(), "expected \"tricert v1\"");
  const auto& nm = in.next("size line");
  if (nm.size() != 4 || nm[0] != "n" || nm[2] != "m") throw ParseError(in.line(), "expected \"n <n> m <m>\"");
  raw.n = number(in, nm[1]);
  raw.m = number(in, nm[3]);

  const auto& s0 = in.next("S0 line");
  if (s0.size() != 2 || s0[0] != "S0") throw ParseError(in.line(), "expected \"S0 <k>\"");
  auto k = number(in, s0[1]);
  if (k > raw.m) throw ParseError(in.line(), "S0 larger than the edge count");
  for (std::uint64_t i = 0; i < k; ++i) {
    const auto& e = in.next("S0 edge");
    if (e.size() != 2) throw ParseError(in.line(), "expected \"u v\"");
    raw.s0.emplace_back(number(in, e[0]), number(in, e[1]));
  }

  const auto& st = in.next("STEPS line");
  if (st.size() != 2 || st[0] != "STEPS") throw ParseError(in.line(), "expected \"STEPS <z>\"");
  auto z = number(in, st[1]);
  if (z > raw.m) throw ParseError(in.line(), "more steps than edges");
  for (std::uint64_t i = 0; i < z; ++i) {
    const auto& r = in.next("step record");
    RawCertificate::Record rec;
    std::size_t p = 1;
    auto take_seq = [&]() {
      if (p >= r.size()) throw ParseError(in.line(), "truncated step record");
      auto len = number(in, r[p++]);
      if (len == 0 || len > r.size() - p || r.size() - p < len + 1) throw ParseError(in.line(), "path length does not match node list");
      std::vector<Label> seq;
      for (std::uint64_t j = 0; j <= len; ++j) seq.push_back(number(in, r[p++]));
      return seq;
    };
    if (r[0] == "P") {
      rec.parts.push_back(take_seq());
    } else if (r[0] == "X") {
      rec.expand = true;
      if (r.size() < 2) throw ParseError(in.line(), "truncated expand record");
      auto center = number(in, r[p++]);
      for (int a = 0; a < 3; ++a) {
        rec.parts.push_back(take_seq());
        if (rec.parts.back().front() != center) throw ParseError(in.line(), "expand arm does not start at its center");
      }
    } else {
      throw ParseError(in.line(), "unknown step kind '" + std::string(r[0]) + "'");
    }
    if (p != r.size()) throw ParseError(in.line(), "trailing tokens in step record");
    raw.steps.push_back(std::move(rec));
  }
  if (!in.done()) {
    in.next("");
    throw ParseError(in.line(), "trailing content after the last step");
  }
  return raw;
}

}  // namespace

std::string write_certificate(const MultiGraph& g, const PathRepresentation& pr) {
  std::string out = "tricert v1\n";
  out += "n " + std::to_string(g.node_count()) + " m " + std::to_string(g.edge_count()) + "\n";
  out += "S0 " + std::to_string(pr.s0_edges.size()) + "\n";
  for (EdgeId e : pr.s0_edges) {
    Label a = g.label(g.ends(e).u);
    Label b = g.label(g.ends(e).v);
    if (a > b) std::swap(a, b);
    out += std::to_string(a) + " " + std::to_string(b) + "\n";
  }
  out += "STEPS " + std::to_string(pr.steps.size()) + "\n";
  for (const Step& s : pr.steps) {
    if (const auto* p = std::get_if<BGPath>(&s)) {
      out += "P ";
      append_nodes(out, g, p->nodes);
    } else {
      const auto& x = std::get<ExpandRecord>(s);
      out += "X " + std::to_string(g.label(x.center));
      for (const auto& arm : x.arms) {
        out += ' ';
        append_nodes(out, g, arm);
      }
    }
    out += '\n';
  }
  return out;
}

CertificateFile read_certificate(const MultiGraph& g, std::string_view text) {
  RawCertificate raw = parse_raw(text);
  auto labels = label_lookup(g);
  auto edges = edge_lookup(g);
  auto node = [&](Label l) {
    auto it = labels.find(l);
    return it == labels.end() || !g.node_alive(it->second) ? kNoNode : it->second;
  };
  auto nodes = [&](const std::vector<Label>& seq) {
    std::vector<NodeId> out;
    out.reserve(seq.size());
    for (Label l : seq) out.push_back(node(l));
    return out;
  };

  CertificateFile file;
  file.n = raw.n;
  file.m = raw.m;
  for (auto [a, b] : raw.s0) {
    NodeId u = node(a);
    NodeId v = node(b);
    EdgeId e = kNoEdge;
    if (u != kNoNode && v != kNoNode) {
      if (auto it = edges.find(pair_key(u, v)); it != edges.end()) e = it->second;
    }
    file.pr.s0_edges.push_back(e);
  }
  std::sort(file.pr.s0_edges.begin(), file.pr.s0_edges.end());
  for (const auto& rec : raw.steps) {
    if (!rec.expand) {
      file.pr.steps.emplace_back(BGPath{nodes(rec.parts[0])});
      continue;
    }
    ExpandRecord x;
    x.center = node(rec.parts[0].front());
    for (std::size_t a = 0; a < 3; ++a) x.arms[a] = nodes(rec.parts[a]);
    file.pr.steps.emplace_back(std::move(x));
  }
  return file;
}

MultiGraph graph_from_certificate(std::string_view text) {
  RawCertificate raw = parse_raw(text);
  std::string edges;
  auto add = [&](Label a, Label b) { edges += std::to_string(a) + " " + std::to_string(b) + "\n"; };
  for (auto [a, b] : raw.s0) add(a, b);
  for (const auto& rec : raw.steps)
    for (const auto& seq : rec.parts)
      for (std::size_t i = 0; i + 1 < seq.size(); ++i) add(seq[i], seq[i + 1]);
  return parse_graph(edges, GraphFormat::kEdgeList);
}

std::vector<EdgeId> step_edges(const MultiGraph& g, const Step& step) {
  if (const auto* p = std::get_if<BGPath>(&step)) return path_edges(g, p->nodes);
  std::vector<EdgeId> out;
  for (const auto& arm : std::get<ExpandRecord>(step).arms) {
    auto part = path_edges(g, arm);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace tricert
