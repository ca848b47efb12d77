#include "tricert/witness.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace tricert {

std::string format_witness(const MultiGraph& g, const Witness& w) {
  auto lbl = [&](NodeId v) { return std::to_string(g.label(v)); };
  switch (w.kind) {
    case WitnessKind::kTooFewNodes: return "WITNESS TOOSMALL\n";
    case WitnessKind::kLowDegree: return "WITNESS LOWDEGREE " + lbl(w.u) + "\n";
    case WitnessKind::kDisconnected: return "WITNESS DISCONNECTED\n";
    case WitnessKind::kCutVertex: return "WITNESS CUTVERTEX " + lbl(w.u) + "\n";
    case WitnessKind::kSeparationPair: return "WITNESS SEPPAIR " + lbl(w.u) + " " + lbl(w.v) + "\n";
  }
  return {};
}

Witness parse_witness(const MultiGraph& g, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string head;
  std::string kind;
  in >> head >> kind;
  if (head != "WITNESS") throw ParseError(1, "expected WITNESS");
  auto labels = label_lookup(g);
  auto node = [&]() {
    std::string tok;
    if (!(in >> tok)) throw ParseError(1, "missing node label");
    Label l = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), l);
    if (ec != std::errc() || p != tok.data() + tok.size()) throw ParseError(1, "bad node label '" + tok + "'");
    auto it = labels.find(l);
    if (it == labels.end()) throw ParseError(1, "unknown node label " + tok);
    return it->second;
  };
  if (kind == "TOOSMALL") return Witness::too_few_nodes();
  if (kind == "DISCONNECTED") return Witness::disconnected();
  if (kind == "LOWDEGREE") return Witness::low_degree(node());
  if (kind == "CUTVERTEX") return Witness::cut_vertex(node());
  if (kind == "SEPPAIR") {
    NodeId a = node();
    NodeId b = node();
    Witness w{WitnessKind::kSeparationPair, a, b};
    return w;
  }
  throw ParseError(1, "unknown witness kind '" + kind + "'");
}

}  // namespace tricert
