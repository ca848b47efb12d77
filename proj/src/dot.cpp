#include "tricert/dot.hpp"

#include "tricert/subdivision.hpp"

namespace tricert {

std::string stage_dot(const MultiGraph& g, const PathRepresentation& pr, std::size_t stage) {
  if (stage > pr.steps.size())
    throw UsageError("stage " + std::to_string(stage) + " beyond " + std::to_string(pr.steps.size()) + " steps");
  auto [gs, report] = simplify(g);
  auto s = SubdivisionState::init(gs, pr.s0_edges);
  for (std::size_t i = 0; i < stage; ++i) {
    if (const auto* p = std::get_if<BGPath>(&pr.steps[i])) s.apply_bg_path(*p);
    else s.apply_expand(std::get<ExpandRecord>(pr.steps[i]));
  }
  std::vector<EdgeId> next;
  if (stage < pr.steps.size()) next = step_edges(gs, pr.steps[stage]);

  auto name = [&](NodeId v) { return std::to_string(gs.label(v)); };
  std::string out = "graph S" + std::to_string(stage) + " {\n";
  out += "  node [shape=circle, width=0.3, fontsize=10];\n";
  std::vector<char> shown(gs.node_slots(), 0);
  for (NodeId v = 0; v < static_cast<NodeId>(gs.node_slots()); ++v) {
    if (!s.contains_node(v)) continue;
    shown[v] = 1;
    out += "  " + name(v);
    if (s.is_real(v)) out += " [style=filled, fillcolor=black, fontcolor=white]";
    out += ";\n";
  }
  for (EdgeId e : next) {
    if (e == kNoEdge) continue;
    for (NodeId v : {gs.ends(e).u, gs.ends(e).v})
      if (!shown[v]) {
        shown[v] = 1;
        out += "  " + name(v) + " [color=gray40, fontcolor=gray40];\n";
      }
  }
  for (EdgeId e : s.edges()) out += "  " + name(gs.ends(e).u) + " -- " + name(gs.ends(e).v) + ";\n";
  for (EdgeId e : next)
    if (e != kNoEdge) out += "  " + name(gs.ends(e).u) + " -- " + name(gs.ends(e).v) + " [style=dashed];\n";
  out += "}\n";
  return out;
}

}  // namespace tricert
