#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tricert/graph.hpp"
#include "tricert/subdivision.hpp"

namespace tricert {

/// S0 plus the ordered construction steps.
struct PathRepresentation {
  std::vector<EdgeId> s0_edges;  // ascending; kNoEdge marks an unresolvable entry read from text
  std::vector<Step> steps;
  bool basic = false;

  friend bool operator==(const PathRepresentation&, const PathRepresentation&) = default;
};

/// Certificate text with node ids resolved against a graph.
struct CertificateFile {
  std::size_t n = 0;
  std::size_t m = 0;
  PathRepresentation pr;
};

/// Serializes with the labels of g. S0 edges are written "u v" with u <= v
/// by label, in ascending edge id order.
std::string write_certificate(const MultiGraph& g, const PathRepresentation& pr);

/// Parses certificate text. Node labels are resolved through g; unknown
/// labels become kNoNode and S0 pairs that are not edges of g become kNoEdge,
/// so the verifier can reject them. Throws ParseError on malformed text.
CertificateFile read_certificate(const MultiGraph& g, std::string_view text);

/// Graph implied by a certificate alone: S0 edges as listed, then the edges
/// of every step in order, numbered like a parsed edge list.
MultiGraph graph_from_certificate(std::string_view text);

/// Edge ids of all steps, in step order, resolved in g (kNoEdge if missing).
std::vector<EdgeId> step_edges(const MultiGraph& g, const Step& step);

}  // namespace tricert
