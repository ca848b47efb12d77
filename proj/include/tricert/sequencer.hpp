#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "tricert/certificate.hpp"
#include "tricert/graph.hpp"
#include "tricert/subdivision.hpp"
#include "tricert/witness.hpp"

namespace tricert {

struct CertifyOptions {
  std::optional<std::vector<EdgeId>> s0;  // prescribed start subdivision (edge ids of the input)
  bool basic = false;
  bool sparsify = true;
};

struct CertifyResult {
  std::variant<PathRepresentation, Witness> verdict;
  SimplifyReport simplify_report;
  std::vector<EdgeId> sparsifier_leftover;  // appended as length-1 steps
  bool sparsifier_bypassed = false;         // a witness failed revalidation and the run was repeated

  bool certified() const { return std::holds_alternative<PathRepresentation>(verdict); }
  const PathRepresentation& certificate() const { return std::get<PathRepresentation>(verdict); }
  const Witness& witness() const { return std::get<Witness>(verdict); }
};

/// Next BG-path for s in g, or a witness that g is not 3-connected.
/// Throws UsageError if s already covers g.
std::variant<BGPath, Witness> find_bg_path(const MultiGraph& g, const SubdivisionState& s);

/// Full certifying test. Witnesses refer to node ids of g_raw and are checked
/// against it before being returned. Throws StructureError if a prescribed S0
/// is not a subdivision of a 3-connected graph.
CertifyResult certify(const MultiGraph& g_raw, const CertifyOptions& opts = {});

}  // namespace tricert
