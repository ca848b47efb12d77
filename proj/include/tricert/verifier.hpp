#pragma once

#include <optional>
#include <string>

#include "tricert/certificate.hpp"
#include "tricert/graph.hpp"
#include "tricert/witness.hpp"

namespace tricert {

struct Verdict {
  bool accepted = false;
  std::string reason;               // empty when accepted
  std::optional<std::size_t> step;  // offending step, if any

  explicit operator bool() const { return accepted; }
};

/// Checks that pr builds the simplification of g_raw from a K4-subdivision.
/// Node ids in pr refer to g_raw. Runs in time linear in the certificate
/// length; basic_mode adds a forward replay that rejects steps creating
/// parallel links.
Verdict verify_certificate(const MultiGraph& g_raw, const PathRepresentation& pr, bool basic_mode = false);

/// True if w shows that g_raw (after simplification) is not 3-connected.
bool verify_witness(const MultiGraph& g_raw, const Witness& w);

}  // namespace tricert
