#pragma once

#include <array>
#include <cstdint>

#include "tricert/certificate.hpp"
#include "tricert/graph.hpp"

namespace tricert {

/// Pair-deletion check on the simplification of g. O(n^2 (n + m)).
bool is_3_connected_brute(const MultiGraph& g);

/// Relative weights of the three edge-adding operations.
struct OpMix {
  unsigned a = 1;  // edge between non-adjacent nodes
  unsigned b = 1;  // subdivide an edge, join the new node to another node
  unsigned c = 1;  // subdivide two edges, join the two new nodes
};

/// Simple 3-connected graph on n_target nodes grown from K4 by random
/// simple-preserving operations. Labels are 0..n-1; deterministic per seed.
MultiGraph gen_3_connected(std::size_t n_target, std::uint64_t seed, OpMix mix = {});

/// Erdos-Renyi G(n, p) on labels 0..n-1, deterministic per seed.
MultiGraph random_graph(std::size_t n, double p, std::uint64_t seed);

/// Simple graph on n labelled nodes whose edges are the set bits of `mask`
/// over the pairs (0,1), (0,2), ..., (n-2,n-1).
MultiGraph graph_from_mask(std::size_t n, std::uint64_t mask);

enum class MutationKind { kDropStep, kDuplicateStep, kRedirectEndpoint, kSwapDependent, kDeleteS0Edge };

const char* to_string(MutationKind k);

struct Mutation {
  PathRepresentation pr;
  MutationKind kind = MutationKind::kDropStep;
  bool applied = false;  // false when no mutation fits the certificate
};

/// One invalidating mutation of an honest certificate for g. The kind is
/// drawn from the seed; inapplicable kinds fall through to the next one.
Mutation mutate_certificate(const MultiGraph& g, const PathRepresentation& pr, std::uint64_t seed);

}  // namespace tricert
