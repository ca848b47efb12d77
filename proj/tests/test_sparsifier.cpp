#include "doctest.h"
#include "support.hpp"
#include "tricert/oracle.hpp"
#include "tricert/sparsifier.hpp"

using namespace testing;

namespace {

MultiGraph complete(std::size_t n) {
  MultiGraph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(static_cast<NodeId>(i), static_cast<NodeId>(j));
  return g;
}

bool acyclic(const MultiGraph& g, const std::vector<EdgeId>& es) {
  std::vector<NodeId> up(g.node_slots());
  for (std::size_t i = 0; i < up.size(); ++i) up[i] = static_cast<NodeId>(i);
  auto find = [&](NodeId v) {
    while (up[v] != v) v = up[v] = up[up[v]];
    return v;
  };
  for (EdgeId e : es) {
    NodeId a = find(g.ends(e).u);
    NodeId b = find(g.ends(e).v);
    if (a == b) return false;
    up[a] = b;
  }
  return true;
}

}  // namespace

TEST_CASE("k4 unchanged") {
  auto g = graph(k4);
  auto [h, d] = sparsify3(g);
  CHECK(h.edge_count() == 6);
  CHECK(d.kept.size() == 6);
}

TEST_CASE("k8 thinned, still 3-connected") {
  auto g = complete(8);
  auto [h, d] = sparsify3(g);
  CHECK(h.edge_count() <= 21);
  CHECK(h.node_count() == 8);
  CHECK(is_3_connected_brute(h));
}

TEST_CASE("two k4 glued on two nodes keep their separation pair") {
  auto g = graph("1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n3 5\n3 6\n4 5\n4 6\n5 6\n");
  auto [h, d] = sparsify3(g);
  CHECK_FALSE(is_3_connected_brute(g));
  CHECK_FALSE(is_3_connected_brute(h));
  CHECK(component_count_without(h, node(h, 3), node(h, 4)) == 2);
}

TEST_CASE("forests are acyclic and maximal in their residual") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto g = random_graph(10, 0.6, seed);
    auto [h, d] = sparsify3(g);
    CHECK(h.edge_count() <= 3 * (g.node_count() - 1));
    std::vector<char> used(g.edge_slots(), 0);
    for (const auto& f : d.forests) {
      CHECK(acyclic(g, f));
      MultiGraph rest(g.labels());
      for (EdgeId e : g.live_edges())
        if (!used[e]) rest.add_edge(g.ends(e).u, g.ends(e).v);
      MultiGraph forest(g.labels());
      for (EdgeId e : f) forest.add_edge(g.ends(e).u, g.ends(e).v);
      CHECK(connected_components(rest).size() == connected_components(forest).size());
      for (EdgeId e : f) used[e] = 1;
    }
  }
}

TEST_CASE("oracle agrees on random graphs") {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    auto g = random_graph(5 + seed % 6, 0.3 + 0.5 * static_cast<double>(seed % 3) / 2.0, seed);
    auto [h, d] = sparsify3(g);
    REQUIRE(is_3_connected_brute(h) == is_3_connected_brute(g));
  }
}

TEST_CASE("kept ids are the input ids") {
  auto g = random_graph(9, 0.7, 3);
  auto [h, d] = sparsify3(g);
  for (EdgeId e : d.kept) {
    CHECK(h.edge_alive(e));
    CHECK(h.ends(e).u == g.ends(e).u);
    CHECK(h.ends(e).v == g.ends(e).v);
  }
  CHECK(std::is_sorted(d.kept.begin(), d.kept.end()));
}
