#include <random>

#include "doctest.h"
#include "support.hpp"
#include "tricert/oracle.hpp"
#include "tricert/sequencer.hpp"
#include "tricert/transforms.hpp"
#include "tricert/verifier.hpp"

using namespace testing;

namespace {

PathRepresentation counterexample(const MultiGraph& g) {
  return {k4_edges(g), {path(g, {1, 5, 2}), path(g, {5, 3})}, false};
}

// Forward replay of every step, the reference for the reverse checks.
bool replays(const MultiGraph& g, const PathRepresentation& pr) {
  try {
    auto s = SubdivisionState::init(g, pr.s0_edges);
    for (const auto& st : pr.steps) {
      if (const auto* p = std::get_if<BGPath>(&st)) s.apply_bg_path(*p);
      else s.apply_expand(std::get<ExpandRecord>(st));
    }
    return s.covers_host();
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

TEST_CASE("k4 with an empty certificate") {
  auto g = graph(k4);
  CHECK(verify_certificate(g, {k4_edges(g), {}, false}).accepted);
  CHECK(verify_certificate(g, {k4_edges(g), {}, false}, true).accepted);
}

TEST_CASE("counterexample certificate") {
  auto g = graph(k4_plus5);
  auto pr = counterexample(g);
  CHECK(verify_certificate(g, pr).accepted);
  auto b = verify_certificate(g, pr, true);
  CHECK_FALSE(b.accepted);
  CHECK(b.step == 0u);
}

TEST_CASE("reordered counterexample") {
  auto g = graph(k4_plus5);
  PathRepresentation pr{k4_edges(g), {path(g, {5, 3}), path(g, {1, 5, 2})}, false};
  auto v = verify_certificate(g, pr);
  CHECK_FALSE(v.accepted);
  CHECK(v.step == 1u);
}

TEST_CASE("structural rejects") {
  auto g = graph(k4_plus5);
  SUBCASE("low degree graph") {
    auto h = graph(k4_minus34);
    CHECK_FALSE(verify_certificate(h, {}).accepted);
  }
  SUBCASE("too small") { CHECK_FALSE(verify_certificate(graph("1 2\n2 3\n3 1\n"), {}).accepted); }
  SUBCASE("uncovered edge") {
    auto pr = counterexample(g);
    pr.steps.pop_back();
    CHECK_FALSE(verify_certificate(g, pr).accepted);
  }
  SUBCASE("edge used twice") {
    auto pr = counterexample(g);
    pr.steps.push_back(path(g, {5, 3}));
    CHECK_FALSE(verify_certificate(g, pr).accepted);
  }
  SUBCASE("step is not a path") {
    auto pr = counterexample(g);
    pr.steps[0] = path(g, {1, 5, 1});
    CHECK_FALSE(verify_certificate(g, pr).accepted);
    pr.steps[0] = BGPath{{node(g, 1)}};
    CHECK_FALSE(verify_certificate(g, pr).accepted);
    pr.steps[0] = BGPath{{node(g, 1), kNoNode}};
    CHECK_FALSE(verify_certificate(g, pr).accepted);
  }
  SUBCASE("S0 not a k4") {
    PathRepresentation pr{edges(g, {{1, 2}, {1, 3}, {2, 3}}), {}, false};
    CHECK_FALSE(verify_certificate(g, pr).accepted);
  }
  SUBCASE("S0 with an unresolved entry") {
    auto pr = counterexample(g);
    pr.s0_edges.push_back(kNoEdge);
    CHECK_FALSE(verify_certificate(g, pr).accepted);
  }
}

TEST_CASE("removal conditions") {
  SUBCASE("condition 2: both ends on one link") {
    // S0 = k4 with 1-2 replaced by 1-5-6-2, then 5-7-6 and 7-3
    auto h = graph("1 3\n1 4\n2 3\n2 4\n3 4\n1 5\n5 6\n6 2\n5 7\n7 6\n7 3\n");
    PathRepresentation q{edges(h, {{1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {1, 5}, {5, 6}, {6, 2}}),
                         {path(h, {5, 7, 6}), path(h, {7, 3})}, false};
    auto v = verify_certificate(h, q);
    CHECK_FALSE(v.accepted);
    CHECK(v.step == 0u);
    CHECK(v.reason.find("condition 2") != std::string::npos);
  }
  SUBCASE("condition 3: inner nodes of parallel links") {
    auto g = graph("1 3\n1 4\n2 3\n2 4\n3 4\n1 5\n5 2\n1 6\n6 2\n5 6\n");
    PathRepresentation pr{edges(g, {{1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {1, 5}, {5, 2}}),
                          {path(g, {1, 6, 2}), path(g, {5, 6})}, false};
    auto v = verify_certificate(g, pr);
    CHECK_FALSE(v.accepted);
    CHECK(v.reason.find("condition 3") != std::string::npos);
  }
  SUBCASE("condition 1: endpoint gone") {
    auto g = graph(k4_plus5);
    PathRepresentation pr{k4_edges(g), {path(g, {5, 3}), path(g, {1, 5, 2})}, false};
    pr.steps = {path(g, {1, 5}), path(g, {5, 2}), path(g, {5, 3})};
    CHECK_FALSE(verify_certificate(g, pr).accepted);
  }
}

TEST_CASE("expand records") {
  auto g = graph(k4_plus5);
  ExpandRecord x{node(g, 5), {nodes(g, {5, 1}), nodes(g, {5, 2}), nodes(g, {5, 3})}};
  PathRepresentation pr{k4_edges(g), {x}, true};
  CHECK(verify_certificate(g, pr).accepted);
  CHECK(verify_certificate(g, pr, true).accepted);
  SUBCASE("arm not starting at the center") {
    auto y = x;
    y.arms[2] = nodes(g, {3, 5});
    CHECK_FALSE(verify_certificate(g, {k4_edges(g), {y}, true}).accepted);
  }
  SUBCASE("anchor that is not real") {
    auto h = graph("1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n1 5\n5 2\n6 5\n6 3\n6 4\n");
    ExpandRecord y{node(h, 6), {nodes(h, {6, 5}), nodes(h, {6, 3}), nodes(h, {6, 4})}};
    PathRepresentation q{k4_edges(h), {path(h, {1, 5, 2}), y}, false};
    CHECK_FALSE(verify_certificate(h, q).accepted);
    PathRepresentation ok{k4_edges(h), {path(h, {1, 5, 2}), path(h, {5, 6, 3}), path(h, {6, 4})}, false};
    CHECK(verify_certificate(h, ok).accepted);
    PathRepresentation bad{k4_edges(h), {y, path(h, {1, 5, 2})}, false};
    CHECK_FALSE(verify_certificate(h, bad).accepted);
  }
}

TEST_CASE("reverse checks agree with forward replay") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    auto g = gen_3_connected(6 + seed % 30, seed);
    auto r = certify(g);
    REQUIRE(r.certified());
    auto basic = to_basic(g, r.certificate());
    CHECK(verify_certificate(g, basic).accepted);
    CHECK(replays(g, basic));
    for (std::uint64_t t = 0; t < 6; ++t) {
      auto m = mutate_certificate(g, basic, seed * 31 + t);
      if (!m.applied) continue;
      CHECK(verify_certificate(g, m.pr).accepted == replays(g, m.pr));
    }
  }
}

TEST_CASE("never accepts on non 3-connected five node graphs") {
  std::vector<std::pair<MultiGraph, PathRepresentation>> honest;
  for (std::uint64_t mask = 0; mask < 1024; ++mask) {
    auto g = graph_from_mask(5, mask);
    auto r = certify(g);
    if (r.certified()) honest.emplace_back(g, r.certificate());
  }
  REQUIRE_FALSE(honest.empty());
  for (std::uint64_t mask = 0; mask < 1024; ++mask) {
    auto g = graph_from_mask(5, mask);
    if (is_3_connected_brute(g)) continue;
    for (const auto& [h, pr] : honest) REQUIRE_FALSE(verify_certificate(g, pr).accepted);
  }
}

TEST_CASE("never accepts on random non 3-connected graphs") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    auto g = gen_3_connected(6 + seed % 5, seed);
    auto r = certify(g);
    REQUIRE(r.certified());
    // drop one edge; the old certificate must not carry over
    for (EdgeId e : g.live_edges()) {
      auto h = g;
      h.remove_edge(e);
      if (is_3_connected_brute(h)) continue;
      REQUIRE_FALSE(verify_certificate(h, r.certificate()).accepted);
    }
  }
}

TEST_CASE("mutations are rejected") {
  std::size_t applied = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto g = gen_3_connected(6 + seed % 40, seed);
    auto r = certify(g);
    REQUIRE(r.certified());
    for (std::uint64_t t = 0; t < 5; ++t) {
      auto m = mutate_certificate(g, r.certificate(), seed * 5 + t);
      if (!m.applied) continue;
      ++applied;
      INFO(to_string(m.kind));
      CHECK_FALSE(verify_certificate(g, m.pr).accepted);
    }
  }
  CHECK(applied > 900);
}

TEST_CASE("witness checks") {
  auto k4m = graph(k4_minus34);
  CHECK(verify_witness(k4m, Witness::separation_pair(node(k4m, 1), node(k4m, 2))));
  auto bow = graph("1 2\n2 3\n3 1\n3 4\n4 5\n5 3\n");
  CHECK(verify_witness(bow, Witness::cut_vertex(node(bow, 3))));
  CHECK_FALSE(verify_witness(bow, Witness::cut_vertex(node(bow, 1))));
  auto g = graph(k4);
  CHECK_FALSE(verify_witness(g, Witness::separation_pair(0, 1)));
  CHECK_FALSE(verify_witness(g, Witness::too_few_nodes()));
  CHECK_FALSE(verify_witness(g, Witness::low_degree(0)));
  CHECK_FALSE(verify_witness(g, Witness::disconnected()));
  CHECK_FALSE(verify_witness(g, Witness::separation_pair(0, 0)));
  CHECK_FALSE(verify_witness(g, Witness::cut_vertex(17)));
  CHECK(verify_witness(graph("1 2\n2 3\n"), Witness::too_few_nodes()));
  CHECK(verify_witness(k4m, Witness::low_degree(node(k4m, 3))));
  CHECK(verify_witness(graph("1 2\n3 4\n"), Witness::disconnected()));
}

TEST_CASE("random junk never crashes and is rejected") {
  std::mt19937_64 rng(5);
  auto g = gen_3_connected(12, 3);
  auto honest = certify(g).certificate();
  auto pick = [&](int lo, int hi) { return static_cast<NodeId>(lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1))); };
  for (int t = 0; t < 3000; ++t) {
    PathRepresentation pr = honest;
    std::size_t steps = rng() % 6;
    pr.steps.clear();
    for (std::size_t k = 0; k < steps; ++k) {
      if (rng() % 4 == 0) {
        ExpandRecord x{pick(-1, 13), {}};
        for (auto& arm : x.arms) {
          arm.push_back(rng() % 5 ? x.center : pick(-1, 13));
          for (std::size_t j = rng() % 3; j-- > 0;) arm.push_back(pick(-1, 13));
        }
        pr.steps.push_back(x);
      } else {
        BGPath p;
        for (std::size_t j = rng() % 5; j-- > 0;) p.nodes.push_back(pick(-1, 13));
        pr.steps.push_back(p);
      }
    }
    if (rng() % 3 == 0) pr.s0_edges.push_back(pick(-1, 40));
    auto v = verify_certificate(g, pr, rng() % 2 == 0);
    if (v.accepted) CHECK(verify_certificate(g, pr).accepted);
  }
}
