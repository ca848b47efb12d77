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

std::vector<std::pair<Label, Label>> labelled(const MultiGraph& g, const ContractionSequence& cs) {
  std::vector<std::pair<Label, Label>> out;
  for (auto [u, v] : cs) {
    Label a = g.label(u);
    Label b = g.label(v);
    out.emplace_back(std::max(a, b), std::min(a, b));
  }
  return out;
}

}  // namespace

TEST_CASE("path to edge") {
  SUBCASE("k4") {
    auto g = graph(k4);
    auto er = path_to_edge(g, {k4_edges(g), {}, false});
    CHECK(er.ops.empty());
    CHECK(er.g0.edge_count() == 6);
    CHECK(edge_to_path(er).steps.empty());
  }
  SUBCASE("counterexample") {
    auto g = graph(k4_plus5);
    auto er = path_to_edge(g, counterexample(g));
    CHECK(er.g0.node_count() == 4);
    CHECK(er.g0.edge_count() == 6);
    REQUIRE(er.ops.size() == 2);
    const auto* a = std::get_if<OpA>(&er.ops[0]);
    REQUIRE(a);
    CHECK(pair_key(a->u, a->v) == pair_key(node(g, 1), node(g, 2)));
    const auto* b = std::get_if<OpB>(&er.ops[1]);
    REQUIRE(b);
    CHECK(b->s.sub == a->e);
    CHECK(b->s.x == node(g, 5));
    CHECK(b->y == node(g, 3));
    CHECK(b->e == edge(g, 5, 3));
    auto back = edge_to_path(er);
    CHECK(back.steps == counterexample(g).steps);
    CHECK(back.s0_edges == k4_edges(g));
  }
  SUBCASE("invalid certificate") {
    auto g = graph(k4_plus5);
    PathRepresentation bad{k4_edges(g), {path(g, {5, 3}), path(g, {1, 5, 2})}, false};
    CHECK_THROWS_AS(path_to_edge(g, bad), TransformError);
  }
}

TEST_CASE("replay") {
  auto g = graph(k4_plus5);
  auto er = path_to_edge(g, counterexample(g));
  auto h = replay_edge_rep(er);
  CHECK(h.node_count() == 5);
  CHECK(h.edge_count() == 9);
  CHECK(serialize_edge_list(h) == serialize_edge_list(g));
  for (EdgeId e : g.live_edges()) {
    REQUIRE(h.edge_alive(e));
    CHECK(pair_key(h.ends(e).u, h.ends(e).v) == pair_key(g.ends(e).u, g.ends(e).v));
  }
  SUBCASE("reused id") {
    auto bad = er;
    std::get<OpB>(bad.ops[1]).e = std::get<OpA>(bad.ops[0]).e;
    CHECK_THROWS_AS(replay_edge_rep(bad), ReplayError);
  }
  SUBCASE("missing edge") {
    auto bad = er;
    std::get<OpB>(bad.ops[1]).s.sub = 40;
    try {
      replay_edge_rep(bad);
      FAIL("no throw");
    } catch (const ReplayError& e) {
      CHECK(std::string(e.what()).find("op 1") != std::string::npos);
    }
  }
}

TEST_CASE("edge representation text") {
  auto g = graph(k4_plus5);
  auto er = path_to_edge(g, counterexample(g));
  auto text = write_edge_rep(er);
  auto again = read_edge_rep(text, &g);
  CHECK(write_edge_rep(again) == text);
  auto free = read_edge_rep(text);
  CHECK(write_edge_rep(free) == text);
  CHECK_THROWS_AS(read_edge_rep("edgerep v1\nn 4 m 6\nG0 1\n0 1\n"), ParseError);
  CHECK_THROWS_AS(read_edge_rep(text.substr(0, text.size() - 3)), ParseError);
}

TEST_CASE("round trips on generated certificates") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    auto g = gen_3_connected(5 + seed % 45, seed);
    auto r = certify(g);
    REQUIRE(r.certified());
    const auto& pr = r.certificate();
    auto er = path_to_edge(g, pr);
    auto pr2 = edge_to_path(er);
    CHECK(write_certificate(g, pr2) == write_certificate(g, pr));
    auto er2 = path_to_edge(replay_edge_rep(er), pr2);
    CHECK(write_edge_rep(er2) == write_edge_rep(er));
    auto basic = to_basic(g, pr);
    auto erb = path_to_edge(g, basic);
    CHECK(write_certificate(g, edge_to_path(erb)) == write_certificate(g, basic));
  }
}

TEST_CASE("to basic") {
  SUBCASE("counterexample becomes one expand") {
    auto g = graph(k4_plus5);
    auto b = to_basic(g, counterexample(g));
    CHECK(b.basic);
    REQUIRE(b.steps.size() == 1);
    const auto* x = std::get_if<ExpandRecord>(&b.steps[0]);
    REQUIRE(x);
    CHECK(x->center == node(g, 5));
    std::vector<NodeId> anchors{x->anchor(0), x->anchor(1), x->anchor(2)};
    std::sort(anchors.begin(), anchors.end());
    CHECK(anchors == nodes(g, {1, 2, 3}));
    CHECK(verify_certificate(g, b, true).accepted);
  }
  SUBCASE("k4 unchanged") {
    auto g = graph(k4);
    auto b = to_basic(g, {k4_edges(g), {}, false});
    CHECK(b.steps.empty());
    CHECK(b.s0_edges == k4_edges(g));
  }
  SUBCASE("partner ends inside a link") {
    auto g = graph("1 2\n1 3\n1 4\n2 3\n2 4\n3 6\n6 4\n1 5\n5 2\n5 6\n");
    PathRepresentation pr{edges(g, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 6}, {6, 4}}),
                          {path(g, {1, 5, 2}), path(g, {5, 6})}, false};
    REQUIRE(verify_certificate(g, pr).accepted);
    REQUIRE_FALSE(verify_certificate(g, pr, true).accepted);
    auto b = to_basic(g, pr);
    std::vector<Step> want{path(g, {6, 5, 1}), path(g, {5, 2})};
    CHECK(b.steps == want);
    CHECK(verify_certificate(g, b, true).accepted);
  }
  SUBCASE("expand records are refused") {
    auto g = graph(k4_plus5);
    PathRepresentation pr{k4_edges(g), {ExpandRecord{node(g, 5), {nodes(g, {5, 1}), nodes(g, {5, 2}), nodes(g, {5, 3})}}}, true};
    CHECK_THROWS_AS(to_basic(g, pr), TransformError);
  }
}

TEST_CASE("from basic") {
  auto g = graph(k4_plus5);
  PathRepresentation pr{k4_edges(g), {ExpandRecord{node(g, 5), {nodes(g, {5, 3}), nodes(g, {5, 2}), nodes(g, {5, 1})}}}, true};
  auto nb = from_basic(pr);
  CHECK_FALSE(nb.basic);
  CHECK(nb.steps == counterexample(g).steps);
  CHECK(from_basic({}).steps.empty());
  CHECK(verify_certificate(g, to_basic(g, nb), true).accepted);
}

TEST_CASE("basic transforms on generated certificates") {
  std::size_t nonbasic = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto g = seed % 2 ? gen_3_connected(6 + seed % 40, seed, {8, 1, 1}) : random_graph(10 + seed % 20, 0.5, seed);
    auto r = certify(g);
    if (!r.certified()) continue;
    if (!verify_certificate(g, r.certificate(), true).accepted) ++nonbasic;
    auto b = to_basic(g, r.certificate());
    CHECK(verify_certificate(g, b, true).accepted);
    auto back = from_basic(b);
    CHECK(verify_certificate(g, back).accepted);
    CHECK(verify_certificate(g, to_basic(g, back), true).accepted);
  }
  CHECK(nonbasic > 100);
}

TEST_CASE("contractions") {
  SUBCASE("k4") {
    auto g = graph(k4);
    CHECK(to_contractions(path_to_edge(g, {k4_edges(g), {}, false})).empty());
  }
  SUBCASE("counterexample") {
    auto g = graph(k4_plus5);
    auto cs = to_contractions(path_to_edge(g, counterexample(g)));
    CHECK(labelled(g, cs) == std::vector<std::pair<Label, Label>>{{5, 2}});
    auto k = apply_contractions(g, cs);
    CHECK(k.node_count() == 4);
    CHECK(k.edge_count() == 6);
  }
  SUBCASE("two subdivided edges joined") {
    auto g = graph("1 5\n5 2\n1 3\n1 4\n2 3\n2 4\n3 6\n6 4\n5 6\n");
    PathRepresentation pr{edges(g, {{1, 3}, {1, 4}, {2, 3}, {2, 4}, {1, 5}, {5, 2}, {3, 6}, {6, 4}}),
                          {path(g, {5, 6})}, false};
    auto cs = to_contractions(path_to_edge(g, pr));
    CHECK(labelled(g, cs) == std::vector<std::pair<Label, Label>>{{5, 2}, {6, 4}});
    auto k = apply_contractions(g, cs);
    CHECK(k.node_count() == 4);
    CHECK(k.edge_count() == 6);
  }
  SUBCASE("non adjacent pair") {
    auto g = graph(k4_plus5);
    CHECK_THROWS(apply_contractions(g, {{node(g, 4), node(g, 5)}}));
  }
  SUBCASE("generated graphs stay 3-connected") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      auto g = gen_3_connected(5 + seed % 8, seed);
      auto r = certify(g);
      REQUIRE(r.certified());
      auto cs = to_contractions(path_to_edge(g, r.certificate()));
      REQUIRE(cs.size() == g.node_count() - 4);
      MultiGraph h = g;
      for (auto [u, v] : cs) {
        CHECK(h.neighbors(u).size() >= 3);
        CHECK(h.neighbors(v).size() >= 3);
        h = apply_contractions(h, {{u, v}});
        CHECK(is_3_connected_brute(h));
      }
      CHECK(h.node_count() == 4);
      CHECK(h.edge_count() == 6);
      CHECK(is_simple(h));
    }
  }
}

TEST_CASE("contraction text") {
  auto g = graph(k4_plus5);
  auto cs = to_contractions(path_to_edge(g, counterexample(g)));
  CHECK(write_contractions(g, cs) == "c 5 2\n");
}
