#include "doctest.h"
#include "support.hpp"
#include "tricert/oracle.hpp"
#include "tricert/sequencer.hpp"

using namespace testing;

namespace {

std::vector<std::vector<Label>> link_labels(const MultiGraph& g, const std::vector<Link>& links) {
  std::vector<std::vector<Label>> out;
  for (const auto& l : links) {
    std::vector<Label> seq;
    for (NodeId v : l.nodes) seq.push_back(g.label(v));
    if (seq.front() > seq.back()) std::reverse(seq.begin(), seq.end());
    out.push_back(seq);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EdgeId> all_but(const MultiGraph& g, std::initializer_list<std::pair<Label, Label>> drop) {
  auto skip = edges(g, drop);
  std::vector<EdgeId> out;
  for (EdgeId e : g.live_edges())
    if (!std::binary_search(skip.begin(), skip.end(), e)) out.push_back(e);
  return out;
}

// Graph of S with every inner node smoothed away.
MultiGraph smooth_of(const MultiGraph& host, const SubdivisionState& s) {
  MultiGraph h(host.labels());
  for (NodeId v = 0; v < static_cast<NodeId>(host.node_slots()); ++v)
    if (!s.contains_node(v)) h.kill_node(v);
  for (EdgeId e : s.edges()) h.add_edge(host.ends(e).u, host.ends(e).v);
  for (NodeId v : h.live_nodes())
    if (h.degree(v) == 2) h.smooth(v, SmoothIds::kFreshId);
  return h;
}

}  // namespace

TEST_CASE("init on k4") {
  auto g = graph(k4);
  auto s = SubdivisionState::init(g, k4_edges(g));
  CHECK(s.real_count() == 4);
  CHECK(s.links().size() == 6);
  CHECK(s.is_smooth());
  CHECK(s.covers_host());
}

TEST_CASE("init on the eight node start graph") {
  auto g = graph(eight_node);
  auto s = SubdivisionState::init(g, all_but(g, {{5, 8}, {8, 7}}));
  CHECK(s.real_count() == 4);
  for (Label l : {1, 3, 4, 6}) CHECK(s.is_real(node(g, l)));
  auto want = std::vector<std::vector<Label>>{{1, 2, 3}, {1, 4}, {1, 5, 6}, {3, 4}, {3, 6}, {4, 7, 6}};
  CHECK(link_labels(g, s.links()) == want);
}

TEST_CASE("init rejects a triangle") {
  auto g = graph(k4);
  CHECK_THROWS_AS(SubdivisionState::init(g, edges(g, {{1, 2}, {2, 3}, {1, 3}})), StructureError);
  CHECK_THROWS_AS(SubdivisionState::init(g, edges(g, {{1, 2}, {2, 3}})), StructureError);
}

TEST_CASE("compute links") {
  SUBCASE("eight node graph has nine links") {
    auto g = graph(eight_node);
    std::vector<char> all(g.edge_slots(), 1);
    auto want = std::vector<std::vector<Label>>{{1, 2, 3}, {1, 4}, {1, 5}, {3, 4}, {3, 6},
                                                {4, 7}, {5, 6}, {5, 8, 7}, {6, 7}};
    CHECK(link_labels(g, compute_links(g, all)) == want);
  }
  SUBCASE("k4") {
    auto g = graph(k4);
    std::vector<char> all(g.edge_slots(), 1);
    auto links = compute_links(g, all);
    CHECK(links.size() == 6);
    for (const auto& l : links) CHECK(l.length() == 1);
  }
  SUBCASE("k4 with every edge subdivided") {
    auto g = graph("1 12\n12 2\n1 13\n13 3\n1 14\n14 4\n2 23\n23 3\n2 24\n24 4\n3 34\n34 4\n");
    std::vector<char> all(g.edge_slots(), 1);
    auto links = compute_links(g, all);
    CHECK(links.size() == 6);
    for (const auto& l : links) CHECK(l.length() == 2);
  }
  SUBCASE("ordered by smallest edge id") {
    auto g = graph(eight_node);
    std::vector<char> all(g.edge_slots(), 1);
    auto links = compute_links(g, all);
    EdgeId prev = -1;
    for (const auto& l : links) {
      EdgeId lo = *std::min_element(l.edges.begin(), l.edges.end());
      CHECK(lo > prev);
      prev = lo;
    }
  }
}

TEST_CASE("bg path conditions") {
  SUBCASE("path e-h-g is valid") {
    auto g = graph(eight_node);
    auto s = SubdivisionState::init(g, all_but(g, {{5, 8}, {8, 7}}));
    CHECK(s.check_bg_path(path(g, {5, 8, 7})) == PathCheck::kValid);
  }
  SUBCASE("two inner nodes of one link") {
    // link 1-5-6-2 carries both ends of the chord 5-6 path through 7
    auto g = graph("1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n1 5\n5 6\n6 2\n5 7\n7 6\n");
    auto s = SubdivisionState::init(g, all_but(g, {{1, 2}, {5, 7}, {7, 6}}));
    CHECK(s.check_bg_path(path(g, {5, 7, 6})) == PathCheck::kCondition2);
  }
  SUBCASE("inner nodes of parallel links") {
    auto g = graph("1 3\n1 4\n2 3\n2 4\n3 4\n1 5\n5 2\n1 6\n6 2\n5 6\n");
    auto s = SubdivisionState::init(g, all_but(g, {{5, 6}, {1, 6}, {6, 2}}));
    s.apply_bg_path(path(g, {1, 6, 2}));
    CHECK(s.parallel_count(node(g, 1), node(g, 2)) == 2);
    CHECK(s.check_bg_path(path(g, {5, 6})) == PathCheck::kCondition3);
  }
  SUBCASE("path through S") {
    auto g = graph(k4_plus5);
    auto s = SubdivisionState::init(g, k4_edges(g));
    CHECK(s.check_bg_path(path(g, {1, 5, 2})) == PathCheck::kValid);
    CHECK(s.check_bg_path(path(g, {3, 1, 5})) == PathCheck::kCondition1);
    CHECK(s.check_bg_path(path(g, {1, 2})) == PathCheck::kCondition1);
    CHECK(s.check_bg_path(path(g, {4, 5})) == PathCheck::kNotAPath);
  }
}

TEST_CASE("apply bg path") {
  SUBCASE("step e-h-g gives nine links") {
    auto g = graph(eight_node);
    auto s = SubdivisionState::init(g, all_but(g, {{5, 8}, {8, 7}}));
    s.apply_bg_path(path(g, {5, 8, 7}));
    CHECK(s.links().size() == 9);
    CHECK(s.real_count() == 6);
    CHECK(s.covers_host());
    std::vector<char> all(g.edge_slots(), 1);
    CHECK(s.links() == compute_links(g, all));
  }
  SUBCASE("counterexample steps") {
    auto g = graph(k4_plus5);
    auto s = SubdivisionState::init(g, k4_edges(g));
    s.apply_bg_path(path(g, {1, 5, 2}));
    CHECK(s.parallel_count(node(g, 1), node(g, 2)) == 2);
    CHECK(s.is_inner(node(g, 5)));
    s.apply_bg_path(path(g, {5, 3}));
    CHECK(s.is_real(node(g, 5)));
    CHECK(s.covers_host());
    CHECK(s.real_count() == 5);
  }
  SUBCASE("invalid path is refused") {
    auto g = graph(k4_plus5);
    auto s = SubdivisionState::init(g, k4_edges(g));
    CHECK_THROWS_AS(s.apply_bg_path(path(g, {3, 1, 5})), UsageError);
  }
}

TEST_CASE("apply expand") {
  auto g = graph(k4_plus5);
  SUBCASE("counterexample shape") {
    auto s = SubdivisionState::init(g, k4_edges(g));
    ExpandRecord x{node(g, 5), {nodes(g, {5, 1}), nodes(g, {5, 2}), nodes(g, {5, 3})}};
    CHECK(s.can_expand(x));
    s.apply_expand(x);
    CHECK(s.covers_host());
    CHECK(s.is_real(node(g, 5)));
    CHECK(s.links().size() == 9);
  }
  SUBCASE("equal anchors") {
    auto s = SubdivisionState::init(g, k4_edges(g));
    ExpandRecord x{node(g, 5), {nodes(g, {5, 1}), nodes(g, {5, 1}), nodes(g, {5, 3})}};
    CHECK_FALSE(s.can_expand(x));
    CHECK_THROWS_AS(s.apply_expand(x), UsageError);
  }
  SUBCASE("arm meets S early") {
    auto h = graph("1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n1 5\n5 2\n5 6\n6 3\n6 4\n");
    auto s = SubdivisionState::init(h, k4_edges(h));
    ExpandRecord x{node(h, 5), {nodes(h, {5, 1}), nodes(h, {5, 2}), nodes(h, {5, 6, 3, 4})}};
    CHECK_THROWS_AS(s.apply_expand(x), UsageError);
  }
  SUBCASE("anchor not real") {
    auto h = graph("1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n1 5\n5 2\n6 5\n6 3\n6 4\n6 1\n");
    auto s = SubdivisionState::init(h, k4_edges(h));
    s.apply_bg_path(path(h, {1, 5, 2}));
    ExpandRecord x{node(h, 6), {nodes(h, {6, 5}), nodes(h, {6, 3}), nodes(h, {6, 4})}};
    CHECK_FALSE(s.can_expand(x));
  }
}

TEST_CASE("incremental links match a fresh computation along certificates") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto g = gen_3_connected(5 + seed % 6, seed);
    auto r = certify(g, {.s0 = std::nullopt, .basic = false, .sparsify = false});
    REQUIRE(r.certified());
    const auto& pr = r.certificate();
    auto s = SubdivisionState::init(g, pr.s0_edges);
    for (const auto& st : pr.steps) {
      std::size_t inner_ends = 0;
      const auto& p = std::get<BGPath>(st);
      inner_ends += s.is_inner(p.front()) + s.is_inner(p.back());
      std::size_t before = s.real_count();
      s.apply_bg_path(p);
      CHECK(s.real_count() == before + inner_ends);
      CHECK(s.links() == compute_links(g, s.edge_mask()));
      CHECK(is_3_connected_brute(smooth_of(g, s)));
    }
    CHECK(s.covers_host());
  }
}
