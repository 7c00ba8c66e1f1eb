#include "doctest.h"
#include "support.hpp"

using namespace dcr;
using namespace dcr::testing;

namespace {
Graph triangle() {
  Graph g(3);
  g.add_link(NodeId{0}, NodeId{1}, rational(1, 2));
  g.add_link(NodeId{1}, NodeId{2}, rational(1, 2));
  g.add_link(NodeId{2}, NodeId{0}, rational(1, 2));
  return g;
}
}  // namespace

TEST_CASE("delete_link") {
  Graph t = delete_link(triangle(), LinkId{0});
  CHECK(t.link_count() == 2);
  CHECK(distance(t, NodeId{0}, NodeId{1}) == Hops(2));

  Graph single(2);
  LinkId e = single.add_link(NodeId{0}, NodeId{1}, rational(1, 2));
  Graph none = delete_link(single, e);
  CHECK(none.node_count() == 2);
  CHECK(none.link_count() == 0);

  Graph fr = figred_instance(Mode::Rational).graph;
  Graph cut = delete_link(fr, find_link(fr, 1, 2));
  CHECK(cut.link_count() == 8);
  CHECK(cut.degree(NodeId{2}) == 1);
  CHECK_THROWS_AS(delete_link(cut, find_link(fr, 1, 2)), std::invalid_argument);
}

TEST_CASE("contract_link") {
  auto [t, survivor] = contract_link(triangle(), LinkId{0});
  CHECK(t.node_count() == 2);
  CHECK(t.link_count() == 2);
  CHECK(t.degree(survivor) == 2);

  Graph path(3);
  LinkId ab = path.add_link(NodeId{0}, NodeId{1}, rational(1, 2));
  path.add_link(NodeId{1}, NodeId{2}, rational(1, 2));
  auto [p, s] = contract_link(path, ab);
  CHECK(p.link_count() == 1);
  CHECK(p.neighbors(s) == std::vector<NodeId>{NodeId{2}});

  Graph fr = figred_instance(Mode::Rational).graph;
  auto [c, merged] = contract_link(fr, find_link(fr, 0, 1));
  CHECK(c.node_count() == 7);
  CHECK(c.neighbors(merged) == std::vector<NodeId>{NodeId{2}, NodeId{4}, NodeId{7}});
}

TEST_CASE("delete_node") {
  Graph star(4);
  for (std::uint32_t v = 1; v < 4; ++v) star.add_link(NodeId{0}, NodeId{v}, rational(1, 2));
  Graph leaves = delete_node(star, NodeId{0});
  CHECK(leaves.node_count() == 3);
  CHECK(leaves.link_count() == 0);

  Graph fr = figred_instance(Mode::Rational).graph;
  Graph no2 = delete_node(fr, NodeId{2});
  CHECK(no2.node_count() == 7);
  CHECK(no2.link_count() == 7);
  CHECK_FALSE(no2.has_node(NodeId{2}));

  Graph lonely(2);
  CHECK(delete_node(lonely, NodeId{1}).link_count() == 0);
}

TEST_CASE("distance with exclusions") {
  Graph fr = figred_instance(Mode::Rational).graph;
  CHECK(distance(fr, NodeId{0}, NodeId{1}) == Hops(1));
  CHECK(distance(fr, NodeId{2}, NodeId{7}) == Hops(2));
  const NodeId excluded[] = {NodeId{0}, NodeId{1}};
  CHECK(distance(fr, NodeId{2}, NodeId{7}, excluded) == Hops(5));
  CHECK(distance(fr, NodeId{3}, NodeId{3}) == Hops(0));
  const NodeId self[] = {NodeId{3}};
  CHECK(distance(fr, NodeId{3}, NodeId{3}, self).is_infinite());
  CHECK(distance(fr, NodeId{1}, NodeId{7}, excluded).is_infinite());
}

TEST_CASE("components") {
  CHECK(components(triangle()).size() == 1);
  Graph two(4);
  two.add_link(NodeId{0}, NodeId{1}, rational(1, 2));
  two.add_link(NodeId{2}, NodeId{3}, rational(1, 2));
  CHECK(components(two).size() == 2);

  Graph no1 = delete_node(figred_instance(Mode::Rational).graph, NodeId{1});
  auto parts = components(no1);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == std::vector<NodeId>{NodeId{0}});
  CHECK(parts[1].size() == 6);
}

TEST_CASE("cut_vertices") {
  Graph path(3);
  path.add_link(NodeId{0}, NodeId{1}, rational(1, 2));
  path.add_link(NodeId{1}, NodeId{2}, rational(1, 2));
  CHECK(cut_vertices(path) == std::vector<NodeId>{NodeId{1}});
  CHECK(cut_vertices(triangle()).empty());
  CHECK(cut_vertices(figred_instance(Mode::Rational).graph) == std::vector<NodeId>{NodeId{1}});

  // parallel links do not hide a bridge endpoint
  Graph par(3);
  par.add_link(NodeId{0}, NodeId{1}, rational(1, 2));
  par.add_link(NodeId{0}, NodeId{1}, rational(1, 2));
  par.add_link(NodeId{1}, NodeId{2}, rational(1, 2));
  CHECK(cut_vertices(par) == std::vector<NodeId>{NodeId{1}});
}

TEST_CASE("cut_vertices agrees with brute-force node deletion") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 200; ++round) {
    Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 8), static_cast<int>(rng() % 14), true,
                           rng() % 2 == 0);
    std::vector<NodeId> expected;
    std::size_t base = components(g).size();
    for (NodeId v : g.nodes()) {
      // deleting an isolated node lowers the count, a leaf keeps it
      if (g.degree(v) == 0) continue;
      if (components(delete_node(g, v)).size() > base) expected.push_back(v);
    }
    CHECK(cut_vertices(g) == expected);
  }
}

TEST_CASE("is_d_K_connected") {
  Graph path = path_graph(4, rational(1, 2)).graph;
  const NodeId ends[] = {NodeId{0}, NodeId{3}};
  CHECK(is_d_K_connected(path, ends, 3));
  CHECK_FALSE(is_d_K_connected(path, ends, 2));
  Graph fr = figred_instance(Mode::Rational).graph;
  const NodeId st[] = {NodeId{0}, NodeId{7}};
  CHECK(is_d_K_connected(fr, st, 2));
  CHECK_FALSE(is_d_K_connected(fr, st, 1));
}

TEST_CASE("graph rejects bad input") {
  Graph g(2);
  CHECK_THROWS_AS(g.add_link(NodeId{0}, NodeId{0}, rational(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(g.add_link(NodeId{0}, NodeId{5}, rational(1, 2)), std::invalid_argument);
  CHECK_THROWS(g.link(LinkId{3}));
}
