#include "doctest.h"
#include "support.hpp"

using namespace dcr;
using namespace dcr::testing;

namespace {
Instance single_link(const Prob& r, int d = 1) {
  Graph g(2);
  g.add_link(NodeId{0}, NodeId{1}, r);
  return make_instance(std::move(g), NodeId{0}, NodeId{1}, d, r.mode());
}
}  // namespace

TEST_CASE("brute force on tiny instances") {
  CHECK(dcr_bruteforce(single_link(Prob::one(Mode::Rational))).is_one());
  CHECK(dcr_bruteforce(single_link(p_symbol())) == p_symbol());
  CHECK(dcr_bruteforce(figred_instance(Mode::Poly)) == poly({0, 0, 1, 0, 0, 1, -1}));
  CHECK(dcr_bruteforce(figred_instance(Mode::Rational, 6, "1/2")) == rational(17, 64));
}

TEST_CASE("brute force respects the link cap") {
  OracleLimits tight;
  tight.max_links = 4;
  CHECK_THROWS_AS(dcr_bruteforce(figred_instance(Mode::Rational, 6, "1/2"), tight), ResourceLimit);
}

TEST_CASE("minpath enumeration") {
  auto paths = enumerate_minpaths(figred_instance(Mode::Rational));
  REQUIRE(paths.size() == 2);
  CHECK(paths[0].nodes == std::vector<NodeId>{NodeId{0}, NodeId{1}, NodeId{4}, NodeId{5}, NodeId{6}, NodeId{7}});
  CHECK(paths[1].nodes == std::vector<NodeId>{NodeId{0}, NodeId{1}, NodeId{7}});

  Graph c4 = cycle_graph(4, rational(1, 2)).graph;
  CHECK(enumerate_minpaths(make_instance(c4, NodeId{0}, NodeId{1}, 1, Mode::Rational)).size() == 1);

  Graph apart(3);
  apart.add_link(NodeId{0}, NodeId{1}, rational(1, 2));
  CHECK(enumerate_minpaths(make_instance(apart, NodeId{0}, NodeId{2}, 2, Mode::Rational)).empty());
}

TEST_CASE("inclusion-exclusion") {
  // two disjoint two-hop paths a and b: a + b - ab
  Graph g(4);
  g.add_link(NodeId{0}, NodeId{1}, rational(1, 2));
  g.add_link(NodeId{1}, NodeId{3}, rational(1, 2));
  g.add_link(NodeId{0}, NodeId{2}, rational(1, 3));
  g.add_link(NodeId{2}, NodeId{3}, rational(1, 1));
  Instance inst = make_instance(g, NodeId{0}, NodeId{3}, 2, Mode::Rational);
  Rational a(1, 4), b(1, 3);
  CHECK(dcr_inclusion_exclusion(inst).as_rational() == a + b - a * b);

  CHECK(dcr_inclusion_exclusion(figred_instance(Mode::Poly)) == poly({0, 0, 1, 0, 0, 1, -1}));

  Graph apart(3);
  apart.add_link(NodeId{0}, NodeId{1}, rational(1, 2));
  CHECK(dcr_inclusion_exclusion(make_instance(apart, NodeId{0}, NodeId{2}, 2, Mode::Rational)).is_zero());
}

TEST_CASE("inclusion-exclusion matches brute force on random instances") {
  std::mt19937_64 rng(11);
  OracleLimits wide;
  wide.max_minpaths = 40;
  int compared = 0;
  for (int round = 0; round < 150; ++round) {
    Instance inst = random_instance(rng, {2, 7, 11, true, true});
    if (enumerate_minpaths(inst).size() > wide.max_minpaths) continue;
    CHECK(dcr_inclusion_exclusion(inst, wide) == dcr_bruteforce(inst));
    ++compared;
  }
  CHECK(compared > 100);
}

TEST_CASE("relevance oracle") {
  Instance fr = figred_instance(Mode::Rational);
  CHECK_FALSE(is_link_relevant_oracle(fr, find_link(fr.graph, 1, 2)));
  CHECK_FALSE(is_link_relevant_oracle(fr, find_link(fr.graph, 2, 3)));
  CHECK_FALSE(is_link_relevant_oracle(fr, find_link(fr.graph, 3, 4)));
  CHECK(is_link_relevant_oracle(fr, find_link(fr.graph, 1, 4)));
  Instance fr7 = figred_instance(Mode::Rational, 7);
  CHECK(is_link_relevant_oracle(fr7, find_link(fr7.graph, 1, 2)));
}

TEST_CASE("monte carlo") {
  Graph g = path_graph(3, Prob::one(Mode::Float)).graph;
  auto perfect = monte_carlo_estimate(make_instance(g, NodeId{0}, NodeId{2}, 2, Mode::Float), 1000);
  CHECK(perfect.estimate == 1.0);
  CHECK(perfect.std_error == 0.0);

  Graph z = path_graph(3, Prob::zero(Mode::Float)).graph;
  CHECK(monte_carlo_estimate(make_instance(z, NodeId{0}, NodeId{2}, 2, Mode::Float), 1000).estimate == 0.0);

  Instance fr = figred_instance(Mode::Float, 6, "0.5");
  auto a = monte_carlo_estimate(fr, 20000, 5);
  auto b = monte_carlo_estimate(fr, 20000, 5);
  CHECK(a.estimate == b.estimate);
  CHECK(std::abs(a.estimate - 0.265625) <= 4 * a.std_error);
  CHECK_THROWS_AS(monte_carlo_estimate(figred_instance(Mode::Rational, 6, "1/2"), 10), InvalidArgument);
}
