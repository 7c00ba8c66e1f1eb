#include "doctest.h"
#include "support.hpp"

using namespace dcr;
using namespace dcr::testing;

TEST_CASE("replace_edge") {
  NamedGraph h = cycle_graph(3, rational(1, 2));  // 0-1, 1-2, 2-0
  NamedGraph g = cycle_graph(3, rational(1, 3));  // s=0, t=1, u=2
  Graph out = replace_edge(h.graph, find_link(h.graph, 0, 1), g.graph, NodeId{0}, NodeId{1});
  CHECK(out.node_count() == 4);
  CHECK(out.link_count() == 5);
  CHECK_NOTHROW(find_link(out, 0, 1));
  CHECK_NOTHROW(find_link(out, 0, 3));
  CHECK_NOTHROW(find_link(out, 3, 1));

  NamedGraph edge = path_graph(2, rational(1, 3));
  Graph same = replace_edge(h.graph, LinkId{0}, edge.graph, edge.s, edge.t);
  CHECK(same.node_count() == 3);
  CHECK(same.link_count() == 3);
}

TEST_CASE("replace_all counts") {
  NamedGraph c4 = cycle_graph(4, rational(1, 2));
  Graph p2 = replace_all(path_graph(3, rational(1, 2)).graph, c4.graph, c4.s, c4.t);
  CHECK(p2.node_count() == 7);  // 3 + 2*(4-2)
  NamedGraph tri = cycle_graph(3, rational(1, 2));
  Graph tt = replace_all(tri.graph, cycle_graph(3, rational(1, 2)).graph, NodeId{0}, NodeId{1});
  CHECK(tt.node_count() == 6);
  CHECK(tt.link_count() == 9);
  NamedGraph edge = path_graph(2, rational(1, 2));
  Graph same = replace_all(edge.graph, c4.graph, c4.s, c4.t);
  CHECK(same.node_count() == 4);
  CHECK(same.link_count() == 4);
}

TEST_CASE("distance profiles") {
  NamedGraph edge = path_graph(2, p_symbol());
  auto prof = distance_profile(edge.graph, edge.s, edge.t, 3, Mode::Poly);
  CHECK(prof.mass == std::vector<Prob>{p_symbol(), Prob::zero(Mode::Poly), Prob::zero(Mode::Poly)});
  CHECK(prof.tail == p_symbol().complement());

  Graph two(3);
  two.add_link(NodeId{0}, NodeId{1}, rational(1, 2));
  two.add_link(NodeId{1}, NodeId{2}, rational(1, 3));
  auto series = distance_profile(two, NodeId{0}, NodeId{2}, 3, Mode::Rational);
  CHECK(series.mass == std::vector<Prob>{rational(0, 1), rational(1, 6), rational(0, 1)});
  CHECK(series.tail == rational(5, 6));

  Instance fr = figred_instance(Mode::Rational, 6, "1/2");
  auto fp = distance_profile(fr.graph, fr.source, fr.target, 6, Mode::Rational);
  CHECK(fp.cumulative(6) == rational(17, 64));
  CHECK(fp.cumulative(2) == rational(1, 4));
  for (int l = 1; l < 6; ++l) CHECK(fp.cumulative(l).as_rational() <= fp.cumulative(l + 1).as_rational());
}

TEST_CASE("dcr_composed small cases") {
  NamedGraph c4 = cycle_graph(4, rational(1, 2));
  NamedGraph edge = path_graph(2, rational(1, 1));
  ReplacementSpec single{edge.graph, edge.s, edge.t, c4.graph, c4.s, c4.t, 3};
  auto prof = distance_profile(c4.graph, c4.s, c4.t, 3, Mode::Rational);
  CHECK(dcr_composed(single, Mode::Rational) == prof.cumulative(3));

  NamedGraph p2 = path_graph(3, rational(1, 1));
  NamedGraph pe = path_graph(2, p_symbol());
  ReplacementSpec series{p2.graph, p2.s, p2.t, pe.graph, pe.s, pe.t, 2};
  CHECK(dcr_composed(series, Mode::Poly) == poly({0, 0, 1}));

  NamedGraph tri = cycle_graph(3, rational(1, 1));
  ReplacementSpec triangle{tri.graph, NodeId{0}, NodeId{1}, pe.graph, pe.s, pe.t, 2};
  Graph explicit_graph = replace_all(tri.graph, pe.graph, pe.s, pe.t);
  Instance direct = make_instance(explicit_graph, NodeId{0}, NodeId{1}, 2, Mode::Poly);
  CHECK(dcr_composed(triangle, Mode::Poly) == dcr_bruteforce(direct));
  CHECK(dcr_composed(triangle, Mode::Poly) == poly({0, 1, 1, -1}));
}

TEST_CASE("cut_decompose") {
  Graph g(3);
  g.add_link(NodeId{0}, NodeId{1}, rational(1, 2));
  g.add_link(NodeId{1}, NodeId{2}, rational(1, 3));
  CHECK(cut_decompose(make_instance(g, NodeId{0}, NodeId{2}, 2, Mode::Rational), NodeId{1}) == rational(1, 6));

  Graph h(4);
  h.add_link(NodeId{0}, NodeId{1}, rational(1, 2));
  h.add_link(NodeId{1}, NodeId{2}, rational(1, 3));
  h.add_link(NodeId{2}, NodeId{3}, rational(1, 3));
  Instance inst{h, NodeId{0}, NodeId{3}, 2, Mode::Rational};
  CHECK(cut_decompose(inst, NodeId{1}).is_zero());

  Instance k4 = make_instance(complete_graph(4, rational(1, 2)).graph, NodeId{0}, NodeId{3}, 2, Mode::Rational);
  CHECK_THROWS_AS(cut_decompose(k4, NodeId{1}), InvalidArgument);
}

TEST_CASE("cancela-petingi construction") {
  BipartiteGraph c6{cycle_graph(6, Prob::one(Mode::Rational)).graph, {false, true, false, true, false, true}};
  Instance inst = cancela_petingi(c6, 6, Mode::Rational);
  CHECK(inst.graph.node_count() == 11);
  int half = 0;
  for (LinkId e : inst.graph.links()) {
    const Prob& r = inst.graph.link(e).reliability;
    if (r == rational(1, 2)) ++half;
    else CHECK(r.is_one());
  }
  CHECK(half == 6);
  CHECK(ip5m(inst).value == dcr_bruteforce(inst));

  Graph ab(2);
  ab.add_link(NodeId{0}, NodeId{1}, Prob::one(Mode::Rational));
  Instance small = cancela_petingi({ab, {false, true}}, 3, Mode::Rational);
  CHECK(small.graph.node_count() == 4);
  CHECK(small.graph.link_count() == 3);
  CHECK(dcr_bruteforce(small) == rational(1, 4));

  CHECK_THROWS_AS(cancela_petingi(c6, 2, Mode::Rational), InvalidArgument);
  BipartiteGraph odd{cycle_graph(3, Prob::one(Mode::Rational)).graph, {false, true, false}};
  CHECK_THROWS_AS(cancela_petingi(odd, 4, Mode::Rational), InvalidArgument);
}
