#include "doctest.h"
#include "support.hpp"

using namespace dcr;
using namespace dcr::testing;

namespace {

Instance reduced_cycle() {
  Instance fr = figred_instance(Mode::Poly);
  auto pruned = prune_irrelevant(fr, IrrelevanceLevel::C3).first;
  return apply_5p(pruned).instance;
}

}  // namespace

TEST_CASE("worked example value") {
  CHECK(ip5m(figred_instance(Mode::Poly)).value == poly({0, 0, 1, 0, 0, 1, -1}));
  Instance half = figred_instance(Mode::Rational, 6, "1/2");
  CHECK(ip5m(half).value == rational(17, 64));
  CHECK(dcr_bruteforce(half) == rational(17, 64));
}

TEST_CASE("pivot candidates on the reduced cycle") {
  Instance c5 = reduced_cycle();
  CHECK(endpoints(c5.graph, eligible_pivots(c5.graph)) ==
        std::vector<std::pair<std::uint32_t, std::uint32_t>>{{1, 7}, {6, 7}});
}

TEST_CASE("branches of the {6,t} pivot") {
  Instance c5 = reduced_cycle();
  LinkId e = find_link(c5.graph, 6, 7);
  CHECK(c5.graph.link(e).reliability == poly({0, 0, 0, 0, 1}));

  Instance p4{delete_link(c5.graph, e), c5.source, c5.target, c5.diameter, c5.mode};
  CHECK_FALSE(too_far(p4));
  CHECK(ip5m(p4).value == p_symbol());

  Instance c4{make_perfect(c5.graph, e), c5.source, c5.target, c5.diameter, c5.mode};
  CHECK(has_perfect_path(c4));
  CHECK(ip5m(c4).value.is_one());
}

TEST_CASE("termination tests") {
  Instance fr = figred_instance(Mode::Rational, 6, "1/2");
  CHECK_FALSE(has_perfect_path(fr));
  Instance long_path = make_instance(path_graph(4, Prob::one(Mode::Rational)).graph, NodeId{0}, NodeId{3}, 3,
                                     Mode::Rational);
  CHECK(has_perfect_path(long_path));
  long_path.diameter = 2;
  CHECK_FALSE(has_perfect_path(long_path));
  CHECK(too_far(long_path));
  long_path.diameter = 3;
  CHECK_FALSE(too_far(long_path));

  Graph apart(2);
  CHECK(too_far(make_instance(apart, NodeId{0}, NodeId{1}, 1, Mode::Rational)));
}

TEST_CASE("make_perfect") {
  Graph g = figred_instance(Mode::Rational, 6, "1/2").graph;
  LinkId e = find_link(g, 1, 4);
  Graph once = make_perfect(g, e);
  CHECK(once.link(e).reliability.is_one());
  CHECK(once.link_count() == g.link_count());
  CHECK(to_text(from_instance({make_perfect(once, e), NodeId{0}, NodeId{7}, 6, Mode::Rational})) ==
        to_text(from_instance({once, NodeId{0}, NodeId{7}, 6, Mode::Rational})));
}

TEST_CASE("pivot selection") {
  Graph one(2);
  LinkId only = one.add_link(NodeId{0}, NodeId{1}, rational(1, 2));
  for (auto policy : {PivotPolicy::Random, PivotPolicy::FirstNonPerfect, PivotPolicy::MaxDegreeEndpoint}) {
    FactorConfig cfg;
    cfg.pivot = policy;
    std::mt19937_64 rng(cfg.seed);
    CHECK(select_pivot(one, cfg, rng) == only);
  }
  Graph g = figred_instance(Mode::Rational, 6, "1/2").graph;
  FactorConfig cfg;
  std::mt19937_64 a(99), b(99);
  for (int i = 0; i < 20; ++i) CHECK(select_pivot(g, cfg, a) == select_pivot(g, cfg, b));
  CHECK(parse_pivot_policy("maxdeg") == PivotPolicy::MaxDegreeEndpoint);
  CHECK_THROWS(parse_pivot_policy("best"));
}

TEST_CASE("ip5m agrees with the oracle for every policy and level") {
  std::mt19937_64 rng(29);
  for (int round = 0; round < 80; ++round) {
    Instance inst = random_instance(rng, {2, 8, 13, true, rng() % 4 != 0});
    Prob truth = dcr_bruteforce(inst);
    for (auto policy : {PivotPolicy::Random, PivotPolicy::FirstNonPerfect, PivotPolicy::MaxDegreeEndpoint})
      for (auto level : {IrrelevanceLevel::Off, IrrelevanceLevel::C1, IrrelevanceLevel::C2, IrrelevanceLevel::C3})
        CHECK(ip5m_value(inst, policy, level, rng()) == truth);
  }
}

TEST_CASE("polynomial result evaluates to the rational result") {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 40; ++round) {
    Instance inst = random_instance(rng, {3, 7, 10, true, true});
    // rebuild with every imperfect link symbolic
    Graph g = inst.graph;
    Graph half = inst.graph;
    for (LinkId e : inst.graph.links()) {
      bool imperfect = inst.graph.link(e).reliability.is_imperfect();
      g.set_reliability(e, imperfect ? p_symbol() : Prob(Polynomial(inst.graph.link(e).reliability.as_rational())));
      half.set_reliability(e, imperfect ? rational(1, 3) : inst.graph.link(e).reliability);
    }
    Instance symbolic{g, inst.source, inst.target, inst.diameter, Mode::Poly};
    Instance numeric{half, inst.source, inst.target, inst.diameter, Mode::Rational};
    Prob r = ip5m(symbolic).value;
    CHECK(r.evaluate_at(Rational(1, 3)) == ip5m(numeric).value);
  }
}

TEST_CASE("reliability is monotone in the diameter") {
  std::mt19937_64 rng(37);
  for (int round = 0; round < 40; ++round) {
    Instance inst = random_instance(rng, {3, 8, 12, true, true});
    Prob prev = Prob::zero(Mode::Rational);
    for (int d = 1; d < static_cast<int>(inst.graph.node_count()); ++d) {
      inst.diameter = d;
      Prob r = ip5m(inst).value;
      CHECK(r.as_rational() >= prev.as_rational());
      prev = r;
    }
  }
}

TEST_CASE("stats and trace") {
  FactorConfig cfg;
  cfg.trace_limit = 1000;
  FactorResult res = ip5m(figred_instance(Mode::Poly), cfg);
  CHECK(res.stats.calls >= 1);
  CHECK_FALSE(res.trace.empty());
  CHECK_FALSE(res.trace_truncated);
  cfg.trace_limit = 1;
  FactorResult cut = ip5m(figred_instance(Mode::Poly), cfg);
  CHECK(cut.trace.size() == 1);
  CHECK(cut.trace_truncated);

  cfg.trace_limit = 0;
  cfg.max_calls = 1;
  Instance k5 = make_instance(complete_graph(5, rational(1, 2)).graph, NodeId{0}, NodeId{4}, 3, Mode::Rational);
  CHECK_THROWS_AS(ip5m(k5, cfg), FactorLimit);
}

TEST_CASE("float mode stays close to exact") {
  Instance f = figred_instance(Mode::Float, 6, "0.5");
  CHECK(ip5m(f).value.as_double() == doctest::Approx(0.265625).epsilon(1e-12));
}
