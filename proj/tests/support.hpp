// Shared fixtures for the unit tests and the acceptance runner.
#pragma once

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "dcr/closed_forms.hpp"
#include "dcr/composition.hpp"
#include "dcr/factorization.hpp"
#include "dcr/generators.hpp"
#include "dcr/instance_file.hpp"
#include "dcr/irrelevance.hpp"
#include "dcr/oracle.hpp"
#include "dcr/reductions.hpp"

namespace dcr::testing {

inline Prob rational(long num, long den, Mode mode = Mode::Rational) {
  return Prob::from_rational(Rational(num, den), mode);
}

inline Prob poly(std::vector<long> coefficients) {
  std::vector<Rational> c;
  for (long x : coefficients) c.emplace_back(x);
  return Prob(Polynomial(std::move(c)));
}

inline Prob p_symbol() { return Prob(Polynomial::symbol()); }

/// The 8-node benchmark: s=0, t=7, links 0-1 1-2 2-3 3-4 4-5 5-6 6-7 1-4 1-7.
/// Reliability defaults to p in poly mode and 1/2 otherwise.
inline Instance figred_instance(Mode mode, int d = 6, std::string reliability = "") {
  if (reliability.empty()) reliability = mode == Mode::Poly ? "p" : "1/2";
  InstanceFile file = figred(reliability);
  file.diameter = d;
  return to_instance(file, mode);
}

inline LinkId find_link(const Graph& g, std::uint32_t a, std::uint32_t b) {
  for (LinkId e : g.links())
    if (g.link(e).joins(NodeId{a}, NodeId{b})) return e;
  throw std::out_of_range("no link " + std::to_string(a) + "-" + std::to_string(b));
}

/// Endpoint pairs (low, high) of the given links.
inline std::vector<std::pair<std::uint32_t, std::uint32_t>> endpoints(
    const Graph& g, const std::vector<LinkId>& links) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (LinkId e : links) {
    auto [a, b] = std::minmax(g.link(e).u.value, g.link(e).v.value);
    out.emplace_back(a, b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<LinkId> certified(const Instance& inst, IrrelevanceLevel level) {
  std::vector<LinkId> out;
  for (LinkId e : inst.graph.links())
    if (check_link(inst, e, level)) out.push_back(e);
  return out;
}

struct RandomShape {
  int min_nodes = 2;
  int max_nodes = 8;
  int max_links = 14;
  bool allow_parallel = true;
  bool connected = true;
};

/// Reliability drawn from {0, 1/4, 1/2, 3/4, 1}.
inline Prob random_reliability(std::mt19937_64& rng, Mode mode = Mode::Rational) {
  static const int quarters[] = {0, 1, 2, 3, 4};
  int q = quarters[rng() % 5];
  return Prob::from_rational(Rational(q, 4), mode);
}

/// Random graph: a spanning tree (when connected) plus extra links.
inline Graph random_graph(std::mt19937_64& rng, int n, int m, bool allow_parallel, bool connected,
                          Mode mode = Mode::Rational) {
  Graph g(static_cast<std::size_t>(n));
  int placed = 0;
  if (connected) {
    for (int v = 1; v < n; ++v, ++placed)
      g.add_link(NodeId{static_cast<std::uint32_t>(rng() % v)}, NodeId{static_cast<std::uint32_t>(v)},
                 random_reliability(rng, mode));
  }
  int attempts = 0;
  while (placed < m && attempts++ < 200) {
    auto a = static_cast<std::uint32_t>(rng() % n), b = static_cast<std::uint32_t>(rng() % n);
    if (a == b) continue;
    bool exists = false;
    for (LinkId e : g.links()) exists = exists || g.link(e).joins(NodeId{a}, NodeId{b});
    if (exists && !allow_parallel) continue;
    g.add_link(NodeId{a}, NodeId{b}, random_reliability(rng, mode));
    ++placed;
  }
  return g;
}

/// Random instance with terminals 0 and a random other node, d in [1, n-1].
inline Instance random_instance(std::mt19937_64& rng, const RandomShape& shape = {},
                                Mode mode = Mode::Rational) {
  int n = shape.min_nodes + static_cast<int>(rng() % (shape.max_nodes - shape.min_nodes + 1));
  int lo = shape.connected ? n - 1 : 0;
  int hi = std::max(lo, shape.max_links);
  int m = lo + static_cast<int>(rng() % (hi - lo + 1));
  Graph g = random_graph(rng, n, m, shape.allow_parallel, shape.connected, mode);
  auto t = static_cast<std::uint32_t>(1 + rng() % (n - 1));
  int d = 1 + static_cast<int>(rng() % (n - 1));
  return make_instance(std::move(g), NodeId{0}, NodeId{t}, d, mode);
}

inline Prob ip5m_value(const Instance& inst, PivotPolicy pivot = PivotPolicy::Random,
                       IrrelevanceLevel level = IrrelevanceLevel::C3, std::uint64_t seed = kDefaultSeed) {
  FactorConfig cfg;
  cfg.pivot = pivot;
  cfg.irrelevance = level;
  cfg.seed = seed;
  return ip5m(inst, cfg).value;
}

/// Small named graphs for composition catalogs. Node 0 and node `t` of the
/// returned pair are the intended terminals.
struct NamedGraph {
  std::string name;
  Graph graph;
  NodeId s;
  NodeId t;
};

inline NamedGraph path_graph(int n, const Prob& r) {
  Graph g(static_cast<std::size_t>(n));
  for (int i = 0; i + 1 < n; ++i)
    g.add_link(NodeId{static_cast<std::uint32_t>(i)}, NodeId{static_cast<std::uint32_t>(i + 1)}, r);
  return {"P" + std::to_string(n), g, NodeId{0}, NodeId{static_cast<std::uint32_t>(n - 1)}};
}

inline NamedGraph cycle_graph(int n, const Prob& r) {
  Graph g(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    g.add_link(NodeId{static_cast<std::uint32_t>(i)}, NodeId{static_cast<std::uint32_t>((i + 1) % n)}, r);
  return {"C" + std::to_string(n), g, NodeId{0}, NodeId{static_cast<std::uint32_t>(n / 2)}};
}

inline NamedGraph complete_graph(int n, const Prob& r) {
  Graph g(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      g.add_link(NodeId{static_cast<std::uint32_t>(i)}, NodeId{static_cast<std::uint32_t>(j)}, r);
  return {"K" + std::to_string(n), g, NodeId{0}, NodeId{static_cast<std::uint32_t>(n - 1)}};
}

/// Diamond: 0-1, 0-2, 1-3, 2-3, 1-2; terminals 0 and 3.
inline NamedGraph diamond_graph(const Prob& r) {
  Graph g(4);
  g.add_link(NodeId{0}, NodeId{1}, r);
  g.add_link(NodeId{0}, NodeId{2}, r);
  g.add_link(NodeId{1}, NodeId{3}, r);
  g.add_link(NodeId{2}, NodeId{3}, r);
  g.add_link(NodeId{1}, NodeId{2}, r);
  return {"diamond", g, NodeId{0}, NodeId{3}};
}

}  // namespace dcr::testing
