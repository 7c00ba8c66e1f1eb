#pragma once

#include <cstddef>
#include <vector>

#include "dcr/factorization.hpp"
#include "dcr/instance.hpp"

namespace dcr {

/// Distribution of the random s-t hop distance of a graph with failing links,
/// truncated at d: mass[l-1] = P(distance == l) for l = 1..d, tail = P(> d).
struct DistanceProfile {
  std::vector<Prob> mass;
  Prob tail;

  int diameter() const { return static_cast<int>(mass.size()); }
  /// P(distance <= l), i.e. the reliability at diameter l. cumulative(0) = 0.
  Prob cumulative(int l) const;
};

/// Outer graph H with terminals {u,v}; each link of H is replaced by a copy
/// of the inner graph G between its terminals {s,t}.
struct ReplacementSpec {
  Graph outer;
  NodeId outer_source;
  NodeId outer_target;
  Graph inner;
  NodeId inner_source;
  NodeId inner_target;
  int diameter = 1;
};

/// H - e plus a fresh copy of G glued on x = s and y = t, where e = {x,y} as
/// stored. Interior nodes of the copy get fresh ids after H's.
Graph replace_edge(const Graph& outer, LinkId e, const Graph& inner, NodeId s, NodeId t);
/// Replaces every link of H, in LinkId order, by an independent copy of G.
Graph replace_all(const Graph& outer, const Graph& inner, NodeId s, NodeId t);

/// Cumulative reliabilities computed with ip5m at each l = 1..d.
DistanceProfile distance_profile(const Graph& g, NodeId s, NodeId t, int d, Mode mode,
                                 const FactorConfig& cfg = {});

struct CompositionLimits {
  double max_assignment_bits = 24.0;  ///< |E(H)| * log2(d+1)
};

/// Reliability of H_G between {u,v}: each H link draws an i.i.d. length from
/// G's profile (values 1..d or "too long") and the event is that some H path
/// has total length at most d. Sums over all length assignments.
Prob dcr_composed(const ReplacementSpec& spec, Mode mode, const CompositionLimits& limits = {},
                  const FactorConfig& cfg = {});

/// v separates s from t: R = sum_{l=1}^{d-1} mass_{s..v}[l] * cumulative_{v..t}(d - l).
/// Throws InvalidArgument if v does not separate the terminals.
Prob cut_decompose(const Instance& inst, NodeId v, const FactorConfig& cfg = {});

/// Bipartite input with side[v] = false for part A, true for part B.
struct BipartiteGraph {
  Graph graph;
  std::vector<bool> side;
};

/// Tail path s, s_1, ..., s_{d-3} (all perfect), B's links perfect, and the
/// half-reliable links from s_{d-3} to every a in A and from every b in B to a
/// new terminal t. Node ids: path first, then B's nodes, then t.
Instance cancela_petingi(const BipartiteGraph& b, int d, Mode mode);

}  // namespace dcr
