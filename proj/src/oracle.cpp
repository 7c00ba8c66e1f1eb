#include "dcr/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "dcr/error.hpp"

namespace dcr {

namespace {

/// Dense relabelling of a graph so per-state checks work on small arrays.
struct CompactGraph {
  std::vector<std::uint32_t> index_of;  // NodeId -> dense index
  std::vector<std::pair<std::uint32_t, std::uint32_t>> ends;
  std::vector<Prob> reliability;
  std::vector<LinkId> ids;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> adjacency;  // (link, node)
  std::size_t nodes = 0;

  explicit CompactGraph(const Graph& g) : index_of(g.node_capacity(), 0) {
    for (NodeId v : g.nodes()) index_of[v.value] = static_cast<std::uint32_t>(nodes++);
    adjacency.resize(nodes);
    for (LinkId e : g.links()) {
      const Link& l = g.link(e);
      auto a = index_of[l.u.value], b = index_of[l.v.value];
      auto k = static_cast<std::uint32_t>(ends.size());
      ends.emplace_back(a, b);
      reliability.push_back(l.reliability);
      ids.push_back(e);
      adjacency[a].emplace_back(k, b);
      adjacency[b].emplace_back(k, a);
    }
  }

  /// Every terminal pair within d hops using only links whose bit is set.
  bool connected_within(std::uint64_t state, std::span<const std::uint32_t> terminals, int d,
                        std::vector<int>& dist, std::vector<std::uint32_t>& queue) const {
    for (std::size_t i = 0; i + 1 < terminals.size(); ++i) {
      std::fill(dist.begin(), dist.end(), -1);
      queue.clear();
      queue.push_back(terminals[i]);
      dist[terminals[i]] = 0;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        auto x = queue[head];
        if (dist[x] == d) continue;
        for (auto [k, y] : adjacency[x]) {
          if (!((state >> k) & 1U) || dist[y] != -1) continue;
          dist[y] = dist[x] + 1;
          queue.push_back(y);
        }
      }
      for (std::size_t j = i + 1; j < terminals.size(); ++j)
        if (dist[terminals[j]] == -1) return false;
    }
    return true;
  }
};

}  // namespace

Prob dcr_bruteforce(const Graph& g, std::span<const NodeId> terminals, int d, Mode mode,
                    const OracleLimits& limits) {
  const std::size_t m = g.link_count();
  if (m > limits.max_links || m > 63)
    throw ResourceLimit("max_links", std::min<std::size_t>(limits.max_links, 63),
                        "brute-force enumeration over " + std::to_string(m) + " links");
  CompactGraph cg(g);
  std::vector<std::uint32_t> k;
  for (NodeId v : terminals) {
    if (!g.has_node(v)) throw InvalidArgument("terminal is not a node of the graph");
    k.push_back(cg.index_of[v.value]);
  }

  std::vector<Prob> up, down;
  for (const Prob& r : cg.reliability) {
    if (r.mode() != mode) throw InvalidArgument("link reliability mode differs from instance mode");
    up.push_back(r);
    down.push_back(r.complement());
  }

  std::vector<int> dist(cg.nodes);
  std::vector<std::uint32_t> queue;
  Prob total = Prob::zero(mode);

  // Depth-first over link states, sharing prefix products. Leaves are visited
  // in increasing state order, so exact-mode sums are reproducible.
  struct Frame {
    std::size_t link;
    std::uint64_t state;
    Prob weight;
  };
  std::vector<Frame> stack;
  stack.push_back({0, 0, Prob::one(mode)});
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (f.weight.is_zero()) continue;
    if (f.link == m) {
      if (cg.connected_within(f.state, k, d, dist, queue)) total += f.weight;
      continue;
    }
    stack.push_back({f.link + 1, f.state | (std::uint64_t{1} << f.link), f.weight * up[f.link]});
    stack.push_back({f.link + 1, f.state, f.weight * down[f.link]});
  }
  return total;
}

Prob dcr_bruteforce(const Instance& inst, const OracleLimits& limits) {
  const NodeId terminals[] = {inst.source, inst.target};
  return dcr_bruteforce(inst.graph, terminals, inst.diameter, inst.mode, limits);
}

namespace {

/// Neighbours of x as (node, link), sorted by node then link.
std::vector<std::pair<NodeId, LinkId>> ordered_neighbours(const Graph& g, NodeId x) {
  std::vector<std::pair<NodeId, LinkId>> out;
  for (LinkId e : g.incident(x)) out.emplace_back(g.link(e).other(x), e);
  std::sort(out.begin(), out.end());
  return out;
}

template <typename Visit>
void for_each_short_path(const Instance& inst, Visit&& visit) {
  const Graph& g = inst.graph;
  std::vector<bool> on_path(g.node_capacity(), false);
  Minpath current;
  current.nodes.push_back(inst.source);
  on_path[inst.source.value] = true;

  // returns false to stop the whole enumeration
  auto dfs = [&](auto&& self, NodeId x) -> bool {
    if (x == inst.target) return visit(current);
    if (static_cast<int>(current.links.size()) >= inst.diameter) return true;
    for (auto [y, e] : ordered_neighbours(g, x)) {
      if (on_path[y.value]) continue;
      on_path[y.value] = true;
      current.nodes.push_back(y);
      current.links.push_back(e);
      bool keep_going = self(self, y);
      current.nodes.pop_back();
      current.links.pop_back();
      on_path[y.value] = false;
      if (!keep_going) return false;
    }
    return true;
  };
  dfs(dfs, inst.source);
}

}  // namespace

std::vector<Minpath> enumerate_minpaths(const Instance& inst) {
  std::vector<Minpath> out;
  for_each_short_path(inst, [&](const Minpath& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

Prob dcr_inclusion_exclusion(const Instance& inst, const OracleLimits& limits) {
  auto paths = enumerate_minpaths(inst);
  if (paths.size() > limits.max_minpaths)
    throw ResourceLimit("max_minpaths", limits.max_minpaths,
                        "inclusion-exclusion over " + std::to_string(paths.size()) + " minpaths");
  CompactGraph cg(inst.graph);
  if (cg.ids.size() > 64)
    throw ResourceLimit("max_links", 64, "inclusion-exclusion link masks");
  std::vector<std::uint32_t> dense_link(inst.graph.link_capacity(), 0);
  for (std::uint32_t k = 0; k < cg.ids.size(); ++k) dense_link[cg.ids[k].value] = k;

  // coefficient[mask] = sum over nonempty path subsets S with union(S) = mask
  // of (-1)^(|S|+1)
  std::map<std::uint64_t, long long> coefficient;
  for (const Minpath& path : paths) {
    std::uint64_t mask = 0;
    for (LinkId e : path.links) mask |= std::uint64_t{1} << dense_link[e.value];
    auto previous = coefficient;
    coefficient[mask] += 1;
    for (const auto& [other, c] : previous) {
      if (c == 0) continue;
      long long& slot = coefficient[other | mask];
      if (__builtin_sub_overflow(slot, c, &slot))
        throw ResourceLimit("max_minpaths", limits.max_minpaths,
                            "inclusion-exclusion coefficient overflow");
    }
  }

  Prob total = Prob::zero(inst.mode);
  for (const auto& [mask, c] : coefficient) {
    if (c == 0) continue;
    Prob term = Prob::one(inst.mode);
    for (std::uint32_t k = 0; k < cg.ids.size(); ++k)
      if ((mask >> k) & 1U) term *= cg.reliability[k];
    Prob weight = Prob::from_rational(Rational(static_cast<long>(c < 0 ? -c : c)), inst.mode);
    if (c > 0)
      total = total + weight * term;
    else
      total = total - weight * term;
  }
  return total;
}

bool is_link_relevant_oracle(const Instance& inst, LinkId e) {
  if (!inst.graph.has_link(e)) throw InvalidArgument("unknown link " + std::to_string(e.value));
  bool found = false;
  for_each_short_path(inst, [&](const Minpath& p) {
    found = std::find(p.links.begin(), p.links.end(), e) != p.links.end();
    return !found;
  });
  return found;
}

std::pair<Hops, Hops> shortest_detour_through(const Instance& inst, LinkId e) {
  const Graph& g = inst.graph;
  const Link& target_link = g.link(e);
  Hops forward = Hops::infinity(), backward = Hops::infinity();

  std::vector<bool> on_path(g.node_capacity(), false);
  std::vector<NodeId> nodes{inst.source};
  std::vector<LinkId> links;
  on_path[inst.source.value] = true;

  auto dfs = [&](auto&& self, NodeId x) -> void {
    if (x == inst.target) {
      auto at = std::find(links.begin(), links.end(), e);
      if (at == links.end()) return;
      auto i = static_cast<std::size_t>(at - links.begin());
      Hops rest(static_cast<std::uint32_t>(links.size() - 1));
      if (nodes[i] == target_link.u)
        forward = std::min(forward, rest);
      else
        backward = std::min(backward, rest);
      return;
    }
    for (auto [y, f] : ordered_neighbours(g, x)) {
      if (on_path[y.value]) continue;
      on_path[y.value] = true;
      nodes.push_back(y);
      links.push_back(f);
      self(self, y);
      nodes.pop_back();
      links.pop_back();
      on_path[y.value] = false;
    }
  };
  dfs(dfs, inst.source);
  return {forward, backward};
}

MonteCarloEstimate monte_carlo_estimate(const Instance& inst, std::uint64_t samples,
                                        std::uint64_t seed) {
  if (inst.mode != Mode::Float) throw InvalidArgument("Monte Carlo requires float mode");
  if (samples == 0) throw InvalidArgument("Monte Carlo needs at least one sample");
  CompactGraph cg(inst.graph);
  const std::size_t m = cg.ids.size();
  if (m > 64) throw ResourceLimit("max_links", 64, "Monte Carlo link mask");
  std::vector<double> p;
  for (const Prob& r : cg.reliability) p.push_back(r.as_double());
  const std::uint32_t terminals[] = {cg.index_of[inst.source.value],
                                     cg.index_of[inst.target.value]};

  std::mt19937_64 rng(seed);
  std::vector<int> dist(cg.nodes);
  std::vector<std::uint32_t> queue;
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    std::uint64_t state = 0;
    for (std::size_t k = 0; k < m; ++k) {
      double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < p[k]) state |= std::uint64_t{1} << k;
    }
    if (cg.connected_within(state, terminals, inst.diameter, dist, queue)) ++hits;
  }
  MonteCarloEstimate out;
  out.samples = samples;
  out.seed = seed;
  out.estimate = static_cast<double>(hits) / static_cast<double>(samples);
  out.std_error = std::sqrt(out.estimate * (1.0 - out.estimate) / static_cast<double>(samples));
  return out;
}

}  // namespace dcr
