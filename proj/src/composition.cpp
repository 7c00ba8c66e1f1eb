#include "dcr/composition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dcr/error.hpp"

namespace dcr {

Prob DistanceProfile::cumulative(int l) const {
  Prob acc = Prob::zero(tail.mode());
  for (int j = 1; j <= std::min(l, diameter()); ++j) acc += mass[j - 1];
  return acc;
}

Graph replace_edge(const Graph& outer, LinkId e, const Graph& inner, NodeId s, NodeId t) {
  if (!inner.has_node(s) || !inner.has_node(t) || s == t)
    throw InvalidArgument("replace_edge: inner terminals must be two distinct nodes");
  const Link glued = outer.link(e);
  Graph out = outer;
  out.remove_link(e);
  std::vector<NodeId> image(inner.node_capacity());
  for (NodeId v : inner.nodes()) {
    if (v == s)
      image[v.value] = glued.u;
    else if (v == t)
      image[v.value] = glued.v;
    else
      image[v.value] = out.add_node();
  }
  for (LinkId f : inner.links()) {
    const Link& l = inner.link(f);
    out.add_link(image[l.u.value], image[l.v.value], l.reliability);
  }
  return out;
}

Graph replace_all(const Graph& outer, const Graph& inner, NodeId s, NodeId t) {
  Graph out = outer;
  for (LinkId e : outer.links()) out = replace_edge(out, e, inner, s, t);
  return out;
}

DistanceProfile distance_profile(const Graph& g, NodeId s, NodeId t, int d, Mode mode,
                                 const FactorConfig& cfg) {
  if (!g.has_node(s) || !g.has_node(t) || s == t)
    throw InvalidArgument("distance_profile: terminals must be two distinct nodes");
  if (d < 1) throw InvalidArgument("distance_profile: diameter must be at least 1");
  const int longest = static_cast<int>(g.node_count()) - 1;
  DistanceProfile out;
  Prob previous = Prob::zero(mode);
  for (int l = 1; l <= d; ++l) {
    Prob cumulative = previous;
    if (l <= longest)
      cumulative = ip5m(Instance{g, s, t, l, mode}, cfg).value;
    out.mass.push_back(cumulative - previous);
    previous = cumulative;
  }
  out.tail = previous.complement();
  return out;
}

namespace {

/// Shortest u-v path length in H under per-link lengths; `kTooLong` marks a
/// link whose copy is longer than the budget.
constexpr int kTooLong = std::numeric_limits<int>::max() / 4;

int shortest_length(const Graph& h, NodeId u, NodeId v, const std::vector<int>& length_of) {
  std::vector<int> best(h.node_capacity(), kTooLong);
  std::vector<bool> done(h.node_capacity(), false);
  best[u.value] = 0;
  auto nodes = h.nodes();
  for (;;) {
    NodeId x{};
    int bx = kTooLong;
    for (NodeId y : nodes)
      if (!done[y.value] && best[y.value] < bx) {
        bx = best[y.value];
        x = y;
      }
    if (bx >= kTooLong) return kTooLong;
    if (x == v) return bx;
    done[x.value] = true;
    for (LinkId e : h.incident(x)) {
      int w = length_of[e.value];
      if (w >= kTooLong) continue;
      NodeId y = h.link(e).other(x);
      best[y.value] = std::min(best[y.value], bx + w);
    }
  }
}

}  // namespace

Prob dcr_composed(const ReplacementSpec& spec, Mode mode, const CompositionLimits& limits,
                  const FactorConfig& cfg) {
  const Graph& h = spec.outer;
  const int d = spec.diameter;
  if (d < 1) throw InvalidArgument("dcr_composed: diameter must be at least 1");
  if (!h.has_node(spec.outer_source) || !h.has_node(spec.outer_target) ||
      spec.outer_source == spec.outer_target)
    throw InvalidArgument("dcr_composed: outer terminals must be two distinct nodes");
  const auto links = h.links();
  double bits = static_cast<double>(links.size()) * std::log2(static_cast<double>(d) + 1.0);
  if (bits > limits.max_assignment_bits)
    throw ResourceLimit("max_assignment_bits", static_cast<std::size_t>(limits.max_assignment_bits),
                        "length assignments over " + std::to_string(links.size()) +
                            " outer links; run ip5m on replace_all instead");

  DistanceProfile profile =
      distance_profile(spec.inner, spec.inner_source, spec.inner_target, d, mode, cfg);

  // Value choices per outer link: lengths 1..d with their masses, then tail.
  std::vector<std::pair<int, Prob>> choices;
  for (int l = 1; l <= d; ++l)
    if (!profile.mass[l - 1].is_zero()) choices.emplace_back(l, profile.mass[l - 1]);
  if (!profile.tail.is_zero()) choices.emplace_back(kTooLong, profile.tail);

  std::vector<int> length_of(h.link_capacity(), kTooLong);
  Prob total = Prob::zero(mode);
  auto assign = [&](auto&& self, std::size_t i, const Prob& weight) -> void {
    if (i == links.size()) {
      if (shortest_length(h, spec.outer_source, spec.outer_target, length_of) <= d)
        total += weight;
      return;
    }
    for (const auto& [length, mass] : choices) {
      length_of[links[i].value] = length;
      self(self, i + 1, weight * mass);
    }
  };
  assign(assign, 0, Prob::one(mode));
  return total;
}

namespace {

/// Copy of g restricted to `keep` (ids preserved).
Graph induced(const Graph& g, const std::vector<NodeId>& keep) {
  Graph out = g;
  for (NodeId v : g.nodes())
    if (!std::binary_search(keep.begin(), keep.end(), v)) out.remove_node(v);
  return out;
}

}  // namespace

Prob cut_decompose(const Instance& inst, NodeId v, const FactorConfig& cfg) {
  const Graph& g = inst.graph;
  if (!g.has_node(v)) throw InvalidArgument("cut_decompose: unknown node");
  if (v == inst.source || v == inst.target)
    throw InvalidArgument("cut_decompose: the cut vertex must not be a terminal");
  Graph without = delete_node(g, v);
  std::vector<NodeId> source_side, target_side;
  for (const auto& component : components(without)) {
    if (std::binary_search(component.begin(), component.end(), inst.source)) source_side = component;
    if (std::binary_search(component.begin(), component.end(), inst.target)) target_side = component;
  }
  if (source_side == target_side)
    throw InvalidArgument("cut_decompose: node " + std::to_string(v.value) +
                          " does not separate the terminals");
  for (auto* side : {&source_side, &target_side}) {
    side->push_back(v);
    std::sort(side->begin(), side->end());
  }
  const int d = inst.diameter;
  if (d < 2) return Prob::zero(inst.mode);
  auto first = distance_profile(induced(g, source_side), inst.source, v, d - 1, inst.mode, cfg);
  auto second = distance_profile(induced(g, target_side), v, inst.target, d - 1, inst.mode, cfg);
  Prob total = Prob::zero(inst.mode);
  for (int l = 1; l <= d - 1; ++l) total += first.mass[l - 1] * second.cumulative(d - l);
  return total;
}

Instance cancela_petingi(const BipartiteGraph& b, int d, Mode mode) {
  if (d < 3) throw InvalidArgument("cancela_petingi: diameter must be at least 3");
  const Graph& core = b.graph;
  if (b.side.size() < core.node_capacity())
    throw InvalidArgument("cancela_petingi: bipartition does not cover every node");
  for (LinkId e : core.links()) {
    const Link& l = core.link(e);
    if (b.side[l.u.value] == b.side[l.v.value])
      throw InvalidArgument("cancela_petingi: link " + std::to_string(e.value) +
                            " joins two nodes of the same part");
  }
  const Prob perfect = Prob::one(mode);
  const Prob half = mode == Mode::Poly ? Prob(Polynomial::symbol())
                                       : Prob::from_rational(Rational(1, 2), mode);

  Graph g;
  std::vector<NodeId> path;
  for (int i = 0; i <= d - 3; ++i) {
    path.push_back(g.add_node());
    if (i > 0) g.add_link(path[i - 1], path[i], perfect);
  }
  std::vector<NodeId> image(core.node_capacity());
  for (NodeId v : core.nodes()) image[v.value] = g.add_node();
  NodeId t = g.add_node();
  for (LinkId e : core.links()) {
    const Link& l = core.link(e);
    g.add_link(image[l.u.value], image[l.v.value], perfect);
  }
  for (NodeId v : core.nodes())
    if (!b.side[v.value]) g.add_link(path.back(), image[v.value], half);
  for (NodeId v : core.nodes())
    if (b.side[v.value]) g.add_link(image[v.value], t, half);
  return make_instance(std::move(g), path.front(), t, d, mode);
}

}  // namespace dcr
