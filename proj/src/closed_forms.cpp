#include "dcr/closed_forms.hpp"

#include "dcr/error.hpp"

namespace dcr {

Prob pair_reliability(const Graph& g, NodeId a, NodeId b, Mode mode) {
  Prob all_fail = Prob::one(mode);
  for (LinkId e : g.incident(a))
    if (g.link(e).joins(a, b)) all_fail *= g.link(e).reliability.complement();
  return all_fail.complement();
}

Prob dcr_d1(const Graph& g, std::span<const NodeId> terminals, Mode mode) {
  Prob out = Prob::one(mode);
  for (std::size_t i = 0; i < terminals.size(); ++i)
    for (std::size_t j = i + 1; j < terminals.size(); ++j)
      out *= pair_reliability(g, terminals[i], terminals[j], mode);
  return out;
}

Prob dcr_d1(const Instance& inst) {
  if (inst.diameter != 1) throw InvalidArgument("dcr_d1 requires diameter 1");
  const NodeId terminals[] = {inst.source, inst.target};
  return dcr_d1(inst.graph, terminals, inst.mode);
}

Prob dcr_k2_d2(const Instance& inst) {
  if (inst.diameter != 2) throw InvalidArgument("dcr_k2_d2 requires diameter 2");
  const Graph& g = inst.graph;
  const NodeId u = inst.source, v = inst.target;
  Prob fail = pair_reliability(g, u, v, inst.mode).complement();
  for (NodeId w : g.nodes()) {
    if (w == u || w == v) continue;
    Prob two_hop = pair_reliability(g, u, w, inst.mode) * pair_reliability(g, w, v, inst.mode);
    fail *= two_hop.complement();
  }
  return fail.complement();
}

}  // namespace dcr
