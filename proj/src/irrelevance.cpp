#include "dcr/irrelevance.hpp"

#include "dcr/error.hpp"
#include "dcr/oracle.hpp"

namespace dcr {

std::string_view to_string(IrrelevanceLevel level) {
  switch (level) {
    case IrrelevanceLevel::Off:
      return "off";
    case IrrelevanceLevel::C1:
      return "c1";
    case IrrelevanceLevel::C2:
      return "c2";
    case IrrelevanceLevel::C3:
      return "c3";
    case IrrelevanceLevel::Oracle:
      return "oracle";
  }
  return "?";
}

IrrelevanceLevel parse_irrelevance_level(std::string_view text) {
  if (text == "off") return IrrelevanceLevel::Off;
  if (text == "c1") return IrrelevanceLevel::C1;
  if (text == "c2") return IrrelevanceLevel::C2;
  if (text == "c3") return IrrelevanceLevel::C3;
  if (text == "oracle") return IrrelevanceLevel::Oracle;
  throw InvalidArgument("unknown irrelevance condition '" + std::string(text) + "'");
}

namespace {

std::optional<IrrelevanceCertificate> certify(const Instance& inst, LinkId e,
                                              IrrelevanceLevel level, Hops forward,
                                              Hops backward) {
  if (forward.at_least(inst.diameter) && backward.at_least(inst.diameter))
    return IrrelevanceCertificate{e, level, forward, backward};
  return std::nullopt;
}

}  // namespace

std::optional<IrrelevanceCertificate> condition1(const Instance& inst, LinkId e) {
  const Link& l = inst.graph.link(e);
  const Graph& g = inst.graph;
  const NodeId s = inst.source, t = inst.target;
  return certify(inst, e, IrrelevanceLevel::C1, distance(g, s, l.u) + distance(g, l.v, t),
                 distance(g, s, l.v) + distance(g, l.u, t));
}

std::optional<IrrelevanceCertificate> condition2(const Instance& inst, LinkId e) {
  const Link& l = inst.graph.link(e);
  const Graph g = delete_link(inst.graph, e);
  const NodeId s = inst.source, t = inst.target;
  return certify(inst, e, IrrelevanceLevel::C2, distance(g, s, l.u) + distance(g, l.v, t),
                 distance(g, s, l.v) + distance(g, l.u, t));
}

std::optional<IrrelevanceCertificate> condition3(const Instance& inst, LinkId e) {
  const Link& l = inst.graph.link(e);
  const Graph& g = inst.graph;
  const NodeId s = inst.source, t = inst.target, x = l.u, y = l.v;
  const NodeId without_y_t[] = {y, t}, without_s_x[] = {s, x};
  const NodeId without_x_t[] = {x, t}, without_s_y[] = {s, y};
  Hops forward = distance(g, s, x, without_y_t) + distance(g, y, t, without_s_x);
  Hops backward = distance(g, s, y, without_x_t) + distance(g, x, t, without_s_y);
  return certify(inst, e, IrrelevanceLevel::C3, forward, backward);
}

std::optional<IrrelevanceCertificate> condition_oracle(const Instance& inst, LinkId e) {
  auto [forward, backward] = shortest_detour_through(inst, e);
  return certify(inst, e, IrrelevanceLevel::Oracle, forward, backward);
}

std::optional<IrrelevanceCertificate> check_link(const Instance& inst, LinkId e,
                                                 IrrelevanceLevel level) {
  switch (level) {
    case IrrelevanceLevel::Off:
      return std::nullopt;
    case IrrelevanceLevel::C1:
      return condition1(inst, e);
    case IrrelevanceLevel::C2:
      return condition2(inst, e);
    case IrrelevanceLevel::C3:
      return condition3(inst, e);
    case IrrelevanceLevel::Oracle:
      return condition_oracle(inst, e);
  }
  return std::nullopt;
}

std::pair<Instance, std::vector<IrrelevanceCertificate>> prune_irrelevant(
    const Instance& inst, IrrelevanceLevel level) {
  Instance out = inst;
  std::vector<IrrelevanceCertificate> certificates;
  if (level == IrrelevanceLevel::Off) return {std::move(out), std::move(certificates)};
  for (;;) {
    std::vector<IrrelevanceCertificate> found;
    for (LinkId e : out.graph.links())
      if (auto c = check_link(out, e, level)) found.push_back(*c);
    if (found.empty()) break;
    // Irrelevant links lie on no short path, so deleting a whole scan's worth
    // at once cannot make another certified link relevant.
    for (const auto& c : found) out.graph.remove_link(c.link);
    certificates.insert(certificates.end(), found.begin(), found.end());
  }
  return {std::move(out), std::move(certificates)};
}

}  // namespace dcr
