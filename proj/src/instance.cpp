#include "dcr/instance.hpp"

#include "dcr/error.hpp"

namespace dcr {

namespace {

void check_reliability(const Prob& r, Mode mode, LinkId e) {
  auto where = "link " + std::to_string(e.value);
  if (r.mode() != mode)
    throw InvalidArgument(where + ": reliability is not in " + std::string(to_string(mode)) +
                          " mode");
  switch (mode) {
    case Mode::Float: {
      double v = r.as_double();
      if (!(v >= 0.0 && v <= 1.0)) throw InvalidArgument(where + ": reliability outside [0,1]");
      break;
    }
    case Mode::Rational:
      if (r.as_rational() < 0 || r.as_rational() > 1)
        throw InvalidArgument(where + ": reliability outside [0,1]");
      break;
    case Mode::Poly: {
      // Any polynomial in p is admitted (reduced instances carry products
      // such as p^4); a constant must still be 0 or 1.
      const auto& poly = r.as_polynomial();
      if (poly.degree() < 1 && !(poly.is_constant(0) || poly.is_constant(1)))
        throw InvalidArgument(where + ": polynomial mode admits only symbolic values or 0/1");
      break;
    }
  }
}

}  // namespace

Instance make_instance(Graph graph, NodeId source, NodeId target, int diameter, Mode mode) {
  if (!graph.has_node(source) || !graph.has_node(target))
    throw InvalidArgument("terminal is not a node of the graph");
  if (source == target) throw InvalidArgument("source and target coincide");
  if (diameter < 1) throw InvalidArgument("diameter must be at least 1");
  for (LinkId e : graph.links()) check_reliability(graph.link(e).reliability, mode, e);
  int clamp = static_cast<int>(graph.node_count()) - 1;
  if (diameter > clamp) diameter = clamp;
  return Instance{std::move(graph), source, target, diameter, mode};
}

Instance convert_mode(const Instance& inst, Mode mode) {
  Instance out = inst;
  out.mode = mode;
  for (LinkId e : out.graph.links()) {
    const Prob& r = out.graph.link(e).reliability;
    if (r.mode() == mode) continue;
    if (r.mode() == Mode::Poly) {
      if (r.is_zero() || r.is_one()) {
        out.graph.set_reliability(e, Prob::from_rational(r.is_one() ? 1 : 0, mode));
        continue;
      }
      throw InvalidArgument("symbolic reliability needs a value for p to leave poly mode");
    }
    Rational exact = r.mode() == Mode::Rational ? r.as_rational() : Rational(r.as_double());
    out.graph.set_reliability(e, Prob::from_rational(exact, mode));
  }
  return out;
}

bool terminals_too_far(const Instance& inst) {
  return distance(inst.graph, inst.source, inst.target).at_least(inst.diameter + 1);
}

}  // namespace dcr
