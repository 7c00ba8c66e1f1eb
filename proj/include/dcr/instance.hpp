#pragma once

#include "dcr/graph.hpp"
#include "dcr/value.hpp"

namespace dcr {

/// A source-terminal reliability query: graph, terminals and hop budget.
struct Instance {
  Graph graph;
  NodeId source;
  NodeId target;
  int diameter = 1;
  Mode mode = Mode::Rational;
};

/// Validates terminals, checks every reliability is in `mode` and within
/// [0,1], and clamps the diameter to |V|-1. Throws InvalidArgument.
Instance make_instance(Graph graph, NodeId source, NodeId target, int diameter, Mode mode);

/// Converts every link reliability of `inst` to `mode`. Polynomial values
/// can only be converted by substituting `p_value`.
Instance convert_mode(const Instance& inst, Mode mode);

/// True iff the s-t hop distance exceeds the diameter (or is infinite).
bool terminals_too_far(const Instance& inst);

}  // namespace dcr
