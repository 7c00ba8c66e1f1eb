#pragma once

#include <span>

#include "dcr/instance.hpp"

namespace dcr {

/// Diameter 1: every terminal pair needs its own direct link, so the
/// reliability is the product of the (parallel-merged) pair reliabilities.
Prob dcr_d1(const Graph& g, std::span<const NodeId> terminals, Mode mode);
Prob dcr_d1(const Instance& inst);

/// Two terminals, diameter 2: 1 - (1 - p(uv)) * prod_w (1 - p(uw) p(wv)).
Prob dcr_k2_d2(const Instance& inst);

/// Reliability of the merged bundle of links joining a and b (0 if none).
Prob pair_reliability(const Graph& g, NodeId a, NodeId b, Mode mode);

}  // namespace dcr
