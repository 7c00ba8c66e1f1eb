#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "dcr/instance.hpp"

namespace dcr {

enum class StepKind {
  PendingNode,
  PerfectPath,
  PerfectNeighbors,
  PerfectCutNode,
  ParallelLinks,
  IrrelevantPrune,
  Pivot,
};

std::string_view to_string(StepKind kind);

/// One elementary rewrite. The element lists carry exactly what a replay
/// needs:
///   PendingNode      deletion: nodes = {v}; contraction: nodes = {terminal,
///                    survivor}, links = {e}, multiplier p_e, delta -1
///   PerfectPath      nodes = chain v1..vn, links = chain links in order
///   PerfectNeighbors nodes = {terminal, merged neighbours...}, delta -1
///   PerfectCutNode   nodes = {cut vertex, deleted nodes...}
///   ParallelLinks    links = {kept, removed}
///   IrrelevantPrune  links = {deleted}
///   Pivot            links = {pivot}
struct ReductionStep {
  StepKind kind;
  std::vector<NodeId> nodes;
  std::vector<LinkId> links;
  Prob multiplier;
  int diameter_delta = 0;
  int depth = 0;  ///< recursion depth when recorded by the factoring engine
};

/// DCR(original) = multiplier * DCR(instance).
struct ReducedForm {
  Prob multiplier;
  Instance instance;
  std::vector<ReductionStep> trace;
};

/// Deletes non-terminal nodes of degree <= 1; contracts a terminal hanging on
/// a single link toward a non-terminal (diameter - 1, multiplier p_e).
std::optional<std::pair<Prob, Instance>> pending_node(const Instance& inst);
/// Chains of non-terminal degree-2 nodes: all links but the last become
/// perfect, the last carries the product.
std::optional<Instance> perfect_path(const Instance& inst);
/// A terminal whose links are all perfect absorbs its neighbourhood
/// (other terminal not adjacent, d >= 2); diameter - 1.
std::optional<Instance> perfect_neighbors(const Instance& inst);
/// Deletes terminal-free components hanging off cut vertices.
std::optional<Instance> cut_node_cleanup(const Instance& inst);
/// Merges parallel links: p1 + p2 - p1 p2.
std::optional<Instance> parallel_links(const Instance& inst);

/// The five rewrites above in that order, each to exhaustion, repeated until
/// a whole round changes nothing.
ReducedForm apply_5p(const Instance& inst);

/// Re-applies a recorded trace to the instance it was recorded from.
ReducedForm replay_trace(const Instance& inst, const std::vector<ReductionStep>& trace);

}  // namespace dcr
