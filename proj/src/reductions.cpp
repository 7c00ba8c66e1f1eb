#include "dcr/reductions.hpp"

#include <algorithm>

#include "dcr/error.hpp"

namespace dcr {

std::string_view to_string(StepKind kind) {
  switch (kind) {
    case StepKind::PendingNode:
      return "pending-node";
    case StepKind::PerfectPath:
      return "perfect-path";
    case StepKind::PerfectNeighbors:
      return "perfect-neighbors";
    case StepKind::PerfectCutNode:
      return "perfect-cut-node";
    case StepKind::ParallelLinks:
      return "parallel-links";
    case StepKind::IrrelevantPrune:
      return "irrelevant-prune";
    case StepKind::Pivot:
      return "pivot";
  }
  return "?";
}

namespace {

bool is_terminal(const Instance& inst, NodeId v) { return v == inst.source || v == inst.target; }

/// Applies a recorded step in place. Shared by the live reductions and
/// replay, so a replayed trace cannot drift from the original run.
void apply_step(Instance& inst, Prob& multiplier, const ReductionStep& step) {
  Graph& g = inst.graph;
  switch (step.kind) {
    case StepKind::PendingNode: {
      if (step.links.empty()) {
        g.remove_node(step.nodes.at(0));
        return;
      }
      NodeId terminal = step.nodes.at(0);
      LinkId e = step.links.at(0);
      multiplier *= g.link(e).reliability;
      const Link l = g.link(e);
      g.merge_node_into(l.u, l.v);
      if (inst.source == terminal)
        inst.source = l.v;
      else
        inst.target = l.v;
      inst.diameter += step.diameter_delta;
      return;
    }
    case StepKind::PerfectPath: {
      Prob product = Prob::one(inst.mode);
      for (LinkId e : step.links) product *= g.link(e).reliability;
      for (std::size_t i = 0; i + 1 < step.links.size(); ++i)
        g.set_reliability(step.links[i], Prob::one(inst.mode));
      g.set_reliability(step.links.back(), product);
      return;
    }
    case StepKind::PerfectNeighbors: {
      NodeId terminal = step.nodes.at(0);
      for (std::size_t i = 1; i < step.nodes.size(); ++i) g.merge_node_into(step.nodes[i], terminal);
      inst.diameter += step.diameter_delta;
      return;
    }
    case StepKind::PerfectCutNode:
      for (std::size_t i = 1; i < step.nodes.size(); ++i) g.remove_node(step.nodes[i]);
      return;
    case StepKind::ParallelLinks: {
      LinkId kept = step.links.at(0), removed = step.links.at(1);
      Prob fail = g.link(kept).reliability.complement() * g.link(removed).reliability.complement();
      g.set_reliability(kept, fail.complement());
      g.remove_link(removed);
      return;
    }
    case StepKind::IrrelevantPrune:
      g.remove_link(step.links.at(0));
      return;
    case StepKind::Pivot:
      return;
  }
}

class Reducer {
 public:
  explicit Reducer(const Instance& inst)
      : inst_(inst), multiplier_(Prob::one(inst.mode)) {}

  bool pending_node_once() {
    const Graph& g = inst_.graph;
    for (NodeId v : g.nodes()) {
      if (!is_terminal(inst_, v) && g.degree(v) <= 1) {
        record({StepKind::PendingNode, {v}, {}, Prob::one(inst_.mode), 0});
        return true;
      }
    }
    if (inst_.diameter < 2) return false;
    for (NodeId terminal : {inst_.source, inst_.target}) {
      NodeId other = terminal == inst_.source ? inst_.target : inst_.source;
      if (g.degree(terminal) != 1) continue;
      LinkId e = g.incident(terminal)[0];
      const Link& l = g.link(e);
      if (l.other(terminal) == other) continue;
      record({StepKind::PendingNode, {terminal, l.v}, {e}, l.reliability, -1});
      return true;
    }
    return false;
  }

  bool perfect_path_once() {
    const Graph& g = inst_.graph;
    std::vector<bool> visited(g.node_capacity(), false);
    auto interior = [&](NodeId v) { return !is_terminal(inst_, v) && g.degree(v) == 2; };

    for (NodeId start : g.nodes()) {
      if (visited[start.value] || !interior(start)) continue;
      // Walk outward from `start` along both of its links.
      auto walk = [&](LinkId first) {
        std::vector<NodeId> nodes;
        std::vector<LinkId> links{first};
        NodeId cur = g.link(first).other(start);
        LinkId via = first;
        while (cur != start && interior(cur)) {
          visited[cur.value] = true;
          nodes.push_back(cur);
          auto inc = g.incident(cur);
          via = inc[0] == via ? inc[1] : inc[0];
          cur = g.link(via).other(cur);
          links.push_back(via);
        }
        nodes.push_back(cur);
        return std::pair{nodes, links};
      };
      visited[start.value] = true;
      auto inc = g.incident(start);
      auto [left_nodes, left_links] = walk(inc[0]);
      if (left_nodes.back() == start) continue;  // isolated cycle of interior nodes
      auto [right_nodes, right_links] = walk(inc[1]);

      // Assemble endpoint(left) ... start ... endpoint(right).
      std::vector<NodeId> chain(left_nodes.rbegin(), left_nodes.rend());
      chain.push_back(start);
      chain.insert(chain.end(), right_nodes.begin(), right_nodes.end());
      std::vector<LinkId> links(left_links.rbegin(), left_links.rend());
      links.insert(links.end(), right_links.begin(), right_links.end());

      bool flip = chain.front() > chain.back() ||
                  (chain.front() == chain.back() && links.front() > links.back());
      if (flip) {
        std::reverse(chain.begin(), chain.end());
        std::reverse(links.begin(), links.end());
      }
      bool already = true;
      for (std::size_t i = 0; i + 1 < links.size(); ++i)
        already = already && g.link(links[i]).reliability.is_one();
      if (already) continue;
      record({StepKind::PerfectPath, chain, links, Prob::one(inst_.mode), 0});
      return true;
    }
    return false;
  }

  bool perfect_neighbors_once() {
    const Graph& g = inst_.graph;
    if (inst_.diameter < 2) return false;
    for (NodeId terminal : {inst_.source, inst_.target}) {
      NodeId other = terminal == inst_.source ? inst_.target : inst_.source;
      if (g.degree(terminal) == 0) continue;
      bool all_perfect = true;
      for (LinkId e : g.incident(terminal)) all_perfect = all_perfect && g.link(e).reliability.is_one();
      if (!all_perfect) continue;
      auto neighbours = g.neighbors(terminal);
      if (std::find(neighbours.begin(), neighbours.end(), other) != neighbours.end()) continue;
      std::vector<NodeId> nodes{terminal};
      nodes.insert(nodes.end(), neighbours.begin(), neighbours.end());
      record({StepKind::PerfectNeighbors, nodes, {}, Prob::one(inst_.mode), -1});
      return true;
    }
    return false;
  }

  bool cut_node_once() {
    const Graph& g = inst_.graph;
    for (NodeId v : cut_vertices(g)) {
      Graph without = delete_node(g, v);
      std::vector<NodeId> doomed;
      for (const auto& component : components(without)) {
        bool has_terminal = std::any_of(component.begin(), component.end(),
                                        [&](NodeId x) { return is_terminal(inst_, x); });
        if (!has_terminal) doomed.insert(doomed.end(), component.begin(), component.end());
      }
      if (doomed.empty()) continue;
      // Components of G - v that were already disconnected from v in G are
      // left alone; only those hanging off v are dead ends of v.
      std::vector<NodeId> attached;
      auto reach = components(g);
      for (const auto& component : reach) {
        if (!std::binary_search(component.begin(), component.end(), v)) continue;
        for (NodeId x : doomed)
          if (std::binary_search(component.begin(), component.end(), x)) attached.push_back(x);
      }
      if (attached.empty()) continue;
      std::sort(attached.begin(), attached.end());
      std::vector<NodeId> nodes{v};
      nodes.insert(nodes.end(), attached.begin(), attached.end());
      record({StepKind::PerfectCutNode, nodes, {}, Prob::one(inst_.mode), 0});
      return true;
    }
    return false;
  }

  bool parallel_links_once() {
    const Graph& g = inst_.graph;
    for (LinkId e : g.links()) {
      const Link& l = g.link(e);
      for (LinkId f : g.incident(l.u)) {
        if (f > e && g.link(f).joins(l.u, l.v)) {
          record({StepKind::ParallelLinks, {}, {e, f}, Prob::one(inst_.mode), 0});
          return true;
        }
      }
    }
    return false;
  }

  template <typename Once>
  bool exhaust(Once once) {
    bool any = false;
    while ((this->*once)()) any = true;
    return any;
  }

  ReducedForm finish() && { return {std::move(multiplier_), std::move(inst_), std::move(trace_)}; }
  const Prob& multiplier() const { return multiplier_; }
  const Instance& instance() const { return inst_; }

 private:
  void record(ReductionStep step) {
    apply_step(inst_, multiplier_, step);
    trace_.push_back(std::move(step));
  }

  Instance inst_;
  Prob multiplier_;
  std::vector<ReductionStep> trace_;
};

template <typename Once>
std::optional<Instance> single_rewrite(const Instance& inst, Once once) {
  Reducer r(inst);
  if (!r.exhaust(once)) return std::nullopt;
  return std::move(r).finish().instance;
}

}  // namespace

std::optional<std::pair<Prob, Instance>> pending_node(const Instance& inst) {
  Reducer r(inst);
  if (!r.exhaust(&Reducer::pending_node_once)) return std::nullopt;
  auto form = std::move(r).finish();
  return std::pair{std::move(form.multiplier), std::move(form.instance)};
}

std::optional<Instance> perfect_path(const Instance& inst) {
  return single_rewrite(inst, &Reducer::perfect_path_once);
}

std::optional<Instance> perfect_neighbors(const Instance& inst) {
  return single_rewrite(inst, &Reducer::perfect_neighbors_once);
}

std::optional<Instance> cut_node_cleanup(const Instance& inst) {
  return single_rewrite(inst, &Reducer::cut_node_once);
}

std::optional<Instance> parallel_links(const Instance& inst) {
  return single_rewrite(inst, &Reducer::parallel_links_once);
}

ReducedForm apply_5p(const Instance& inst) {
  Reducer r(inst);
  for (;;) {
    bool changed = false;
    changed |= r.exhaust(&Reducer::pending_node_once);
    changed |= r.exhaust(&Reducer::perfect_path_once);
    changed |= r.exhaust(&Reducer::perfect_neighbors_once);
    changed |= r.exhaust(&Reducer::cut_node_once);
    changed |= r.exhaust(&Reducer::parallel_links_once);
    if (!changed) break;
  }
  return std::move(r).finish();
}

ReducedForm replay_trace(const Instance& inst, const std::vector<ReductionStep>& trace) {
  ReducedForm out{Prob::one(inst.mode), inst, {}};
  for (const auto& step : trace) {
    apply_step(out.instance, out.multiplier, step);
    out.trace.push_back(step);
  }
  return out;
}

}  // namespace dcr
