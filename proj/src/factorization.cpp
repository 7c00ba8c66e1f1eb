#include "dcr/factorization.hpp"

#include <algorithm>

namespace dcr {

std::string_view to_string(PivotPolicy policy) {
  switch (policy) {
    case PivotPolicy::Random:
      return "random";
    case PivotPolicy::FirstNonPerfect:
      return "first";
    case PivotPolicy::MaxDegreeEndpoint:
      return "maxdeg";
  }
  return "?";
}

PivotPolicy parse_pivot_policy(std::string_view text) {
  if (text == "random") return PivotPolicy::Random;
  if (text == "first") return PivotPolicy::FirstNonPerfect;
  if (text == "maxdeg") return PivotPolicy::MaxDegreeEndpoint;
  throw InvalidArgument("unknown pivot policy '" + std::string(text) + "'");
}

void FactorStats::merge(const FactorStats& other) {
  calls += other.calls;
  perfect_path_leaves += other.perfect_path_leaves;
  too_far_leaves += other.too_far_leaves;
  links_pruned += other.links_pruned;
  zero_links_deleted += other.zero_links_deleted;
  max_depth_reached = std::max(max_depth_reached, other.max_depth_reached);
  for (const auto& [kind, count] : other.reductions) reductions[kind] += count;
}

bool has_perfect_path(const Instance& inst) {
  const Graph& g = inst.graph;
  auto dist = distances_from(g, inst.source,
                             [&](LinkId e) { return g.link(e).reliability.is_one(); });
  return !dist[inst.target.value].at_least(inst.diameter + 1);
}

bool too_far(const Instance& inst) { return terminals_too_far(inst); }

Graph make_perfect(const Graph& g, LinkId e) {
  Graph out = g;
  out.set_reliability(e, Prob::one(g.link(e).reliability.mode()));
  return out;
}

std::vector<LinkId> eligible_pivots(const Graph& g) {
  std::vector<LinkId> out;
  for (LinkId e : g.links())
    if (g.link(e).reliability.is_imperfect()) out.push_back(e);
  return out;
}

LinkId select_pivot(const Graph& g, const FactorConfig& cfg, std::mt19937_64& rng) {
  auto eligible = eligible_pivots(g);
  if (eligible.empty()) throw InternalError("no link with reliability strictly inside (0,1)");
  switch (cfg.pivot) {
    case PivotPolicy::FirstNonPerfect:
      return eligible.front();
    case PivotPolicy::Random:
      return eligible[rng() % eligible.size()];
    case PivotPolicy::MaxDegreeEndpoint: {
      auto score = [&](LinkId e) {
        const Link& l = g.link(e);
        auto a = g.degree(l.u), b = g.degree(l.v);
        return std::pair{std::max(a, b), a + b};
      };
      LinkId best = eligible.front();
      for (LinkId e : eligible)
        if (score(e) > score(best)) best = e;
      return best;
    }
  }
  throw InternalError("unreachable pivot policy");
}

namespace {

class Factoring {
 public:
  explicit Factoring(const FactorConfig& cfg) : cfg_(cfg), rng_(cfg.seed) {}

  Prob solve(Instance inst, std::size_t depth) {
    ++result_.stats.calls;
    result_.stats.max_depth_reached = std::max(result_.stats.max_depth_reached, depth);
    if (depth > cfg_.max_depth)
      throw FactorLimit("max_depth", cfg_.max_depth, "factoring recursion too deep", result_.stats);
    if (result_.stats.calls > cfg_.max_calls)
      throw FactorLimit("max_calls", cfg_.max_calls, "factoring call budget exhausted",
                        result_.stats);

    drop_zero_links(inst);
    if (auto leaf = terminate(inst)) return *leaf;

    auto [pruned, certificates] = prune_irrelevant(inst, cfg_.irrelevance);
    result_.stats.links_pruned += certificates.size();
    for (const auto& c : certificates)
      log({StepKind::IrrelevantPrune, {}, {c.link}, Prob::one(inst.mode), 0}, depth);

    ReducedForm reduced = apply_5p(pruned);
    for (auto& step : reduced.trace) {
      ++result_.stats.reductions[step.kind];
      log(std::move(step), depth);
    }
    Instance current = std::move(reduced.instance);
    const Prob& mu = reduced.multiplier;

    drop_zero_links(current);
    if (auto leaf = terminate(current)) return mu * *leaf;

    LinkId e = select_pivot(current.graph, cfg_, rng_);
    const Prob p = current.graph.link(e).reliability;
    log({StepKind::Pivot, {}, {e}, p, 0}, depth);

    Prob down = solve(Instance{delete_link(current.graph, e), current.source, current.target,
                               current.diameter, current.mode},
                      depth + 1);
    Prob up = solve(Instance{make_perfect(current.graph, e), current.source, current.target,
                             current.diameter, current.mode},
                    depth + 1);
    return mu * (p.complement() * down + p * up);
  }

  FactorResult take() && { return std::move(result_); }

 private:
  std::optional<Prob> terminate(const Instance& inst) {
    if (has_perfect_path(inst)) {
      ++result_.stats.perfect_path_leaves;
      return Prob::one(inst.mode);
    }
    if (too_far(inst)) {
      ++result_.stats.too_far_leaves;
      return Prob::zero(inst.mode);
    }
    return std::nullopt;
  }

  void drop_zero_links(Instance& inst) {
    for (LinkId e : inst.graph.links()) {
      if (inst.graph.link(e).reliability.is_zero()) {
        inst.graph.remove_link(e);
        ++result_.stats.zero_links_deleted;
      }
    }
  }

  void log(ReductionStep step, std::size_t depth) {
    if (cfg_.trace_limit == 0) return;
    if (result_.trace.size() >= cfg_.trace_limit) {
      result_.trace_truncated = true;
      return;
    }
    step.depth = static_cast<int>(depth);
    result_.trace.push_back(std::move(step));
  }

  const FactorConfig& cfg_;
  std::mt19937_64 rng_;
  FactorResult result_;
};

}  // namespace

FactorResult ip5m(const Instance& inst, const FactorConfig& cfg) {
  Factoring engine(cfg);
  Prob value = engine.solve(inst, 0);
  FactorResult out = std::move(engine).take();
  out.value = std::move(value);
  return out;
}

}  // namespace dcr
