#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

#include "dcr/error.hpp"
#include "dcr/instance.hpp"
#include "dcr/irrelevance.hpp"
#include "dcr/reductions.hpp"

namespace dcr {

enum class PivotPolicy { Random, FirstNonPerfect, MaxDegreeEndpoint };

std::string_view to_string(PivotPolicy policy);
PivotPolicy parse_pivot_policy(std::string_view text);

struct FactorConfig {
  PivotPolicy pivot = PivotPolicy::Random;
  std::uint64_t seed = 20160601;
  IrrelevanceLevel irrelevance = IrrelevanceLevel::C3;
  std::size_t max_depth = 4096;
  std::size_t max_calls = 50'000'000;
  /// Keep up to this many trace entries (0 disables tracing).
  std::size_t trace_limit = 0;
};

struct FactorStats {
  std::uint64_t calls = 0;
  std::uint64_t perfect_path_leaves = 0;
  std::uint64_t too_far_leaves = 0;
  std::uint64_t links_pruned = 0;
  std::uint64_t zero_links_deleted = 0;
  std::size_t max_depth_reached = 0;
  std::map<StepKind, std::uint64_t> reductions;

  void merge(const FactorStats& other);
};

/// Elementary s-t path of at most d links made only of perfect links.
bool has_perfect_path(const Instance& inst);
/// s-t hop distance exceeds d (or is infinite); the reliability is then 0.
bool too_far(const Instance& inst);
/// Conditions link e operational: its reliability becomes exactly 1.
Graph make_perfect(const Graph& g, LinkId e);

/// Links with reliability strictly between 0 and 1, by LinkId.
std::vector<LinkId> eligible_pivots(const Graph& g);
LinkId select_pivot(const Graph& g, const FactorConfig& cfg, std::mt19937_64& rng);

struct FactorResult {
  Prob value;
  FactorStats stats;
  std::vector<ReductionStep> trace;
  bool trace_truncated = false;
};

/// Exact reliability: termination tests, irrelevance pruning, the five
/// reductions, then factoring on a pivot link e:
///   R(G) = (1 - p_e) R(G - e) + p_e R(G with e perfect).
/// Throws FactorLimit when a cap is exceeded.
FactorResult ip5m(const Instance& inst, const FactorConfig& cfg = {});

/// A recursion cap was hit; carries the statistics gathered so far.
class FactorLimit : public ResourceLimit {
 public:
  FactorLimit(std::string cap_name, std::size_t cap, const std::string& detail, FactorStats stats)
      : ResourceLimit(std::move(cap_name), cap, detail), stats_(std::move(stats)) {}
  const FactorStats& stats() const { return stats_; }

 private:
  FactorStats stats_;
};

}  // namespace dcr
