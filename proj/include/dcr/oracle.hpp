#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "dcr/instance.hpp"

namespace dcr {

/// Enumeration caps for the exhaustive routes. Exceeding one raises
/// ResourceLimit rather than truncating.
struct OracleLimits {
  std::size_t max_links = 24;     ///< 2^max_links states
  std::size_t max_minpaths = 20;
};

/// Elementary s-t path of at most d links.
struct Minpath {
  std::vector<NodeId> nodes;
  std::vector<LinkId> links;
  std::size_t length() const { return links.size(); }
};

/// Sum over every link state of P(state) * [terminals within d hops].
Prob dcr_bruteforce(const Instance& inst, const OracleLimits& limits = {});
/// Same, for an arbitrary terminal set.
Prob dcr_bruteforce(const Graph& g, std::span<const NodeId> terminals, int d, Mode mode,
                    const OracleLimits& limits = {});

/// Depth-first enumeration, neighbours visited in (NodeId, LinkId) order, so
/// paths come out lexicographically by node sequence.
std::vector<Minpath> enumerate_minpaths(const Instance& inst);

/// Inclusion-exclusion over the minpaths. Terms are grouped by the union of
/// their link sets, which keeps the cost at r * (#distinct unions) while
/// producing the same signed sum as the 2^r - 1 subset expansion.
Prob dcr_inclusion_exclusion(const Instance& inst, const OracleLimits& limits = {});

bool is_link_relevant_oracle(const Instance& inst, LinkId e);

/// Over elementary s-t paths through e = {u,v} traversed u->v (first) and
/// v->u (second): the least value of len(s..u) + len(v..t). Infinite when no
/// such path exists. A path through e is at most d long iff one of these is
/// at most d-1.
std::pair<Hops, Hops> shortest_detour_through(const Instance& inst, LinkId e);

struct MonteCarloEstimate {
  double estimate = 0;
  double std_error = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

inline constexpr std::string_view kMonteCarloPrng = "mt19937_64";
inline constexpr std::uint64_t kDefaultSeed = 20160601;

/// Crude Monte Carlo. Uniform deviates are the top 53 bits of mt19937_64
/// output scaled by 2^-53, so the stream is identical on every platform.
MonteCarloEstimate monte_carlo_estimate(const Instance& inst, std::uint64_t samples,
                                        std::uint64_t seed = kDefaultSeed);

}  // namespace dcr
