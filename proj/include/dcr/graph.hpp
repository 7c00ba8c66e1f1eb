#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dcr/value.hpp"

namespace dcr {

struct NodeId {
  std::uint32_t value = 0;
  auto operator<=>(const NodeId&) const = default;
};

struct LinkId {
  std::uint32_t value = 0;
  auto operator<=>(const LinkId&) const = default;
};

struct Link {
  NodeId u;
  NodeId v;
  Prob reliability;

  NodeId other(NodeId end) const { return end == u ? v : u; }
  bool joins(NodeId a, NodeId b) const { return (u == a && v == b) || (u == b && v == a); }
};

/// Hop count with a distinguished infinity for unreachable pairs.
class Hops {
 public:
  constexpr Hops() = default;
  constexpr explicit Hops(std::uint32_t count) : count_(count) {}
  static constexpr Hops infinity() { return Hops(kInfinite); }

  constexpr bool is_infinite() const { return count_ == kInfinite; }
  constexpr std::uint32_t count() const { return count_; }

  /// Saturating: anything plus infinity is infinity.
  constexpr Hops operator+(Hops other) const {
    if (is_infinite() || other.is_infinite()) return infinity();
    return Hops(count_ + other.count_);
  }
  constexpr auto operator<=>(const Hops&) const = default;
  constexpr bool at_least(int bound) const {
    return is_infinite() || static_cast<long>(count_) >= bound;
  }

  std::string to_string() const { return is_infinite() ? "inf" : std::to_string(count_); }

 private:
  static constexpr std::uint32_t kInfinite = std::numeric_limits<std::uint32_t>::max();
  std::uint32_t count_ = 0;
};

/// Undirected multigraph with per-link reliabilities. Node and link ids are
/// stable: removing an element never renumbers the survivors. Self-loops are
/// never stored.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t node_count);

  NodeId add_node();
  LinkId add_link(NodeId u, NodeId v, Prob reliability);

  bool has_node(NodeId v) const;
  bool has_link(LinkId e) const;
  const Link& link(LinkId e) const;

  std::size_t node_count() const { return live_nodes_; }
  std::size_t link_count() const { return live_links_; }
  /// One past the largest id ever issued; useful for id-indexed scratch arrays.
  std::size_t node_capacity() const { return node_alive_.size(); }
  std::size_t link_capacity() const { return links_.size(); }

  std::vector<NodeId> nodes() const;
  std::vector<LinkId> links() const;
  std::span<const LinkId> incident(NodeId v) const;
  std::size_t degree(NodeId v) const { return incident(v).size(); }
  std::vector<NodeId> neighbors(NodeId v) const;

  // In-place editing, used by the value-returning operations below.
  void set_reliability(LinkId e, Prob reliability);
  void remove_link(LinkId e);
  void remove_node(NodeId v);
  /// Re-attaches every link of `absorbed` to `survivor`, dropping links that
  /// would become self-loops, then removes `absorbed`.
  void merge_node_into(NodeId absorbed, NodeId survivor);

  /// The mode shared by all reliabilities (Rational for a link-free graph).
  std::optional<Mode> mode() const;

 private:
  void require_node(NodeId v, const char* what) const;
  void require_link(LinkId e, const char* what) const;

  std::vector<bool> node_alive_;
  std::vector<std::optional<Link>> links_;
  std::vector<std::vector<LinkId>> adjacency_;
  std::size_t live_nodes_ = 0;
  std::size_t live_links_ = 0;
};

Graph delete_link(const Graph& g, LinkId e);
/// Merges the endpoints of `e` into its second endpoint, which survives.
std::pair<Graph, NodeId> contract_link(const Graph& g, LinkId e);
Graph delete_node(const Graph& g, NodeId v);

/// Breadth-first hop distance avoiding `excluded`. A query whose endpoint is
/// itself excluded is unreachable, except u == v with u not excluded (0).
Hops distance(const Graph& g, NodeId u, NodeId v, std::span<const NodeId> excluded = {});
/// All hop distances from `u` (indexed by NodeId), optionally restricted to
/// links accepted by `usable`.
std::vector<Hops> distances_from(const Graph& g, NodeId u,
                                 const std::function<bool(LinkId)>& usable = {});

std::vector<std::vector<NodeId>> components(const Graph& g);
std::vector<NodeId> cut_vertices(const Graph& g);
bool is_d_K_connected(const Graph& g, std::span<const NodeId> terminals, int d);

}  // namespace dcr
