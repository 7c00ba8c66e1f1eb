#include "dcr/graph.hpp"

#include <algorithm>
#include <deque>

#include "dcr/error.hpp"

namespace dcr {

Graph::Graph(std::size_t node_count) {
  for (std::size_t i = 0; i < node_count; ++i) add_node();
}

NodeId Graph::add_node() {
  NodeId id{static_cast<std::uint32_t>(node_alive_.size())};
  node_alive_.push_back(true);
  adjacency_.emplace_back();
  ++live_nodes_;
  return id;
}

LinkId Graph::add_link(NodeId u, NodeId v, Prob reliability) {
  require_node(u, "add_link");
  require_node(v, "add_link");
  if (u == v) throw InvalidArgument("self-loop on node " + std::to_string(u.value));
  LinkId id{static_cast<std::uint32_t>(links_.size())};
  links_.push_back(Link{u, v, std::move(reliability)});
  adjacency_[u.value].push_back(id);
  adjacency_[v.value].push_back(id);
  ++live_links_;
  return id;
}

bool Graph::has_node(NodeId v) const { return v.value < node_alive_.size() && node_alive_[v.value]; }

bool Graph::has_link(LinkId e) const { return e.value < links_.size() && links_[e.value].has_value(); }

const Link& Graph::link(LinkId e) const {
  require_link(e, "link");
  return *links_[e.value];
}

std::vector<NodeId> Graph::nodes() const {
  std::vector<NodeId> out;
  out.reserve(live_nodes_);
  for (std::uint32_t i = 0; i < node_alive_.size(); ++i)
    if (node_alive_[i]) out.push_back(NodeId{i});
  return out;
}

std::vector<LinkId> Graph::links() const {
  std::vector<LinkId> out;
  out.reserve(live_links_);
  for (std::uint32_t i = 0; i < links_.size(); ++i)
    if (links_[i]) out.push_back(LinkId{i});
  return out;
}

std::span<const LinkId> Graph::incident(NodeId v) const {
  require_node(v, "incident");
  return adjacency_[v.value];
}

std::vector<NodeId> Graph::neighbors(NodeId v) const {
  std::vector<NodeId> out;
  for (LinkId e : incident(v)) out.push_back(links_[e.value]->other(v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void Graph::set_reliability(LinkId e, Prob reliability) {
  require_link(e, "set_reliability");
  links_[e.value]->reliability = std::move(reliability);
}

void Graph::remove_link(LinkId e) {
  require_link(e, "remove_link");
  const Link& l = *links_[e.value];
  for (NodeId end : {l.u, l.v}) {
    auto& adj = adjacency_[end.value];
    adj.erase(std::find(adj.begin(), adj.end(), e));
  }
  links_[e.value].reset();
  --live_links_;
}

void Graph::remove_node(NodeId v) {
  require_node(v, "remove_node");
  while (!adjacency_[v.value].empty()) remove_link(adjacency_[v.value].back());
  node_alive_[v.value] = false;
  --live_nodes_;
}

void Graph::merge_node_into(NodeId absorbed, NodeId survivor) {
  require_node(absorbed, "merge_node_into");
  require_node(survivor, "merge_node_into");
  if (absorbed == survivor) return;
  std::vector<LinkId> moving = adjacency_[absorbed.value];
  for (LinkId e : moving) {
    Link& l = *links_[e.value];
    if (l.other(absorbed) == survivor) {
      remove_link(e);
      continue;
    }
    if (l.u == absorbed)
      l.u = survivor;
    else
      l.v = survivor;
    adjacency_[survivor.value].push_back(e);
  }
  adjacency_[absorbed.value].clear();
  node_alive_[absorbed.value] = false;
  --live_nodes_;
  std::sort(adjacency_[survivor.value].begin(), adjacency_[survivor.value].end());
}

std::optional<Mode> Graph::mode() const {
  for (const auto& l : links_)
    if (l) return l->reliability.mode();
  return std::nullopt;
}

void Graph::require_node(NodeId v, const char* what) const {
  if (!has_node(v))
    throw InvalidArgument(std::string(what) + ": unknown node " + std::to_string(v.value));
}

void Graph::require_link(LinkId e, const char* what) const {
  if (!has_link(e))
    throw InvalidArgument(std::string(what) + ": unknown link " + std::to_string(e.value));
}

Graph delete_link(const Graph& g, LinkId e) {
  Graph out = g;
  out.remove_link(e);
  return out;
}

std::pair<Graph, NodeId> contract_link(const Graph& g, LinkId e) {
  const Link& l = g.link(e);
  NodeId absorbed = l.u;
  NodeId survivor = l.v;
  Graph out = g;
  out.merge_node_into(absorbed, survivor);
  return {std::move(out), survivor};
}

Graph delete_node(const Graph& g, NodeId v) {
  Graph out = g;
  out.remove_node(v);
  return out;
}

std::vector<Hops> distances_from(const Graph& g, NodeId u,
                                 const std::function<bool(LinkId)>& usable) {
  std::vector<Hops> dist(g.node_capacity(), Hops::infinity());
  if (!g.has_node(u)) throw InvalidArgument("distance: unknown node " + std::to_string(u.value));
  std::deque<NodeId> queue{u};
  dist[u.value] = Hops(0);
  while (!queue.empty()) {
    NodeId x = queue.front();
    queue.pop_front();
    for (LinkId e : g.incident(x)) {
      if (usable && !usable(e)) continue;
      NodeId y = g.link(e).other(x);
      if (!dist[y.value].is_infinite()) continue;
      dist[y.value] = Hops(dist[x.value].count() + 1);
      queue.push_back(y);
    }
  }
  return dist;
}

Hops distance(const Graph& g, NodeId u, NodeId v, std::span<const NodeId> excluded) {
  if (!g.has_node(u) || !g.has_node(v))
    throw InvalidArgument("distance: unknown endpoint");
  auto is_excluded = [&](NodeId x) {
    return std::find(excluded.begin(), excluded.end(), x) != excluded.end();
  };
  if (is_excluded(u) || is_excluded(v)) return Hops::infinity();
  if (u == v) return Hops(0);

  std::vector<bool> blocked(g.node_capacity(), false);
  for (NodeId x : excluded)
    if (x.value < blocked.size()) blocked[x.value] = true;
  std::vector<std::uint32_t> dist(g.node_capacity(), 0);
  std::vector<bool> seen(g.node_capacity(), false);
  std::deque<NodeId> queue{u};
  seen[u.value] = true;
  while (!queue.empty()) {
    NodeId x = queue.front();
    queue.pop_front();
    for (LinkId e : g.incident(x)) {
      NodeId y = g.link(e).other(x);
      if (seen[y.value] || blocked[y.value]) continue;
      seen[y.value] = true;
      dist[y.value] = dist[x.value] + 1;
      if (y == v) return Hops(dist[y.value]);
      queue.push_back(y);
    }
  }
  return Hops::infinity();
}

std::vector<std::vector<NodeId>> components(const Graph& g) {
  std::vector<std::vector<NodeId>> out;
  std::vector<bool> seen(g.node_capacity(), false);
  for (NodeId root : g.nodes()) {
    if (seen[root.value]) continue;
    std::vector<NodeId> component{root};
    seen[root.value] = true;
    for (std::size_t i = 0; i < component.size(); ++i) {
      for (LinkId e : g.incident(component[i])) {
        NodeId y = g.link(e).other(component[i]);
        if (!seen[y.value]) {
          seen[y.value] = true;
          component.push_back(y);
        }
      }
    }
    std::sort(component.begin(), component.end());
    out.push_back(std::move(component));
  }
  return out;
}

std::vector<NodeId> cut_vertices(const Graph& g) {
  // Iterative Hopcroft-Tarjan lowpoint computation. Parallel links are told
  // apart by LinkId so a doubled link never looks like a tree edge back-edge.
  const std::size_t cap = g.node_capacity();
  std::vector<int> order(cap, -1), low(cap, 0);
  std::vector<bool> is_cut(cap, false);
  int counter = 0;

  struct Frame {
    NodeId node;
    std::optional<LinkId> via;
    std::size_t next = 0;
    int children = 0;
  };

  for (NodeId root : g.nodes()) {
    if (order[root.value] != -1) continue;
    std::vector<Frame> stack{{root, std::nullopt}};
    order[root.value] = low[root.value] = counter++;
    while (!stack.empty()) {
      Frame& top = stack.back();
      auto incident = g.incident(top.node);
      if (top.next < incident.size()) {
        LinkId e = incident[top.next++];
        if (top.via && *top.via == e) continue;
        NodeId y = g.link(e).other(top.node);
        if (order[y.value] == -1) {
          order[y.value] = low[y.value] = counter++;
          ++top.children;
          stack.push_back({y, e});
        } else {
          low[top.node.value] = std::min(low[top.node.value], order[y.value]);
        }
        continue;
      }
      Frame done = top;
      stack.pop_back();
      if (stack.empty()) {
        if (done.children > 1) is_cut[done.node.value] = true;
        continue;
      }
      Frame& parent = stack.back();
      low[parent.node.value] = std::min(low[parent.node.value], low[done.node.value]);
      if (stack.size() > 1 && low[done.node.value] >= order[parent.node.value])
        is_cut[parent.node.value] = true;
    }
  }

  std::vector<NodeId> out;
  for (NodeId v : g.nodes())
    if (is_cut[v.value]) out.push_back(v);
  return out;
}

bool is_d_K_connected(const Graph& g, std::span<const NodeId> terminals, int d) {
  for (std::size_t i = 0; i < terminals.size(); ++i) {
    auto dist = distances_from(g, terminals[i]);
    for (std::size_t j = i + 1; j < terminals.size(); ++j)
      if (dist[terminals[j].value].at_least(d + 1)) return false;
  }
  return true;
}

}  // namespace dcr
