#include "morseaut/graph.hpp"

#include <algorithm>

#include "morseaut/errors.hpp"

namespace morseaut {

Graph::Graph(std::size_t nodes) : adj_(nodes), colors_(nodes, 0) {}

Graph::Graph(std::size_t nodes, const std::vector<std::pair<NodeId, NodeId>>& edges)
    : Graph(nodes) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(NodeId u, NodeId v) {
  if (u >= adj_.size() || v >= adj_.size()) throw InvalidInput("edge references unknown node");
  if (u == v) throw InvalidInput("self loops are not allowed");
  auto insert = [](std::vector<NodeId>& list, NodeId x) {
    auto it = std::lower_bound(list.begin(), list.end(), x);
    if (it != list.end() && *it == x) return false;
    list.insert(it, x);
    return true;
  };
  if (insert(adj_[u], v)) {
    insert(adj_[v], u);
    ++edges_;
  }
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  const auto& list = adj_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<std::pair<NodeId, NodeId>> Graph::edges() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  out.reserve(edges_);
  for (NodeId u = 0; u < adj_.size(); ++u)
    for (NodeId v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph cycle_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i)
    g.add_edge(static_cast<NodeId>(i), static_cast<NodeId>((i + 1) % n));
  return g;
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

}  // namespace morseaut
