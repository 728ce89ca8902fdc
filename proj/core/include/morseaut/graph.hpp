#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace morseaut {

using NodeId = std::uint32_t;

/// Simple undirected graph with an optional initial node coloring.
///
/// Colors are part of the structure: isomorphisms and automorphisms must map
/// each node to a node of the same color. Adjacency lists are kept sorted.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t nodes);
  Graph(std::size_t nodes, const std::vector<std::pair<NodeId, NodeId>>& edges);

  /// Ignores duplicates; throws InvalidInput on self loops or bad ids.
  void add_edge(NodeId u, NodeId v);
  void set_color(NodeId u, std::uint32_t color) { colors_.at(u) = color; }

  std::size_t node_count() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept { return edges_; }
  std::span<const NodeId> neighbors(NodeId u) const { return adj_[u]; }
  std::size_t degree(NodeId u) const { return adj_[u].size(); }
  bool has_edge(NodeId u, NodeId v) const;
  std::uint32_t color(NodeId u) const { return colors_[u]; }
  const std::vector<std::uint32_t>& colors() const noexcept { return colors_; }

  /// Edges as (u, v) with u < v, sorted.
  std::vector<std::pair<NodeId, NodeId>> edges() const;

 private:
  std::vector<std::vector<NodeId>> adj_;
  std::vector<std::uint32_t> colors_;
  std::size_t edges_ = 0;
};

Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);

}  // namespace morseaut
