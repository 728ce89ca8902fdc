#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "morseaut/complex.hpp"
#include "morseaut/graph.hpp"

namespace morseaut {

/// One Hasse edge: `face` is a codimension-1 face of `coface`.
struct HasseEdge {
  FaceId face;
  FaceId coface;
  bool operator==(const HasseEdge&) const = default;
};

/// Hasse diagram of a simplicial complex.
///
/// Node ids are the face ids of the parent complex. Each node keeps its
/// codimension-1 faces ("down") and cofaces ("up"); the undirected graph is
/// their union. Edges are listed sorted by (coface, face), which is also the
/// order of the primitive vectors of the complex.
class HasseDiagram {
 public:
  explicit HasseDiagram(const SimplicialComplex& complex);

  std::size_t node_count() const noexcept { return dims_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  int dimension(FaceId node) const { return dims_[node]; }
  std::span<const FaceId> down(FaceId node) const { return down_[node]; }
  std::span<const FaceId> up(FaceId node) const { return up_[node]; }
  std::size_t degree(FaceId node) const { return down_[node].size() + up_[node].size(); }

  const std::vector<HasseEdge>& edges() const noexcept { return edges_; }
  /// Index of the edge joining face and coface in edges(), if any.
  std::optional<std::size_t> edge_index(FaceId face, FaceId coface) const;

  /// H_0 .. H_dim, each sorted.
  const std::vector<std::vector<FaceId>>& layers() const noexcept { return layers_; }

 private:
  std::vector<int> dims_;
  std::vector<std::vector<FaceId>> down_;
  std::vector<std::vector<FaceId>> up_;
  std::vector<HasseEdge> edges_;
  std::vector<std::size_t> edge_offset_;  // first edge index per coface
  std::vector<std::vector<FaceId>> layers_;
};

HasseDiagram build_hasse(const SimplicialComplex& complex);

std::vector<std::size_t> layer_sizes(const HasseDiagram& hasse);

/// Common degree of the nodes of layer i. Throws NonUniformLayer when the
/// degrees differ and InvalidInput when the layer does not exist.
std::size_t layer_degree(const HasseDiagram& hasse, std::size_t layer);

/// The diagram as a plain undirected graph (dimensions forgotten).
Graph as_graph(const HasseDiagram& hasse);

/// Graphviz rendering, one rank per layer, nodes in canonical face order.
std::string to_dot(const HasseDiagram& hasse, const SimplicialComplex& complex);

}  // namespace morseaut
