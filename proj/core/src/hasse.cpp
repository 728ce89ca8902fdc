#include "morseaut/hasse.hpp"

#include <algorithm>
#include <sstream>

#include "morseaut/errors.hpp"

namespace morseaut {

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

HasseDiagram::HasseDiagram(const SimplicialComplex& complex)
    : dims_(complex.face_count()),
      down_(complex.face_count()),
      up_(complex.face_count()),
      edge_offset_(complex.face_count() + 1, 0) {
  const auto& faces = complex.faces();
  std::vector<VertexId> buf;
  for (FaceId id = 0; id < faces.size(); ++id) {
    const Simplex& s = faces[id];
    dims_[id] = s.dimension();
    if (s.size() < 2) continue;
    for (std::size_t skip = 0; skip < s.size(); ++skip) {
      buf.clear();
      for (std::size_t i = 0; i < s.size(); ++i)
        if (i != skip) buf.push_back(s[i]);
      FaceId sub = *complex.find(buf);
      down_[id].push_back(sub);
      up_[sub].push_back(id);
    }
    std::sort(down_[id].begin(), down_[id].end());
  }
  // Faces are visited in increasing id order, so each up_ list is already sorted.
  for (FaceId id = 0; id < faces.size(); ++id) {
    edge_offset_[id] = edges_.size();
    for (FaceId sub : down_[id]) edges_.push_back({sub, id});
  }
  edge_offset_[faces.size()] = edges_.size();

  layers_.resize(static_cast<std::size_t>(complex.dimension() + 1));
  for (FaceId id = 0; id < faces.size(); ++id)
    layers_[static_cast<std::size_t>(dims_[id])].push_back(id);
}

std::optional<std::size_t> HasseDiagram::edge_index(FaceId face, FaceId coface) const {
  if (coface >= down_.size()) return std::nullopt;
  const auto& d = down_[coface];
  auto it = std::lower_bound(d.begin(), d.end(), face);
  if (it == d.end() || *it != face) return std::nullopt;
  return edge_offset_[coface] + static_cast<std::size_t>(it - d.begin());
}

HasseDiagram build_hasse(const SimplicialComplex& complex) { return HasseDiagram(complex); }

std::vector<std::size_t> layer_sizes(const HasseDiagram& hasse) {
  std::vector<std::size_t> sizes;
  for (const auto& layer : hasse.layers()) sizes.push_back(layer.size());
  return sizes;
}

std::size_t layer_degree(const HasseDiagram& hasse, std::size_t layer) {
  if (layer >= hasse.layers().size())
    throw InvalidInput("layer " + std::to_string(layer) + " does not exist");
  const auto& nodes = hasse.layers()[layer];
  const std::size_t deg = hasse.degree(nodes.front());
  for (FaceId node : nodes)
    if (hasse.degree(node) != deg)
      throw NonUniformLayer("layer " + std::to_string(layer) + " has nodes of degree " +
                            std::to_string(deg) + " and " +
                            std::to_string(hasse.degree(node)));
  return deg;
}

Graph as_graph(const HasseDiagram& hasse) {
  Graph g(hasse.node_count());
  for (const HasseEdge& e : hasse.edges()) g.add_edge(e.face, e.coface);
  return g;
}

std::string to_dot(const HasseDiagram& hasse, const SimplicialComplex& complex) {
  std::ostringstream out;
  out << "graph hasse {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=plaintext];\n";
  for (std::size_t i = 0; i < hasse.layers().size(); ++i) {
    out << "  { rank=same;";
    for (FaceId id : hasse.layers()[i])
      out << " n" << id << " [label=\"" << dot_escape(complex.face_label(id)) << "\"];";
    out << " }\n";
  }
  for (const HasseEdge& e : hasse.edges())
    out << "  n" << e.face << " -- n" << e.coface << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace morseaut
