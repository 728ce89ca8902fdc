#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace morseaut {

/// Dense vertex index, 0..|V|-1.
using VertexId = std::uint32_t;
/// Index of a face in the canonical face table of its complex.
using FaceId = std::uint32_t;

/// A nonempty, strictly increasing set of vertex ids.
class Simplex {
 public:
  /// Sorts the input. Throws InvalidInput on empty input or duplicates.
  explicit Simplex(std::vector<VertexId> vertices);
  Simplex(std::initializer_list<VertexId> vertices)
      : Simplex(std::vector<VertexId>(vertices)) {}

  int dimension() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
  std::size_t size() const noexcept { return vertices_.size(); }
  std::span<const VertexId> vertices() const noexcept { return vertices_; }
  VertexId operator[](std::size_t i) const { return vertices_[i]; }

  bool contains(VertexId v) const;
  bool is_face_of(const Simplex& other) const;

  /// Bitmask of the vertex set. Only meaningful when every id is < 64.
  std::uint64_t mask() const noexcept;

  /// Canonical order: by dimension, then lexicographically.
  std::strong_ordering operator<=>(const Simplex& other) const;
  bool operator==(const Simplex& other) const = default;

 private:
  std::vector<VertexId> vertices_;
};

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept;
};

/// Immutable finite abstract simplicial complex.
///
/// Faces are stored once in canonical order (dimension, then lexicographic
/// vertex list); a FaceId is an index into that table and is stable for the
/// lifetime of the complex. An empty complex (no vertices) is representable
/// so that the Morse complex of a point has a value.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Closure of a labelled facet presentation. Labels are mapped to dense ids
  /// in first-appearance order.
  static SimplicialComplex from_facets(
      const std::vector<std::vector<std::string>>& facets);

  /// Closure of facets given directly on ids 0..labels.size()-1.
  static SimplicialComplex from_id_facets(
      std::vector<std::string> labels,
      const std::vector<std::vector<VertexId>>& facets);

  /// Builds a complex from a face family that is already downward closed.
  /// Throws InvalidInput if it is not.
  static SimplicialComplex from_closed_faces(std::vector<std::string> labels,
                                             std::vector<Simplex> faces);

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t face_count() const noexcept { return faces_.size(); }
  bool empty() const noexcept { return faces_.empty(); }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(VertexId v) const { return labels_.at(v); }
  std::optional<VertexId> vertex_by_label(const std::string& label) const;

  const std::vector<Simplex>& faces() const noexcept { return faces_; }
  const Simplex& face(FaceId id) const { return faces_.at(id); }
  /// Facet ids in canonical order.
  const std::vector<FaceId>& facets() const noexcept { return facets_; }
  bool is_facet(FaceId id) const { return is_facet_.at(id); }

  std::optional<FaceId> find(std::span<const VertexId> sorted_vertices) const;
  std::optional<FaceId> find(const Simplex& s) const { return find(s.vertices()); }
  bool contains(const Simplex& s) const { return find(s).has_value(); }

  /// Faces of dimension d, as a contiguous id range [first, last).
  std::pair<FaceId, FaceId> dimension_range(int d) const;

  int dimension() const noexcept;
  std::vector<std::size_t> f_vector() const;
  bool is_connected() const;

  /// Label of a face: vertex labels concatenated ("abc"). When some label is
  /// longer than one character the labels are joined with ','.
  std::string face_label(FaceId id) const;
  std::string simplex_label(std::span<const VertexId> vertices) const;

  std::vector<std::vector<std::string>> facet_labels() const;

 private:
  void index_faces();

  std::vector<std::string> labels_;
  std::vector<Simplex> faces_;
  std::vector<FaceId> facets_;
  std::vector<bool> is_facet_;
  std::vector<FaceId> dim_offsets_;
  bool single_char_labels_ = true;
  // Exactly one of the two indices is populated: the mask index when every
  // vertex id fits in 64 bits.
  std::unordered_map<std::uint64_t, FaceId> by_mask_;
  std::unordered_map<Simplex, FaceId, SimplexHash> by_vertices_;
};

/// Shape of a complex as far as the Morse-complex classification cares.
struct Classification {
  enum class Kind { Cycle, BoundarySimplex, Both, Other };

  Kind kind = Kind::Other;
  /// Length of the cycle for Cycle and Both.
  int cycle_n = 0;
  /// n of the boundary of the n-simplex for BoundarySimplex and Both.
  int boundary_n = 0;

  bool is_cycle() const { return kind == Kind::Cycle || kind == Kind::Both; }
  bool is_boundary() const {
    return kind == Kind::BoundarySimplex || kind == Kind::Both;
  }
  std::string to_string() const;
  bool operator==(const Classification&) const = default;
};

SimplicialComplex generate_cycle(int n);
SimplicialComplex generate_boundary_simplex(int n);
SimplicialComplex generate_path(int n);
SimplicialComplex generate_simplex(int n);

/// Throws PreconditionFailed when K is disconnected.
Classification classify(const SimplicialComplex& complex);

/// Degree of each vertex in the 1-skeleton.
std::vector<std::size_t> vertex_degrees(const SimplicialComplex& complex);

}  // namespace morseaut
