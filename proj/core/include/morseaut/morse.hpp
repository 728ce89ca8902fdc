#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "morseaut/complex.hpp"
#include "morseaut/hasse.hpp"

namespace morseaut {

/// Index of a primitive vector in the canonical primitive list; this is also
/// the vertex id of the corresponding vertex of the Morse complex.
using PrimitiveId = std::uint32_t;

inline constexpr std::size_t kDefaultGvfBudget = 5'000'000;

/// A regular pair (face, coface) with face of codimension 1 in coface.
struct PrimitiveVector {
  FaceId face;
  FaceId coface;
  /// dim(face) + 1.
  int index;

  bool operator==(const PrimitiveVector& o) const {
    return face == o.face && coface == o.coface;
  }
  /// Canonical order: by coface, then face.
  std::strong_ordering operator<=>(const PrimitiveVector& o) const {
    if (auto c = coface <=> o.coface; c != 0) return c;
    return face <=> o.face;
  }
};

/// One primitive per Hasse edge, sorted by (coface, face).
std::vector<PrimitiveVector> primitives(const HasseDiagram& hasse);
std::vector<PrimitiveVector> primitives(const SimplicialComplex& complex);

/// "a|ab" style label.
std::string primitive_label(const SimplicialComplex& complex, const PrimitiveVector& v);

/// A set of regular pairs in which every simplex occurs at most once.
class DiscreteVectorField {
 public:
  DiscreteVectorField() = default;

  const std::vector<PrimitiveVector>& pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }
  bool contains(const PrimitiveVector& v) const;

  bool operator==(const DiscreteVectorField&) const = default;

 private:
  friend DiscreteVectorField make_dvf(const SimplicialComplex&, std::vector<PrimitiveVector>);
  std::vector<PrimitiveVector> pairs_;
};

/// Validates incidence and the matching condition. Throws MatchingViolation
/// naming the first simplex found in two pairs, InvalidInput for a pair that
/// is not a codimension-1 incidence.
DiscreteVectorField make_dvf(const SimplicialComplex& complex, std::vector<PrimitiveVector> pairs);

/// Builds a field from primitive ids of the canonical list.
DiscreteVectorField make_dvf(const SimplicialComplex& complex,
                             const std::vector<PrimitiveVector>& all_primitives,
                             std::span<const PrimitiveId> ids);

/// True iff V has no nontrivial closed V-path. Checked as directed cycle
/// detection per consecutive pair of dimensions: matched incidences point
/// up, unmatched ones point down.
bool is_gradient(const HasseDiagram& hasse, const DiscreteVectorField& field);

/// Alternating sequence alpha_0, beta_0, alpha_1, ..., alpha_k.
struct VPath {
  std::vector<FaceId> cells;
  bool closed = false;

  std::size_t pair_count() const noexcept { return cells.size() / 2; }
  bool nontrivial() const noexcept { return cells.size() > 1; }
};

/// Every V-path with at most max_pairs pairs, starting from every simplex
/// (so each simplex contributes its trivial path). A nontrivial closed path
/// exists iff one exists with at most |V| pairs, which is the default bound.
std::vector<VPath> enumerate_v_paths(const HasseDiagram& hasse,
                                     const DiscreteVectorField& field,
                                     std::optional<std::size_t> max_pairs = std::nullopt);

/// Visits every nonempty gradient vector field as a sorted list of primitive
/// ids, in lexicographic order. Throws BudgetExceeded once more than `budget`
/// fields have been produced.
void for_each_gradient_field(const HasseDiagram& hasse,
                             const std::vector<PrimitiveVector>& prims, std::size_t budget,
                             const std::function<void(std::span<const PrimitiveId>)>& visit);

std::vector<DiscreteVectorField> enumerate_gvfs(const SimplicialComplex& complex,
                                                std::size_t budget = kDefaultGvfBudget);

/// Vertices are the primitives (labelled "face|coface"); faces are the
/// gradient vector fields.
SimplicialComplex build_morse_complex(const SimplicialComplex& complex,
                                      std::size_t budget = kDefaultGvfBudget);

/// Regular pairs of `sub` are regular pairs of `field`.
bool is_subfield(const DiscreteVectorField& sub, const DiscreteVectorField& field);

/// Whether the given primitives are jointly a gradient vector field.
bool is_compatible(const HasseDiagram& hasse, const std::vector<PrimitiveVector>& prims,
                   std::span<const PrimitiveId> ids);

}  // namespace morseaut
