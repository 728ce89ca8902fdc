#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "morseaut/complex.hpp"
#include "morseaut/group.hpp"
#include "morseaut/hasse.hpp"
#include "morseaut/morse.hpp"
#include "morseaut/permutation.hpp"
#include "morseaut/search.hpp"

namespace morseaut {

/// A complex together with its Hasse diagram, primitive list and, when it
/// fits the budget, its Morse complex. Primitive i is Hasse edge i, so the
/// edge/primitive correspondence is the identity on indices.
class MorseContext {
 public:
  /// Builds M(K) when `morse_budget` is given and the enumeration fits.
  explicit MorseContext(SimplicialComplex complex,
                        std::optional<std::size_t> morse_budget = std::nullopt);

  const SimplicialComplex& complex() const noexcept { return complex_; }
  const HasseDiagram& hasse() const noexcept { return hasse_; }
  const Graph& hasse_graph() const noexcept { return hasse_graph_; }
  const std::vector<PrimitiveVector>& primitives() const noexcept { return primitives_; }
  std::size_t primitive_count() const noexcept { return primitives_.size(); }

  /// The primitive (face, coface), if the pair is a Hasse edge.
  std::optional<PrimitiveId> primitive_id(FaceId face, FaceId coface) const;

  const std::optional<SimplicialComplex>& morse() const noexcept { return morse_; }
  /// Set when the Morse complex was requested but did not fit.
  const std::optional<std::string>& morse_error() const noexcept { return morse_error_; }

  /// Face id of the image of a face under a vertex map.
  std::optional<FaceId> map_face(const Permutation& f, FaceId face) const;

 private:
  SimplicialComplex complex_;
  HasseDiagram hasse_;
  Graph hasse_graph_;
  std::vector<PrimitiveVector> primitives_;
  std::optional<SimplicialComplex> morse_;
  std::optional<std::string> morse_error_;
};

/// Whether a vertex permutation of M(K) maps faces of M(K) to faces.
/// Requires the Morse complex to be built.
bool preserves_morse_faces(const MorseContext& ctx, const Permutation& g);

/// f_* : (sigma, tau) -> (f(sigma), f(tau)). Throws NotAnAutomorphism when f is
/// not an automorphism of K; throws Error if the image were not a primitive or
/// (with M built) not simplicial, which would contradict the construction.
Permutation induced_morse_automorphism(const MorseContext& ctx, const Permutation& f);

struct PhiImage {
  PermutationGroup group;
  /// images[i] = induced map of aut_k.elements()[i].
  std::vector<Permutation> images;
  bool homomorphism = false;
  bool injective = false;
};

/// {f_* : f in Aut(K)} with the homomorphism and injectivity checks.
PhiImage phi_image(const MorseContext& ctx, const PermutationGroup& aut_k);

/// m: Hasse edge i <-> primitive i, listed as the Hasse edges in order.
std::vector<HasseEdge> m_correspondence(const MorseContext& ctx);

/// m o g o m^-1 for a Hasse automorphism g. Throws NotAnAutomorphism when g does
/// not preserve the Hasse diagram.
Permutation transport(const MorseContext& ctx, const Permutation& g);

/// Complement of sigma in {0..n}. Throws InvalidInput for the empty or the full
/// set, or ids above n.
Simplex reflection(int n, std::span<const VertexId> sigma);

/// Reflection on the faces of the boundary of the n-simplex is an involutive,
/// inclusion-reversing bijection.
bool reflection_is_cosimplicial_involution(const SimplicialComplex& boundary);

/// pi_* : (sigma, tau) -> (pi(tau), pi(sigma)) on a complex classified as the
/// boundary of a simplex. Throws PreconditionFailed otherwise.
Permutation reflection_induced(const MorseContext& ctx);
/// Same on generate_boundary_simplex(n).
Permutation reflection_induced(int n);

struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
  double elapsed_ms = 0.0;
  /// Empty, or "external-theorem-consistency" for empirical evidence of a
  /// cited result.
  std::string basis;
};

struct VerificationReport {
  Classification classification;
  bool via_hasse = false;
  /// Why M(K) was not used directly, when via_hasse is set.
  std::string via_hasse_reason;
  /// Set when some check could not finish within its budget.
  bool incomplete = false;
  std::optional<std::size_t> aut_complex_order;
  std::optional<std::size_t> aut_hasse_order;
  std::optional<std::size_t> aut_morse_order;
  std::optional<std::size_t> phi_image_order;
  std::optional<std::size_t> morse_face_count;
  std::vector<Check> checks;

  bool overall() const;
  const Check* find(const std::string& name) const;

  std::string to_json(bool timings = true) const;
  /// Human-readable table; never includes timings so it is reproducible.
  std::string to_table() const;
};

struct VerifyOptions {
  std::size_t gvf_budget = kDefaultGvfBudget;
  std::size_t group_budget = kDefaultGroupBudget;
  /// Skip the Morse complex and derive Aut(M(K)) from Aut(H(K)).
  bool force_via_hasse = false;
  /// Random matchings checked against the V-path oracle; 0 disables.
  std::size_t oracle_samples = 0;
  std::uint64_t seed = 1;
};

/// Runs every check that applies to the classification of K.
/// Throws PreconditionFailed when K is disconnected.
VerificationReport verify_main_theorem(const SimplicialComplex& complex,
                                       const VerifyOptions& options = {});

}  // namespace morseaut
