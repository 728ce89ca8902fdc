#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "morseaut/permutation.hpp"

namespace morseaut {

/// Finite permutation group stored by its full, sorted element list.
class PermutationGroup {
 public:
  /// Sorts and deduplicates. Does not check the group axioms; see
  /// satisfies_group_axioms().
  static PermutationGroup from_elements(std::size_t degree, std::vector<Permutation> elements);

  /// Closure of the generators under composition. Throws BudgetExceeded when
  /// the group has more than `budget` elements.
  static PermutationGroup generated_by(std::size_t degree,
                                       const std::vector<Permutation>& generators,
                                       std::size_t budget = 10'000'000);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }

  bool contains(const Permutation& p) const;
  std::optional<std::size_t> index_of(const Permutation& p) const;

  /// A generating set picked greedily in element order.
  std::vector<Permutation> generators() const;

  /// Identity present, closed under composition and inverses.
  bool satisfies_group_axioms() const;
  bool is_subgroup_of(const PermutationGroup& other) const;

 private:
  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;
};

/// Lagrange sanity check: whether `order` divides degree!.
bool order_divides_factorial(std::size_t order, std::size_t degree);

/// `images[i]` is the image of domain.elements()[i]. Checks that every image
/// lies in the codomain and that map(fg) = map(f) map(g) for all pairs.
/// Throws InvalidInput when the map is not total on the domain.
bool is_homomorphism(std::span<const Permutation> images, const PermutationGroup& domain,
                     const PermutationGroup& codomain);
bool is_injective(std::span<const Permutation> images);

/// Setwise orbit of a block of points, as sorted blocks in sorted order.
std::vector<std::vector<Point>> orbit(const PermutationGroup& group, std::span<const Point> block);
/// Order of the setwise stabilizer of the block.
std::size_t stabilizer_order(const PermutationGroup& group, std::span<const Point> block);

}  // namespace morseaut
