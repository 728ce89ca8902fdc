#pragma once

#include <cstddef>
#include <optional>

#include "morseaut/complex.hpp"
#include "morseaut/graph.hpp"
#include "morseaut/group.hpp"
#include "morseaut/permutation.hpp"

namespace morseaut {

inline constexpr std::size_t kDefaultGroupBudget = 10'000'000;

/// All color- and adjacency-preserving node bijections of g.
///
/// Individualization-refinement backtracking: colors are refined by iterated
/// neighbour-color multisets (1-WL), the search branches on the lowest-id node
/// of the smallest non-singleton class, and every leaf is verified against the
/// graph before it is accepted. Refinement only prunes.
PermutationGroup graph_automorphisms(const Graph& g, std::size_t budget = kDefaultGroupBudget);

/// An explicit isomorphism a -> b, or nullopt when none exists. The search is
/// exhaustive, so nullopt is a certificate at the sizes this library targets.
std::optional<Permutation> graph_isomorphism(const Graph& a, const Graph& b);

/// Vertex permutations mapping the facet set onto itself. Runs the graph search
/// on the vertex/facet incidence graph and keeps the vertex part.
PermutationGroup complex_automorphisms(const SimplicialComplex& complex,
                                       std::size_t budget = kDefaultGroupBudget);

/// Vertex/facet incidence graph: nodes 0..|V|-1 are vertices (color 0), the
/// rest are facets colored 1 + dimension.
Graph incidence_graph(const SimplicialComplex& complex);

/// Whether a vertex permutation maps every facet of K to a facet of K.
bool is_complex_automorphism(const SimplicialComplex& complex, const Permutation& f);

/// Whether a node permutation preserves adjacency and colors.
bool is_graph_automorphism(const Graph& g, const Permutation& f);

}  // namespace morseaut
