#include "morseaut/group.hpp"

#include <algorithm>
#include <unordered_set>

#include "morseaut/errors.hpp"

namespace morseaut {

PermutationGroup PermutationGroup::from_elements(std::size_t degree,
                                                 std::vector<Permutation> elements) {
  for (const Permutation& p : elements)
    if (p.degree() != degree) throw InvalidInput("group element has the wrong degree");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  PermutationGroup g;
  g.degree_ = degree;
  g.elements_ = std::move(elements);
  return g;
}

PermutationGroup PermutationGroup::generated_by(std::size_t degree,
                                                const std::vector<Permutation>& generators,
                                                std::size_t budget) {
  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> frontier{Permutation::identity(degree)};
  seen.insert(frontier.front());
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    for (const Permutation& s : generators) {
      Permutation next = s * frontier[i];
      if (seen.insert(next).second) {
        if (seen.size() > budget)
          throw BudgetExceeded("group closure", budget, seen.size());
        frontier.push_back(std::move(next));
      }
    }
  }
  return from_elements(degree, std::move(frontier));
}

bool PermutationGroup::contains(const Permutation& p) const { return index_of(p).has_value(); }

std::optional<std::size_t> PermutationGroup::index_of(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

std::vector<Permutation> PermutationGroup::generators() const {
  std::vector<Permutation> gens;
  std::unordered_set<Permutation, PermutationHash> span{Permutation::identity(degree_)};
  std::vector<Permutation> members{Permutation::identity(degree_)};
  for (const Permutation& p : elements_) {
    if (span.contains(p)) continue;
    gens.push_back(p);
    // Re-close: multiply everything reached so far by every generator.
    for (std::size_t i = 0; i < members.size(); ++i)
      for (const Permutation& s : gens) {
        Permutation next = s * members[i];
        if (span.insert(next).second) members.push_back(std::move(next));
      }
  }
  return gens;
}

bool PermutationGroup::satisfies_group_axioms() const {
  if (elements_.empty() || !contains(Permutation::identity(degree_))) return false;
  for (const Permutation& f : elements_) {
    if (!contains(f.inverse())) return false;
    for (const Permutation& g : elements_)
      if (!contains(f * g)) return false;
  }
  return true;
}

bool PermutationGroup::is_subgroup_of(const PermutationGroup& other) const {
  if (degree_ != other.degree_) return false;
  return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(),
                       elements_.end());
}

bool order_divides_factorial(std::size_t order, std::size_t degree) {
  if (order == 0) return false;
  std::size_t rest = order;
  for (std::size_t p = 2; rest > 1; ++p) {
    if (p * p > rest) p = rest;  // what is left is prime
    std::size_t need = 0;
    for (; rest % p == 0; rest /= p) ++need;
    if (need == 0) continue;
    // Legendre: exponent of p in degree!.
    std::size_t have = 0;
    for (std::size_t q = p;; q *= p) {
      have += degree / q;
      if (q > degree / p) break;
    }
    if (have < need) return false;
  }
  return true;
}

bool is_homomorphism(std::span<const Permutation> images, const PermutationGroup& domain,
                     const PermutationGroup& codomain) {
  if (images.size() != domain.order())
    throw InvalidInput("map is not defined on every element of the domain");
  for (const Permutation& img : images)
    if (!codomain.contains(img)) return false;
  const auto& el = domain.elements();
  for (std::size_t i = 0; i < el.size(); ++i)
    for (std::size_t j = 0; j < el.size(); ++j) {
      auto k = domain.index_of(el[i] * el[j]);
      if (!k) return false;  // domain is not closed
      if (images[*k] != images[i] * images[j]) return false;
    }
  return true;
}

bool is_injective(std::span<const Permutation> images) {
  std::unordered_set<Permutation, PermutationHash> distinct(images.begin(), images.end());
  return distinct.size() == images.size();
}

std::vector<std::vector<Point>> orbit(const PermutationGroup& group,
                                      std::span<const Point> block) {
  std::vector<std::vector<Point>> out;
  for (const Permutation& g : group.elements()) out.push_back(g.apply_to_set(block));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t stabilizer_order(const PermutationGroup& group, std::span<const Point> block) {
  std::vector<Point> sorted(block.begin(), block.end());
  std::sort(sorted.begin(), sorted.end());
  std::size_t count = 0;
  for (const Permutation& g : group.elements())
    if (g.apply_to_set(block) == sorted) ++count;
  return count;
}

}  // namespace morseaut
