#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace morseaut {

using Point = std::uint32_t;

/// Bijection of {0, ..., degree-1}; images()[i] is the image of i.
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidInput unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  const std::vector<Point>& images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;

  /// Image of a point set, sorted.
  std::vector<Point> apply_to_set(std::span<const Point> points) const;

  /// Image sequence, e.g. "(2 0 1)".
  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<Point> images_;
};

/// Composition: (f * g)(x) = f(g(x)).
Permutation operator*(const Permutation& f, const Permutation& g);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace morseaut
