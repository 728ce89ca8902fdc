#include "morseaut/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "morseaut/errors.hpp"

namespace morseaut {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || hit[p]) throw InvalidInput("not a permutation");
    hit[p] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

std::vector<Point> Permutation::apply_to_set(std::span<const Point> points) const {
  std::vector<Point> out;
  out.reserve(points.size());
  for (Point x : points) out.push_back(images_.at(x));
  std::sort(out.begin(), out.end());
  return out;
}

std::string Permutation::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(images_[i]);
  }
  return out + ")";
}

Permutation operator*(const Permutation& f, const Permutation& g) {
  if (f.degree() != g.degree()) throw InvalidInput("composing permutations of different degree");
  std::vector<Point> images(g.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = f(g(static_cast<Point>(i)));
  return Permutation(std::move(images));
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 0x84222325cbf29ce4ull;
  for (Point x : p.images()) h = (h ^ x) * 0x100000001b3ull;
  return h;
}

}  // namespace morseaut
