#include "binact/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace binact {

Permutation::Permutation(std::vector<Index> images) : images_(std::move(images)) {
  if (!is_bijection(images_)) {
    throw ShapeError("not a permutation: " + to_string());
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Index> images(n);
  std::iota(images.begin(), images.end(), Index{0});
  return unchecked(std::move(images));
}

Permutation Permutation::unchecked(std::vector<Index> images) {
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

bool Permutation::is_bijection(std::span<const Index> images) {
  std::vector<bool> seen(images.size(), false);
  for (Index v : images) {
    if (v >= images.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Permutation Permutation::after(const Permutation& inner) const {
  if (inner.size() != size()) throw ShapeError("composing permutations of different sizes");
  std::vector<Index> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = images_[inner.images_[i]];
  return unchecked(std::move(out));
}

Permutation Permutation::inverse() const {
  std::vector<Index> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[images_[i]] = static_cast<Index>(i);
  return unchecked(std::move(out));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::string Permutation::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(images_[i]);
  }
  return s + "]";
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<Index> images(n);
  std::iota(images.begin(), images.end(), Index{0});
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::unchecked(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace binact
