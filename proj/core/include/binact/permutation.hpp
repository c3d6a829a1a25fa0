#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "binact/errors.hpp"

namespace binact {

/// A bijection of {0, ..., n-1}, stored as its image vector.
class Permutation {
 public:
  Permutation() = default;
  /// Throws ShapeError unless `images` is a permutation of 0..n-1.
  explicit Permutation(std::vector<Index> images);

  static Permutation identity(std::size_t n);
  /// Builds from an image vector without validation; use only when the
  /// caller has just established bijectivity.
  static Permutation unchecked(std::vector<Index> images);
  static bool is_bijection(std::span<const Index> images);

  std::size_t size() const noexcept { return images_.size(); }
  Index operator()(Index i) const { return images_[i]; }
  const std::vector<Index>& images() const noexcept { return images_; }

  /// (this ∘ inner)(i) = this(inner(i)).
  Permutation after(const Permutation& inner) const;
  Permutation inverse() const;
  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  std::string to_string() const;

 private:
  std::vector<Index> images_;
};

/// All permutations of n points in lexicographic order of image vectors.
std::vector<Permutation> all_permutations(std::size_t n);

}  // namespace binact
