#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <random>
#include <span>
#include <vector>

namespace binact {

using Vector = std::vector<double>;

/// The additive reals acting on R^n through the hyperspherical cascade
///
///   z_k = g sin x_1 ... sin x_{k-1} cos x_k + y_k    (k < n)
///   z_n = g sin x_1 ... sin x_{n-1}          + y_n
///
/// The coefficient of g depends on x only, which is why the action laws hold.
class EuclideanAction {
 public:
  explicit EuclideanAction(std::size_t dim, double tol_axiom = 1e-9, double tol_reach = 1e-6);

  std::size_t dim() const noexcept { return dim_; }
  double tol_axiom() const noexcept { return tol_axiom_; }
  double tol_reach() const noexcept { return tol_reach_; }

  /// g(x, y). Throws DimensionMismatch unless both vectors have length dim.
  Vector apply(double g, std::span<const double> x, std::span<const double> y) const;
  /// The unit "direction" d(x) with g(x, y) = g d(x) + y.
  Vector direction(std::span<const double> x) const;
  Vector origin() const { return Vector(dim_, 0.0); }

 private:
  std::size_t dim_;
  double tol_axiom_;
  double tol_reach_;
};

struct AxiomResiduals {
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  double box = 0;
  double max_identity = 0;
  double max_composition = 0;
  bool pass = false;
};

/// Max-norm residuals of e(x,y) = y and (g+h)(x,y) = g(x, h(x,y)) over
/// samples drawn uniformly from [-box, box]. Sample i uses its own generator
/// seeded from (seed, i), so the result is independent of evaluation order.
AxiomResiduals check_axioms_sampled(const EuclideanAction& action, std::size_t samples,
                                    std::uint64_t seed, double box = 10.0);

struct Hyperspherical {
  double radius = 0;
  /// k - 1 angles.
  Vector angles;
};

/// Hyperspherical coordinates of (z_1..z_k). Angles 1..k-2 lie in [0, pi]
/// (arccos of the coordinate over the norm of the remaining tail); the last
/// angle lies in (-pi, pi] (atan2). Zero radius or zero tail gives zero
/// angles. For k = 1 there are no angles and the radius is the signed z_1.
/// Throws TailNotZero when |z_j| > tol_reach for some j > k.
Hyperspherical hyperspherical_inverse(const EuclideanAction& action, std::span<const double> z,
                                      std::size_t k);

/// Base (the origin) or g(first, second).
class ReachTerm {
 public:
  static ReachTerm base();
  static ReachTerm node(double g, ReachTerm first, ReachTerm second);

  bool is_base() const noexcept { return node_ == nullptr; }
  double g() const;
  const ReachTerm& first() const;
  const ReachTerm& second() const;
  std::size_t depth() const noexcept;
  Vector evaluate(const EuclideanAction& action) const;

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

/// Builds a term evaluating to z: with k the last non-zero coordinate, invert
/// to (g, angles), reach the angle point (x_1..x_{k-1}, 0..0) recursively and
/// return g(angle point, origin). Depth is at most dim.
ReachTerm reach(const EuclideanAction& action, std::span<const double> z);

/// A random term of depth exactly `depth` with g drawn from [-box, box].
ReachTerm random_term(std::size_t depth, std::mt19937_64& rng, double box = 10.0);

struct SubspaceWitness {
  std::size_t k = 0;
  std::size_t inclusion_samples = 0;
  std::size_t reach_samples = 0;
  /// Largest |z_j|, j > k, over evaluated depth <= k terms.
  double max_tail = 0;
  bool inclusion_pass = false;
  double max_reach_error = 0;
  std::size_t max_depth = 0;
  bool surjectivity_pass = false;
};

/// Witnesses G^k(origin) = R^k x {0}: random terms of depth <= k stay in R^k
/// (tail below 1e-12) and random targets in R^k are reached at depth <= k
/// within tol_reach.
SubspaceWitness subspace_witness(const EuclideanAction& action, std::size_t k,
                                 std::uint64_t seed, std::size_t inclusion_samples = 1000,
                                 std::size_t reach_samples = 100, double box = 10.0);

/// Per-sample generator derived from (seed, stream).
std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t stream);

}  // namespace binact
