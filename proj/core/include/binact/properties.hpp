#pragma once

#include <cstddef>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "binact/action.hpp"

namespace binact {

/// One refuted instance of a structural property.
struct Violation {
  std::string property;
  std::string space_id;
  std::string detail;
};

/// Counts of checks run per property plus every violation found.
struct PropertyTally {
  std::map<std::string, std::size_t> checks;
  std::vector<Violation> violations;

  bool clean() const noexcept { return violations.empty(); }
  void merge(const PropertyTally& other);
};

/// Runs the implication suite on one space:
///   chain_monotone, witness_sound, slice_homomorphism,
///   distributive_orbit_partition   (distributive => orbits partition, [x] = G(x,x)),
///   homogeneous_distributive_transitive (=> transitive, step 1 everywhere),
///   transitive_homogeneous         (=> homogeneous, step 1 everywhere),
///   biequimorphism_preserves_steps (checked on a random relabeling drawn from rng),
///   classification                 (transitive + distributive spaces classify).
void check_implications(const BinaryGSpace& space, std::mt19937_64& rng, PropertyTally& tally);

/// For every stabilization point x0 and every x* in [x0], point_translation
/// yields a bijection sending x0 to x*.
void check_translations(const BinaryGSpace& space, PropertyTally& tally);

/// Y with mu_Y[g][s(x)][s(y)] = s(mu_X[g][x][y]); s is then a biequimorphism X -> Y.
BinaryGSpace relabel(const BinaryGSpace& space, const Permutation& sigma);

}  // namespace binact
