#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "binact/action.hpp"
#include "binact/group.hpp"
#include "binact/permutation.hpp"

namespace binact {

struct EnumerationLimits {
  std::size_t max_carrier = 5;
  std::size_t max_group_order = 12;
  /// Cap on generator-image assignments, and separately on emitted spaces.
  std::size_t max_candidates = 10'000'000;
};

/// A homomorphism G -> Sym(m), stored as the image of every element.
using Homomorphism = std::vector<Permutation>;

/// Greedy generating set: scan elements in index order, keep those outside
/// the subgroup generated so far.
std::vector<Index> generating_set(const FiniteGroup& group);

/// Every homomorphism G -> Sym(m). Generator images range over Sym(m) in
/// lexicographic order (first generator slowest); each assignment is extended
/// along the Cayley graph and rejected on the first inconsistency.
std::vector<Homomorphism> enumerate_homomorphisms(const FiniteGroup& group, std::size_t m,
                                                  EnumerationLimits limits = {});

/// mu[g][x][y] = homs[choice[x]][g](y).
BinaryGSpace binary_action_from_tuple(const FiniteGroup& group,
                                      const std::vector<Homomorphism>& homs,
                                      std::span<const std::size_t> choice);

/// Calls `visit` once per binary action of G on m points, in lexicographic
/// order of the homomorphism tuple (point 0 slowest). Throws BudgetExceeded
/// before emitting anything when the tuple count exceeds the budget.
void for_each_binary_action(const FiniteGroup& group, std::size_t m,
                            const std::function<void(const BinaryGSpace&)>& visit,
                            EnumerationLimits limits = {});

std::vector<BinaryGSpace> enumerate_binary_actions(const FiniteGroup& group, std::size_t m,
                                                   EnumerationLimits limits = {});

/// Number of binary actions, (#homs)^m, or nullopt on overflow.
std::optional<std::size_t> count_binary_actions(std::size_t hom_count, std::size_t m);

/// A uniformly random binary action, drawing one homomorphism per point.
BinaryGSpace random_binary_action(const FiniteGroup& group,
                                  const std::vector<Homomorphism>& homs, std::size_t m,
                                  std::mt19937_64& rng);

/// FNV-1a over the action table entries as 32-bit little-endian words, in
/// [g][x][y] order, prefixed by group order and carrier size. 16 hex digits.
std::string space_hash(const BinaryGSpace& space);

struct CensusFlags {
  bool distributive = false;
  bool transitive = false;
  bool homogeneous = false;
  bool free = false;

  friend auto operator<=>(const CensusFlags&, const CensusFlags&) = default;
  std::string key() const;
};

struct CensusRow {
  std::string space_id;
  CensusFlags flags;
  std::vector<std::optional<std::size_t>> steps;
  /// Distinct orbits sorted by smallest member, or nullopt when two orbits
  /// overlap without coinciding.
  std::optional<std::vector<PointSet>> orbit_partition;
};

CensusRow census_row(const BinaryGSpace& space);

struct Census {
  std::vector<CensusRow> rows;
  /// Count per CensusFlags::key().
  std::map<std::string, std::size_t> summary;
};

Census census(const FiniteGroup& group, std::size_t m, EnumerationLimits limits = {});

}  // namespace binact
