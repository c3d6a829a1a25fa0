#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "binact/action.hpp"
#include "binact/group.hpp"

namespace binact {

/// (g, x, x') with f(g(x, x')) != g(f(x), f(x')).
using EquivarianceCounterexample = std::array<Index, 3>;

/// Exhaustive check of f(g(x,x')) = g(f(x), f(x')). Throws ShapeError when the
/// spaces have different groups or `map` has the wrong length or range.
std::optional<EquivarianceCounterexample> equivariance_counterexample(
    const BinaryGSpace& source, const BinaryGSpace& target, std::span<const Index> map);

struct BiMapCertificate {
  bool checked = false;
  bool biequivariant = false;
  std::optional<EquivarianceCounterexample> counterexample;
  /// Set only for bijective maps: result of checking the inverse directly.
  std::optional<bool> inverse_biequivariant;

  bool is_biequimorphism() const { return biequivariant && inverse_biequivariant.value_or(false); }
};

/// A carrier map between two binary G-spaces over the same group, with its
/// biequivariance certificate filled in at construction.
class BiMap {
 public:
  BiMap(BinaryGSpace source, BinaryGSpace target, std::vector<Index> map);

  const BinaryGSpace& source() const noexcept { return source_; }
  const BinaryGSpace& target() const noexcept { return target_; }
  const std::vector<Index>& map() const noexcept { return map_; }
  Index operator()(Index x) const { return map_[x]; }
  const BiMapCertificate& certificate() const noexcept { return certificate_; }

  bool is_biequivariant() const noexcept { return certificate_.biequivariant; }
  bool is_bijective() const;
  bool is_biequimorphism() const { return certificate_.is_biequimorphism(); }

  /// Throws ShapeError unless bijective.
  BiMap inverse() const;
  /// (this ∘ inner): inner.source -> this.target.
  BiMap after(const BiMap& inner) const;

 private:
  BinaryGSpace source_;
  BinaryGSpace target_;
  std::vector<Index> map_;
  BiMapCertificate certificate_;
};

BiMap identity_map(const BinaryGSpace& space);

struct SearchBudget {
  /// Cap on branch assignments explored.
  std::size_t max_candidates = 10'000'000;
};

/// All biequivariant maps X -> Y in lexicographic order of their image
/// vectors. Backtracks over the smallest unassigned point and propagates
/// f(g(x,x')) = g(f(x),f(x')) after every assignment. Throws BudgetExceeded.
std::vector<BiMap> find_biequivariant_maps(const BinaryGSpace& source,
                                           const BinaryGSpace& target,
                                           SearchBudget budget = {});

struct Classification {
  Index base = 0;
  /// The isotropy subgroup G_(x,x) at the base point; always normal here.
  Subgroup subgroup;
  /// phi: coset_action(G, H) -> X, phi(gH) = g(x, x).
  BiMap map;
};

/// Constructive classification of a transitive distributive space as a coset
/// space. Throws NotTransitive / NotDistributive with the failing predicate's
/// counterexample, and RefutedProposition if any step of the construction
/// does not verify.
Classification classify_transitive_distributive(const BinaryGSpace& space, Index base = 0);

/// The biequimorphism X -> standard_distributive_action(G) for a free
/// transitive distributive X. Throws NotFree and the classify errors.
BiMap verify_theorem2(const BinaryGSpace& space, Index base = 0);

struct Prop2Result {
  bool holds = false;
  bool contained = false;
  std::size_t map_count = 0;
  /// First map found, when any.
  std::optional<std::vector<Index>> example;
};

/// Checks (some biequivariant G|H -> G|K exists) == (H <= K) by exhaustive
/// search. Throws RefutedProposition when the two sides disagree.
Prop2Result verify_prop2(const FiniteGroup& group, const Subgroup& h, const Subgroup& k,
                         SearchBudget budget = {});

}  // namespace binact
