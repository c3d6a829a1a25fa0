#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "binact/errors.hpp"

namespace binact {

/// A finite group given by its Cayley table. Element 0 is the identity.
///
/// Instances are immutable; copies share the underlying table.
class FiniteGroup {
 public:
  static constexpr Index identity = 0;

  /// Validates range, identity at index 0, inverses (every row and column a
  /// permutation) and associativity, in that order. Throws NotAGroup naming
  /// the first failing triple.
  FiniteGroup(std::vector<std::vector<Index>> table,
              std::vector<std::string> names = {});

  std::size_t order() const noexcept { return data_->order; }
  Index mul(Index a, Index b) const { return data_->table[a * data_->order + b]; }
  Index inverse(Index a) const { return data_->inverse[a]; }
  /// Product of a sequence, left to right.
  Index product(std::initializer_list<Index> factors) const;
  /// Order of the element a (least k >= 1 with a^k = e).
  std::size_t element_order(Index a) const;

  bool has_names() const noexcept { return !data_->names.empty(); }
  /// Display name of an element; the decimal index when unnamed.
  std::string name(Index a) const;
  const std::vector<std::string>& names() const noexcept { return data_->names; }
  /// Resolves a display name, falling back to a decimal index.
  std::optional<Index> find(const std::string& name_or_index) const;

  std::vector<std::vector<Index>> table() const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b);

 private:
  struct Data {
    std::size_t order = 0;
    std::vector<Index> table;
    std::vector<Index> inverse;
    std::vector<std::string> names;
  };
  std::shared_ptr<const Data> data_;
};

FiniteGroup make_group(std::vector<std::vector<Index>> table,
                       std::vector<std::string> names = {});

/// Z_m under addition; element k is the residue k.
FiniteGroup cyclic_group(std::size_t m);

/// D_m = <r, s | r^m = s^2 = e, srs = r^-1>, order 2m. Element r^k s^f has
/// index k + f*m, so r is index 1 and s is index m.
FiniteGroup dihedral_group(std::size_t m);

/// S_n on {1..n}; elements in lexicographic order of their one-line form,
/// named in cycle notation.
FiniteGroup symmetric_group(std::size_t n);

/// G x H with (g, h) at index g*|H| + h.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

class Subgroup {
 public:
  /// Throws NotASubgroup unless `members` contains 0 and is closed under
  /// product and inverse.
  Subgroup(FiniteGroup parent, std::vector<Index> members);

  const FiniteGroup& parent() const noexcept { return parent_; }
  /// Sorted ascending.
  const std::vector<Index>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(Index g) const;
  bool is_trivial() const noexcept { return members_.size() == 1; }
  bool is_subset_of(const Subgroup& other) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.members_ == b.members_ && a.parent_ == b.parent_;
  }

 private:
  FiniteGroup parent_;
  std::vector<Index> members_;
};

/// Smallest subgroup containing `generators` (fixed-point closure).
Subgroup subgroup_closure(const FiniteGroup& group, std::span<const Index> generators);
Subgroup trivial_subgroup(const FiniteGroup& group);
Subgroup whole_group(const FiniteGroup& group);

/// True iff g H g^-1 = H for every g.
bool is_normal(const FiniteGroup& group, const Subgroup& subgroup);

/// Every subgroup, sorted by (size, members).
std::vector<Subgroup> all_subgroups(const FiniteGroup& group);
std::vector<Subgroup> normal_subgroups(const FiniteGroup& group);

/// Left cosets gH, ordered by smallest member.
class CosetSpace {
 public:
  CosetSpace(const FiniteGroup& group, const Subgroup& subgroup);

  const FiniteGroup& group() const noexcept { return subgroup_.parent(); }
  const Subgroup& subgroup() const noexcept { return subgroup_; }
  std::size_t size() const noexcept { return cosets_.size(); }
  const std::vector<std::vector<Index>>& cosets() const noexcept { return cosets_; }
  /// Index of the coset containing g.
  Index coset_of(Index g) const { return rep_[g]; }
  /// Smallest member of coset c.
  Index representative(Index c) const { return cosets_[c].front(); }
  std::string label(Index c) const;

 private:
  Subgroup subgroup_;
  std::vector<std::vector<Index>> cosets_;
  std::vector<Index> rep_;
};

CosetSpace coset_space(const FiniteGroup& group, const Subgroup& subgroup);

}  // namespace binact
