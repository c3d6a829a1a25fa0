#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "binact/group.hpp"
#include "binact/permutation.hpp"

namespace binact {

/// Sorted set of carrier indices.
using PointSet = std::vector<Index>;

/// A finite binary G-space: a carrier {0..m-1} with mu[g][x][y].
///
/// Construction checks only shape and range; run validate_action to check the
/// identity and composition laws.
class BinaryGSpace {
 public:
  BinaryGSpace(FiniteGroup group, std::size_t carrier_size, std::vector<Index> mu,
               std::vector<std::string> labels = {});

  /// Tabulates `rule(g, x, y)` over the whole domain.
  static BinaryGSpace tabulate(FiniteGroup group, std::size_t carrier_size,
                               const std::function<Index(Index, Index, Index)>& rule,
                               std::vector<std::string> labels = {});

  const FiniteGroup& group() const noexcept { return group_; }
  std::size_t group_order() const noexcept { return group_.order(); }
  std::size_t carrier_size() const noexcept { return carrier_; }

  /// g(x, y), unchecked.
  Index operator()(Index g, Index x, Index y) const {
    return mu_[(static_cast<std::size_t>(g) * carrier_ + x) * carrier_ + y];
  }
  /// g(x, y); throws ShapeError on out-of-range indices.
  Index apply(Index g, Index x, Index y) const;

  /// Flat table in [g][x][y] order.
  const std::vector<Index>& mu() const noexcept { return mu_; }

  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::string label(Index x) const;
  /// Resolves a carrier label, falling back to a decimal index.
  std::optional<Index> find_point(const std::string& label_or_index) const;

  /// Same group and table; labels are ignored.
  friend bool operator==(const BinaryGSpace& a, const BinaryGSpace& b) {
    return a.carrier_ == b.carrier_ && a.mu_ == b.mu_ && a.group_ == b.group_;
  }

 private:
  FiniteGroup group_;
  std::size_t carrier_;
  std::vector<Index> mu_;
  std::vector<std::string> labels_;
};

struct ActionCertificate {
  std::size_t identity_checks = 0;
  std::size_t composition_checks = 0;
};

/// Checks e(x,y) = y, then gh(x,y) = g(x,h(x,y)), in lexicographic order.
/// Throws AxiomViolation with the first failing tuple.
ActionCertificate validate_action(const BinaryGSpace& space);

/// K(A, A) = { g(a1, a2) : g in K, a1, a2 in A }.
PointSet image_set(const BinaryGSpace& space, std::span<const Index> elements,
                   std::span<const Index> points);
/// G(A, A).
PointSet image_set(const BinaryGSpace& space, std::span<const Index> points);

/// Provenance of a point in an orbit chain: point = g(first, second) with
/// first and second in an earlier chain level. `level` is the 1-based chain
/// level where the point first appears. The base point is witnessed by
/// (e, x, x) at level 1.
struct Witness {
  Index g = 0;
  Index first = 0;
  Index second = 0;
  std::size_t level = 0;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct OrbitReport {
  Index base = 0;
  /// G^1(x), G^2(x), ... strictly increasing; the last entry is the orbit [x].
  std::vector<PointSet> chain;
  /// Indexed by carrier point; empty for points outside the orbit.
  std::vector<std::optional<Witness>> witnesses;
  /// Least n with G^n(x) = X; none when [x] != X.
  std::optional<std::size_t> step;
  /// Evaluations whose result fell outside the carrier (windowed spaces only).
  std::size_t escapes = 0;

  const PointSet& orbit() const { return chain.back(); }
  bool contains(Index p) const { return p < witnesses.size() && witnesses[p].has_value(); }
};

namespace detail {

/// Monotone closure A_n = G(A_{n-1}, A_{n-1}) from A_0 = {base}. `apply`
/// returns std::nullopt when a result leaves the carrier. Each round only
/// evaluates pairs touching the previous round's new points, in lexicographic
/// (g, a1, a2) order, so the first triple to reach a point is the
/// lexicographically smallest one available in that round.
template <class Apply>
OrbitReport closure_chain(std::size_t group_order, std::size_t carrier, Index base,
                          Apply&& apply) {
  OrbitReport report;
  report.base = base;
  report.witnesses.assign(carrier, std::nullopt);
  std::vector<std::size_t> level(carrier, 0);  // 0 = not reached
  level[base] = 1;
  report.witnesses[base] = Witness{FiniteGroup::identity, base, base, 1};
  PointSet current{base};
  for (std::size_t round = 1;; ++round) {
    PointSet discovered;
    for (Index g = 0; g < group_order; ++g) {
      for (Index a1 : current) {
        const bool fresh1 = round == 1 || level[a1] == round - 1;
        for (Index a2 : current) {
          if (!fresh1 && level[a2] != round - 1) continue;
          const std::optional<Index> r = apply(g, a1, a2);
          if (!r) {
            ++report.escapes;
            continue;
          }
          if (level[*r] == 0) {
            level[*r] = round;
            report.witnesses[*r] = Witness{g, a1, a2, round};
            discovered.push_back(*r);
          }
        }
      }
    }
    if (round > 1 && discovered.empty()) break;
    current.insert(current.end(), discovered.begin(), discovered.end());
    std::sort(current.begin(), current.end());
    report.chain.push_back(current);
    if (round == 1 && discovered.empty()) break;
  }
  if (report.orbit().size() == carrier) report.step = report.chain.size();
  return report;
}

}  // namespace detail

OrbitReport orbit(const BinaryGSpace& space, Index x);

std::optional<std::size_t> stabilization_step(const BinaryGSpace& space, Index x);

/// G(x, x) = X at every x.
bool is_transitive(const BinaryGSpace& space);
/// First x with G(x, x) != X.
std::optional<Index> transitivity_failure(const BinaryGSpace& space);

struct Homogeneity {
  bool homogeneous = false;
  /// Points whose orbit is the whole carrier.
  PointSet stabilization_points;
};
Homogeneity is_homogeneous(const BinaryGSpace& space);

/// (g, h, x, x', x'') violating g(h(x,x'), h(x,x'')) = h(x, g(x',x'')).
using DistributivityCounterexample = std::array<Index, 5>;
std::optional<DistributivityCounterexample> distributivity_counterexample(
    const BinaryGSpace& space);
bool is_distributive(const BinaryGSpace& space);

/// { g : g(x, x) = x }.
Subgroup isotropy(const BinaryGSpace& space, Index x);
bool is_free(const BinaryGSpace& space);

/// phi_x(g) = g(x, .), a homomorphism from G into Sym(X).
std::vector<Permutation> slice_homomorphism(const BinaryGSpace& space, Index x);

/// One slice map y -> g(anchor, y).
struct SliceFactor {
  Index g = 0;
  Index anchor = 0;
};

/// A bijection of the carrier sending `source` to `target`, built by
/// replaying orbit witnesses. `factors` are applied first to last.
struct PointTranslation {
  Index source = 0;
  Index target = 0;
  std::vector<SliceFactor> factors;
  Permutation map;
};

/// Throws NotInOrbit if target is not in [source].
PointTranslation point_translation(const BinaryGSpace& space, Index source, Index target);
PointTranslation point_translation(const BinaryGSpace& space, const OrbitReport& report,
                                   Index target);

/// Evaluates the factor chain of a translation from scratch.
Permutation evaluate_factors(const BinaryGSpace& space, std::span<const SliceFactor> factors);

}  // namespace binact
