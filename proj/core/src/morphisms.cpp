#include "binact/morphisms.hpp"

#include <string>

#include "binact/gallery.hpp"

namespace binact {

namespace {

void check_compatible(const BinaryGSpace& source, const BinaryGSpace& target,
                      std::span<const Index> map) {
  if (!(source.group() == target.group())) {
    throw ShapeError("biequivariant maps need both spaces over the same group");
  }
  if (map.size() != source.carrier_size()) {
    throw ShapeError("map has " + std::to_string(map.size()) + " entries, source carrier has " +
                     std::to_string(source.carrier_size()));
  }
  for (Index v : map) {
    if (v >= target.carrier_size()) {
      throw ShapeError("map value " + std::to_string(v) + " outside target carrier");
    }
  }
}

std::string tuple_text(std::span<const Index> t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(t[i]);
  }
  return s + ")";
}

class MapSearch {
 public:
  MapSearch(const BinaryGSpace& source, const BinaryGSpace& target, SearchBudget budget)
      : source_(source), target_(target), budget_(budget) {}

  std::vector<std::vector<Index>> run() {
    std::vector<int> assignment(source_.carrier_size(), -1);
    branch(assignment);
    return std::move(found_);
  }

 private:
  static constexpr int unassigned = -1;

  // Assigns point := value and closes the assignment under the equivariance
  // constraints. Returns false on conflict.
  bool propagate(std::vector<int>& f, Index point, Index value) const {
    std::vector<Index> queue{point};
    f[point] = static_cast<int>(value);
    const auto n = static_cast<Index>(source_.group_order());
    const auto m = static_cast<Index>(source_.carrier_size());
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Index p = queue[head];
      for (Index q = 0; q < m; ++q) {
        if (f[q] == unassigned) continue;
        for (Index g = 0; g < n; ++g) {
          for (const auto& [a, b] : {std::pair{p, q}, std::pair{q, p}}) {
            const Index image = source_(g, a, b);
            const auto required =
                static_cast<int>(target_(g, static_cast<Index>(f[a]), static_cast<Index>(f[b])));
            if (f[image] == unassigned) {
              f[image] = required;
              queue.push_back(image);
            } else if (f[image] != required) {
              return false;
            }
          }
        }
      }
    }
    return true;
  }

  void branch(const std::vector<int>& f) {
    Index point = 0;
    while (point < f.size() && f[point] != unassigned) ++point;
    if (point == f.size()) {
      found_.emplace_back(f.begin(), f.end());
      return;
    }
    for (Index value = 0; value < target_.carrier_size(); ++value) {
      if (++candidates_ > budget_.max_candidates) {
        throw BudgetExceeded("map search exceeded " + std::to_string(budget_.max_candidates) +
                             " candidates");
      }
      std::vector<int> next = f;
      if (propagate(next, point, value)) branch(next);
    }
  }

  const BinaryGSpace& source_;
  const BinaryGSpace& target_;
  SearchBudget budget_;
  std::size_t candidates_ = 0;
  std::vector<std::vector<Index>> found_;
};

}  // namespace

std::optional<EquivarianceCounterexample> equivariance_counterexample(
    const BinaryGSpace& source, const BinaryGSpace& target, std::span<const Index> map) {
  check_compatible(source, target, map);
  for (Index g = 0; g < source.group_order(); ++g) {
    for (Index x = 0; x < source.carrier_size(); ++x) {
      for (Index y = 0; y < source.carrier_size(); ++y) {
        if (map[source(g, x, y)] != target(g, map[x], map[y])) {
          return EquivarianceCounterexample{g, x, y};
        }
      }
    }
  }
  return std::nullopt;
}

BiMap::BiMap(BinaryGSpace source, BinaryGSpace target, std::vector<Index> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  certificate_.counterexample = equivariance_counterexample(source_, target_, map_);
  certificate_.checked = true;
  certificate_.biequivariant = !certificate_.counterexample;
  if (is_bijective()) {
    std::vector<Index> inv(map_.size());
    for (Index x = 0; x < map_.size(); ++x) inv[map_[x]] = x;
    certificate_.inverse_biequivariant = !equivariance_counterexample(target_, source_, inv);
  }
}

bool BiMap::is_bijective() const {
  return source_.carrier_size() == target_.carrier_size() && Permutation::is_bijection(map_);
}

BiMap BiMap::inverse() const {
  if (!is_bijective()) throw ShapeError("inverse of a non-bijective map");
  std::vector<Index> inv(map_.size());
  for (Index x = 0; x < map_.size(); ++x) inv[map_[x]] = x;
  return BiMap(target_, source_, std::move(inv));
}

BiMap BiMap::after(const BiMap& inner) const {
  if (!(inner.target_ == source_)) throw ShapeError("composing maps with mismatched spaces");
  std::vector<Index> out(inner.map_.size());
  for (Index x = 0; x < out.size(); ++x) out[x] = map_[inner.map_[x]];
  return BiMap(inner.source_, target_, std::move(out));
}

BiMap identity_map(const BinaryGSpace& space) {
  return BiMap(space, space, Permutation::identity(space.carrier_size()).images());
}

std::vector<BiMap> find_biequivariant_maps(const BinaryGSpace& source,
                                           const BinaryGSpace& target, SearchBudget budget) {
  if (!(source.group() == target.group())) {
    throw ShapeError("biequivariant maps need both spaces over the same group");
  }
  std::vector<BiMap> out;
  for (auto& map : MapSearch(source, target, budget).run()) {
    out.emplace_back(source, target, std::move(map));
  }
  return out;
}

Classification classify_transitive_distributive(const BinaryGSpace& space, Index base) {
  if (base >= space.carrier_size()) throw ShapeError("base point out of range");
  if (const auto x = transitivity_failure(space)) {
    throw NotTransitive(*x, "space is not transitive: G(x,x) != X at x=" + space.label(*x));
  }
  if (const auto c = distributivity_counterexample(space)) {
    throw NotDistributive(*c, "space is not distributive at (g,h,x,x',x'')=" + tuple_text(*c));
  }
  const FiniteGroup& group = space.group();
  Subgroup stabilizer = isotropy(space, base);
  for (Index g = 0; g < group.order(); ++g) {
    for (Index h : stabilizer.members()) {
      const Index conj = group.product({g, h, group.inverse(g)});
      if (!stabilizer.contains(conj)) {
        throw RefutedProposition("isotropy subgroup not normal: g=" + std::to_string(g) +
                                 " h=" + std::to_string(h) + " g h g^-1=" +
                                 std::to_string(conj));
      }
    }
  }
  const BinaryGSpace cosets = coset_action(group, stabilizer);
  const CosetSpace layout(group, stabilizer);
  std::vector<Index> phi(layout.size());
  for (Index c = 0; c < phi.size(); ++c) phi[c] = space(layout.representative(c), base, base);
  for (Index g = 0; g < group.order(); ++g) {
    if (space(g, base, base) != phi[layout.coset_of(g)]) {
      throw RefutedProposition("phi(gH) = g(x,x) not well defined at g=" + std::to_string(g));
    }
  }
  BiMap map(cosets, space, std::move(phi));
  if (!map.is_biequimorphism()) {
    throw RefutedProposition("phi: G|H -> X is not a biequimorphism" +
                             (map.certificate().counterexample
                                  ? " (counterexample " + tuple_text(*map.certificate().counterexample) + ")"
                                  : std::string(" (not bijective or inverse fails)")));
  }
  return Classification{base, std::move(stabilizer), std::move(map)};
}

BiMap verify_theorem2(const BinaryGSpace& space, Index base) {
  for (Index x = 0; x < space.carrier_size(); ++x) {
    for (Index g = 1; g < space.group_order(); ++g) {
      if (space(g, x, x) == x) {
        throw NotFree(x, g, "space is not free: g=" + std::to_string(g) + " fixes (x,x) at x=" +
                                space.label(x));
      }
    }
  }
  const Classification cls = classify_transitive_distributive(space, base);
  if (!cls.subgroup.is_trivial()) {
    throw RefutedProposition("free space classified with non-trivial isotropy");
  }
  const BinaryGSpace eta = standard_distributive_action(space.group());
  if (!(cls.map.source() == eta)) {
    throw RefutedProposition("coset action over the trivial subgroup differs from eta");
  }
  BiMap to_eta = BiMap(eta, space, cls.map.map()).inverse();
  if (!to_eta.is_biequimorphism()) {
    throw RefutedProposition("map to the eta-space is not a biequimorphism");
  }
  return to_eta;
}

Prop2Result verify_prop2(const FiniteGroup& group, const Subgroup& h, const Subgroup& k,
                         SearchBudget budget) {
  const auto maps = find_biequivariant_maps(coset_action(group, h), coset_action(group, k), budget);
  Prop2Result out;
  out.contained = h.is_subset_of(k);
  out.map_count = maps.size();
  if (!maps.empty()) out.example = maps.front().map();
  out.holds = (!maps.empty()) == out.contained;
  if (!out.holds) {
    throw RefutedProposition(
        "map existence (" + std::to_string(maps.size()) + " maps) disagrees with H <= K (" +
        (out.contained ? "true" : "false") + ") for H=" + tuple_text(h.members()) +
        " K=" + tuple_text(k.members()));
  }
  return out;
}

}  // namespace binact
