#include "binact/action.hpp"

#include <algorithm>
#include <charconv>

namespace binact {

BinaryGSpace::BinaryGSpace(FiniteGroup group, std::size_t carrier_size, std::vector<Index> mu,
                           std::vector<std::string> labels)
    : group_(std::move(group)),
      carrier_(carrier_size),
      mu_(std::move(mu)),
      labels_(std::move(labels)) {
  if (carrier_ == 0) throw ShapeError("carrier must be non-empty");
  const std::size_t expected = group_.order() * carrier_ * carrier_;
  if (mu_.size() != expected) {
    throw ShapeError("action table has " + std::to_string(mu_.size()) + " entries, expected " +
                     std::to_string(expected));
  }
  for (std::size_t i = 0; i < mu_.size(); ++i) {
    if (mu_[i] >= carrier_) {
      throw ShapeError("action table entry " + std::to_string(i) + " = " +
                       std::to_string(mu_[i]) + " out of range");
    }
  }
  if (!labels_.empty() && labels_.size() != carrier_) {
    throw ShapeError("carrier has " + std::to_string(carrier_) + " points but " +
                     std::to_string(labels_.size()) + " labels");
  }
}

BinaryGSpace BinaryGSpace::tabulate(FiniteGroup group, std::size_t carrier_size,
                                    const std::function<Index(Index, Index, Index)>& rule,
                                    std::vector<std::string> labels) {
  std::vector<Index> mu;
  mu.reserve(group.order() * carrier_size * carrier_size);
  for (Index g = 0; g < group.order(); ++g) {
    for (Index x = 0; x < carrier_size; ++x) {
      for (Index y = 0; y < carrier_size; ++y) mu.push_back(rule(g, x, y));
    }
  }
  return BinaryGSpace(std::move(group), carrier_size, std::move(mu), std::move(labels));
}

Index BinaryGSpace::apply(Index g, Index x, Index y) const {
  if (g >= group_order() || x >= carrier_ || y >= carrier_) {
    throw ShapeError("apply(" + std::to_string(g) + "," + std::to_string(x) + "," +
                     std::to_string(y) + ") out of range");
  }
  return (*this)(g, x, y);
}

std::string BinaryGSpace::label(Index x) const {
  return has_labels() ? labels_[x] : std::to_string(x);
}

std::optional<Index> BinaryGSpace::find_point(const std::string& label_or_index) const {
  if (auto it = std::find(labels_.begin(), labels_.end(), label_or_index); it != labels_.end()) {
    return static_cast<Index>(it - labels_.begin());
  }
  Index value = 0;
  const char* end = label_or_index.data() + label_or_index.size();
  auto [ptr, ec] = std::from_chars(label_or_index.data(), end, value);
  if (ec != std::errc{} || ptr != end || label_or_index.empty() || value >= carrier_) {
    return std::nullopt;
  }
  return value;
}

ActionCertificate validate_action(const BinaryGSpace& space) {
  const auto& G = space.group();
  const auto m = static_cast<Index>(space.carrier_size());
  const auto n = static_cast<Index>(space.group_order());
  ActionCertificate cert;
  for (Index x = 0; x < m; ++x) {
    for (Index y = 0; y < m; ++y) {
      ++cert.identity_checks;
      if (space(FiniteGroup::identity, x, y) != y) {
        throw AxiomViolation(AxiomViolation::Law::identity, {0, 0, x, y});
      }
    }
  }
  for (Index g = 0; g < n; ++g) {
    for (Index h = 0; h < n; ++h) {
      const Index gh = G.mul(g, h);
      for (Index x = 0; x < m; ++x) {
        for (Index y = 0; y < m; ++y) {
          ++cert.composition_checks;
          if (space(gh, x, y) != space(g, x, space(h, x, y))) {
            throw AxiomViolation(AxiomViolation::Law::composition, {g, h, x, y});
          }
        }
      }
    }
  }
  return cert;
}

PointSet image_set(const BinaryGSpace& space, std::span<const Index> elements,
                   std::span<const Index> points) {
  std::vector<bool> hit(space.carrier_size(), false);
  for (Index g : elements) {
    for (Index a1 : points) {
      for (Index a2 : points) hit[space.apply(g, a1, a2)] = true;
    }
  }
  PointSet out;
  for (Index p = 0; p < hit.size(); ++p) {
    if (hit[p]) out.push_back(p);
  }
  return out;
}

PointSet image_set(const BinaryGSpace& space, std::span<const Index> points) {
  std::vector<Index> all(space.group_order());
  for (Index g = 0; g < all.size(); ++g) all[g] = g;
  return image_set(space, all, points);
}

OrbitReport orbit(const BinaryGSpace& space, Index x) {
  if (x >= space.carrier_size()) throw ShapeError("point " + std::to_string(x) + " out of range");
  return detail::closure_chain(space.group_order(), space.carrier_size(), x,
                               [&space](Index g, Index a1, Index a2) -> std::optional<Index> {
                                 return space(g, a1, a2);
                               });
}

std::optional<std::size_t> stabilization_step(const BinaryGSpace& space, Index x) {
  return orbit(space, x).step;
}

std::optional<Index> transitivity_failure(const BinaryGSpace& space) {
  for (Index x = 0; x < space.carrier_size(); ++x) {
    const Index single[] = {x};
    if (image_set(space, single).size() != space.carrier_size()) return x;
  }
  return std::nullopt;
}

bool is_transitive(const BinaryGSpace& space) { return !transitivity_failure(space); }

Homogeneity is_homogeneous(const BinaryGSpace& space) {
  Homogeneity out;
  for (Index x = 0; x < space.carrier_size(); ++x) {
    if (orbit(space, x).step) out.stabilization_points.push_back(x);
  }
  out.homogeneous = !out.stabilization_points.empty();
  return out;
}

std::optional<DistributivityCounterexample> distributivity_counterexample(
    const BinaryGSpace& space) {
  const auto n = static_cast<Index>(space.group_order());
  const auto m = static_cast<Index>(space.carrier_size());
  for (Index g = 0; g < n; ++g) {
    for (Index h = 0; h < n; ++h) {
      for (Index x = 0; x < m; ++x) {
        for (Index x1 = 0; x1 < m; ++x1) {
          const Index hx1 = space(h, x, x1);
          for (Index x2 = 0; x2 < m; ++x2) {
            if (space(g, hx1, space(h, x, x2)) != space(h, x, space(g, x1, x2))) {
              return DistributivityCounterexample{g, h, x, x1, x2};
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

bool is_distributive(const BinaryGSpace& space) {
  return !distributivity_counterexample(space);
}

Subgroup isotropy(const BinaryGSpace& space, Index x) {
  std::vector<Index> members;
  for (Index g = 0; g < space.group_order(); ++g) {
    if (space.apply(g, x, x) == x) members.push_back(g);
  }
  return Subgroup(space.group(), std::move(members));
}

bool is_free(const BinaryGSpace& space) {
  for (Index x = 0; x < space.carrier_size(); ++x) {
    for (Index g = 1; g < space.group_order(); ++g) {
      if (space(g, x, x) == x) return false;
    }
  }
  return true;
}

std::vector<Permutation> slice_homomorphism(const BinaryGSpace& space, Index x) {
  if (x >= space.carrier_size()) throw ShapeError("point " + std::to_string(x) + " out of range");
  std::vector<Permutation> out;
  out.reserve(space.group_order());
  for (Index g = 0; g < space.group_order(); ++g) {
    std::vector<Index> images(space.carrier_size());
    for (Index y = 0; y < images.size(); ++y) images[y] = space(g, x, y);
    out.emplace_back(std::move(images));
  }
  return out;
}

Permutation evaluate_factors(const BinaryGSpace& space, std::span<const SliceFactor> factors) {
  std::vector<Index> images(space.carrier_size());
  for (Index y = 0; y < images.size(); ++y) {
    Index v = y;
    for (const auto& f : factors) v = space.apply(f.g, f.anchor, v);
    images[y] = v;
  }
  return Permutation(std::move(images));
}

PointTranslation point_translation(const BinaryGSpace& space, const OrbitReport& report,
                                   Index target) {
  if (!report.contains(target)) {
    throw NotInOrbit("point " + space.label(target) + " is not in the orbit of " +
                     space.label(report.base));
  }
  const Index source = report.base;
  // Outermost factor first; reversed below.
  std::vector<SliceFactor> outer_first;
  Index current = target;
  for (;;) {
    const Witness& w = *report.witnesses[current];
    if (w.level == 1) {
      outer_first.push_back({w.g, source});
      break;
    }
    outer_first.push_back({w.g, w.first});
    current = w.second;
  }
  PointTranslation out;
  out.source = source;
  out.target = target;
  out.factors.assign(outer_first.rbegin(), outer_first.rend());
  out.map = evaluate_factors(space, out.factors);
  return out;
}

PointTranslation point_translation(const BinaryGSpace& space, Index source, Index target) {
  return point_translation(space, orbit(space, source), target);
}

}  // namespace binact
