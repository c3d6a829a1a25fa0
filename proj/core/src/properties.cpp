#include "binact/properties.hpp"

#include <algorithm>
#include <numeric>

#include "binact/enumerate.hpp"
#include "binact/morphisms.hpp"

namespace binact {

namespace {

class Recorder {
 public:
  Recorder(PropertyTally& tally, std::string space_id)
      : tally_(tally), space_id_(std::move(space_id)) {}

  void check(const std::string& property, bool ok, const std::string& detail) {
    ++tally_.checks[property];
    if (!ok) tally_.violations.push_back({property, space_id_, detail});
  }

 private:
  PropertyTally& tally_;
  std::string space_id_;
};

bool is_subset(const PointSet& a, const PointSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::string at_point(Index x) { return "at x=" + std::to_string(x); }

}  // namespace

void PropertyTally::merge(const PropertyTally& other) {
  for (const auto& [k, v] : other.checks) checks[k] += v;
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

BinaryGSpace relabel(const BinaryGSpace& space, const Permutation& sigma) {
  const std::size_t m = space.carrier_size();
  const Permutation inv = sigma.inverse();
  return BinaryGSpace::tabulate(space.group(), m, [&](Index g, Index x, Index y) {
    return sigma(space(g, inv(x), inv(y)));
  });
}

void check_implications(const BinaryGSpace& space, std::mt19937_64& rng, PropertyTally& tally) {
  Recorder rec(tally, space_hash(space));
  const auto m = static_cast<Index>(space.carrier_size());

  std::vector<OrbitReport> orbits;
  for (Index x = 0; x < m; ++x) orbits.push_back(orbit(space, x));

  for (Index x = 0; x < m; ++x) {
    const auto& r = orbits[x];
    bool monotone = !r.chain.empty() && r.chain.size() <= m &&
                    std::binary_search(r.chain[0].begin(), r.chain[0].end(), x);
    for (std::size_t n = 1; n < r.chain.size() && monotone; ++n) {
      monotone = is_subset(r.chain[n - 1], r.chain[n]) && r.chain[n - 1] != r.chain[n];
    }
    monotone = monotone && image_set(space, r.orbit()) == r.orbit();
    rec.check("chain_monotone", monotone, at_point(x));

    bool sound = true;
    for (Index p = 0; p < m; ++p) {
      if (!r.witnesses[p]) continue;
      const Witness& w = *r.witnesses[p];
      sound = sound && space(w.g, w.first, w.second) == p && r.contains(w.first) &&
              r.contains(w.second);
      if (w.level > 1) {
        sound = sound && r.witnesses[w.first]->level < w.level &&
                r.witnesses[w.second]->level < w.level;
      }
    }
    rec.check("witness_sound", sound, at_point(x));

    const auto slices = slice_homomorphism(space, x);
    bool hom = slices[0].is_identity();
    for (Index g = 0; g < space.group_order() && hom; ++g) {
      for (Index h = 0; h < space.group_order() && hom; ++h) {
        hom = slices[space.group().mul(g, h)] == slices[g].after(slices[h]);
      }
    }
    rec.check("slice_homomorphism", hom, at_point(x));
  }

  const bool distributive = is_distributive(space);
  const bool transitive = is_transitive(space);
  const bool homogeneous = std::any_of(orbits.begin(), orbits.end(),
                                       [](const OrbitReport& r) { return r.step.has_value(); });
  const bool all_step_one = std::all_of(orbits.begin(), orbits.end(), [](const OrbitReport& r) {
    return r.step && *r.step == 1;
  });

  if (distributive) {
    const auto row = census_row(space);
    bool ok = row.orbit_partition.has_value();
    for (Index x = 0; x < m && ok; ++x) {
      const Index single[] = {x};
      ok = orbits[x].orbit() == image_set(space, single) && orbits[x].chain.size() == 1;
    }
    rec.check("distributive_orbit_partition", ok, "orbits overlap or [x] != G(x,x)");
  }
  if (distributive && homogeneous) {
    rec.check("homogeneous_distributive_transitive", transitive && all_step_one,
              "homogeneous distributive space not transitive at step 1");
  }
  if (transitive) {
    rec.check("transitive_homogeneous", homogeneous && all_step_one,
              "transitive space without step 1 everywhere");
  }
  if (distributive && transitive) {
    std::string detail = "classified";
    bool ok = true;
    try {
      const auto cls = classify_transitive_distributive(space);
      ok = cls.map.is_biequimorphism() && is_normal(space.group(), cls.subgroup);
    } catch (const Error& e) {
      ok = false;
      detail = e.what();
    }
    rec.check("classification", ok, detail);
  }

  std::vector<Index> images(m);
  std::iota(images.begin(), images.end(), Index{0});
  std::shuffle(images.begin(), images.end(), rng);
  const Permutation sigma(images);
  const BinaryGSpace copy = relabel(space, sigma);
  const BiMap phi(space, copy, sigma.images());
  bool preserved = phi.is_biequimorphism();
  for (Index x = 0; x < m && preserved; ++x) {
    const auto image = orbit(copy, sigma(x));
    preserved = image.step == orbits[x].step && image.chain.size() == orbits[x].chain.size();
    for (std::size_t n = 0; n < image.chain.size() && preserved; ++n) {
      PointSet mapped;
      for (Index p : orbits[x].chain[n]) mapped.push_back(sigma(p));
      std::sort(mapped.begin(), mapped.end());
      preserved = mapped == image.chain[n];
    }
  }
  rec.check("biequimorphism_preserves_steps", preserved, "relabeling " + sigma.to_string());
}

void check_translations(const BinaryGSpace& space, PropertyTally& tally) {
  Recorder rec(tally, space_hash(space));
  for (Index x0 = 0; x0 < space.carrier_size(); ++x0) {
    const auto report = orbit(space, x0);
    if (!report.step) continue;
    for (Index target : report.orbit()) {
      bool ok = false;
      std::string detail = "x0=" + std::to_string(x0) + " x*=" + std::to_string(target);
      try {
        const auto t = point_translation(space, report, target);
        ok = t.map(x0) == target && Permutation::is_bijection(t.map.images()) &&
             evaluate_factors(space, t.factors) == t.map;
      } catch (const Error& e) {
        detail += std::string(": ") + e.what();
      }
      rec.check("translation", ok, detail);
    }
  }
}

}  // namespace binact
