#include "binact/enumerate.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

namespace binact {

namespace {

std::optional<std::size_t> checked_pow(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && out > std::numeric_limits<std::size_t>::max() / base) return std::nullopt;
    out *= base;
  }
  return out;
}

void check_guard(const FiniteGroup& group, std::size_t m, const EnumerationLimits& limits) {
  if (m == 0) throw ShapeError("carrier size must be positive");
  if (m > limits.max_carrier) {
    throw BudgetExceeded("carrier size " + std::to_string(m) + " exceeds the limit " +
                         std::to_string(limits.max_carrier));
  }
  if (group.order() > limits.max_group_order) {
    throw BudgetExceeded("group order " + std::to_string(group.order()) + " exceeds the limit " +
                         std::to_string(limits.max_group_order));
  }
}

}  // namespace

std::vector<Index> generating_set(const FiniteGroup& group) {
  std::vector<Index> gens;
  std::vector<Index> reached{FiniteGroup::identity};
  for (Index g = 1; g < group.order(); ++g) {
    if (std::binary_search(reached.begin(), reached.end(), g)) continue;
    gens.push_back(g);
    reached = subgroup_closure(group, gens).members();
  }
  return gens;
}

std::vector<Homomorphism> enumerate_homomorphisms(const FiniteGroup& group, std::size_t m,
                                                  EnumerationLimits limits) {
  check_guard(group, m, limits);
  const auto gens = generating_set(group);
  const auto perms = all_permutations(m);
  const auto total = checked_pow(perms.size(), gens.size());
  if (!total || *total > limits.max_candidates) {
    throw BudgetExceeded("homomorphism search needs " +
                         (total ? std::to_string(*total) : std::string("too many")) +
                         " generator assignments, budget " +
                         std::to_string(limits.max_candidates));
  }

  std::vector<Homomorphism> out;
  std::vector<std::size_t> digits(gens.size(), 0);
  for (std::size_t candidate = 0; candidate < *total; ++candidate) {
    Homomorphism images(group.order());
    std::vector<bool> known(group.order(), false);
    images[FiniteGroup::identity] = Permutation::identity(m);
    known[FiniteGroup::identity] = true;
    std::vector<Index> frontier{FiniteGroup::identity};
    bool consistent = true;
    for (std::size_t head = 0; head < frontier.size() && consistent; ++head) {
      const Index g = frontier[head];
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const Index next = group.mul(g, gens[i]);
        Permutation value = images[g].after(perms[digits[i]]);
        if (!known[next]) {
          known[next] = true;
          images[next] = std::move(value);
          frontier.push_back(next);
        } else if (images[next] != value) {
          consistent = false;
          break;
        }
      }
    }
    if (consistent) out.push_back(std::move(images));

    for (std::size_t pos = gens.size(); pos-- > 0;) {
      if (++digits[pos] < perms.size()) break;
      digits[pos] = 0;
    }
  }
  return out;
}

BinaryGSpace binary_action_from_tuple(const FiniteGroup& group,
                                      const std::vector<Homomorphism>& homs,
                                      std::span<const std::size_t> choice) {
  const std::size_t m = choice.size();
  std::vector<Index> mu(group.order() * m * m);
  for (Index g = 0; g < group.order(); ++g) {
    for (Index x = 0; x < m; ++x) {
      const Permutation& p = homs.at(choice[x])[g];
      for (Index y = 0; y < m; ++y) mu[(g * m + x) * m + y] = p(y);
    }
  }
  return BinaryGSpace(group, m, std::move(mu));
}

std::optional<std::size_t> count_binary_actions(std::size_t hom_count, std::size_t m) {
  return checked_pow(hom_count, m);
}

void for_each_binary_action(const FiniteGroup& group, std::size_t m,
                            const std::function<void(const BinaryGSpace&)>& visit,
                            EnumerationLimits limits) {
  const auto homs = enumerate_homomorphisms(group, m, limits);
  const auto total = count_binary_actions(homs.size(), m);
  if (!total || *total > limits.max_candidates) {
    throw BudgetExceeded("binary action enumeration needs " +
                         (total ? std::to_string(*total) : std::string("too many")) +
                         " tuples, budget " + std::to_string(limits.max_candidates));
  }
  std::vector<std::size_t> choice(m, 0);
  for (std::size_t t = 0; t < *total; ++t) {
    visit(binary_action_from_tuple(group, homs, choice));
    for (std::size_t pos = m; pos-- > 0;) {
      if (++choice[pos] < homs.size()) break;
      choice[pos] = 0;
    }
  }
}

std::vector<BinaryGSpace> enumerate_binary_actions(const FiniteGroup& group, std::size_t m,
                                                   EnumerationLimits limits) {
  std::vector<BinaryGSpace> out;
  for_each_binary_action(
      group, m, [&](const BinaryGSpace& s) { out.push_back(s); }, limits);
  return out;
}

BinaryGSpace random_binary_action(const FiniteGroup& group,
                                  const std::vector<Homomorphism>& homs, std::size_t m,
                                  std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, homs.size() - 1);
  std::vector<std::size_t> choice(m);
  for (auto& c : choice) c = pick(rng);
  return binary_action_from_tuple(group, homs, choice);
}

std::string space_hash(const BinaryGSpace& space) {
  std::uint64_t h = 14695981039346656037ULL;
  const auto mix = [&h](std::uint32_t word) {
    for (int i = 0; i < 4; ++i) {
      h ^= (word >> (8 * i)) & 0xffU;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint32_t>(space.group_order()));
  mix(static_cast<std::uint32_t>(space.carrier_size()));
  for (Index v : space.mu()) mix(v);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string CensusFlags::key() const {
  std::string k;
  const auto add = [&k](bool on, const char* name) {
    if (!on) return;
    if (!k.empty()) k += '+';
    k += name;
  };
  add(distributive, "distributive");
  add(transitive, "transitive");
  add(homogeneous, "homogeneous");
  add(free, "free");
  return k.empty() ? "none" : k;
}

CensusRow census_row(const BinaryGSpace& space) {
  CensusRow row;
  row.space_id = space_hash(space);
  row.flags.distributive = is_distributive(space);
  row.flags.transitive = is_transitive(space);
  row.flags.free = is_free(space);
  std::vector<PointSet> orbits;
  for (Index x = 0; x < space.carrier_size(); ++x) {
    const auto report = orbit(space, x);
    row.steps.push_back(report.step);
    if (report.step) row.flags.homogeneous = true;
    orbits.push_back(report.orbit());
  }
  std::sort(orbits.begin(), orbits.end());
  orbits.erase(std::unique(orbits.begin(), orbits.end()), orbits.end());
  bool overlapping = false;
  for (std::size_t i = 0; i < orbits.size() && !overlapping; ++i) {
    for (std::size_t j = i + 1; j < orbits.size(); ++j) {
      std::vector<Index> common;
      std::set_intersection(orbits[i].begin(), orbits[i].end(), orbits[j].begin(),
                            orbits[j].end(), std::back_inserter(common));
      if (!common.empty()) {
        overlapping = true;
        break;
      }
    }
  }
  if (!overlapping) row.orbit_partition = std::move(orbits);
  return row;
}

Census census(const FiniteGroup& group, std::size_t m, EnumerationLimits limits) {
  Census out;
  for_each_binary_action(
      group, m,
      [&](const BinaryGSpace& space) {
        auto row = census_row(space);
        ++out.summary[row.flags.key()];
        out.rows.push_back(std::move(row));
      },
      limits);
  return out;
}

}  // namespace binact
