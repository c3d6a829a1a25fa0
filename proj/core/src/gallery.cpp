#include "binact/gallery.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "binact/permutation.hpp"

namespace binact {

namespace {

std::optional<std::int64_t> parse_int(const std::string& s) {
  std::int64_t v = 0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc{} || ptr != end) return std::nullopt;
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<std::string> element_labels(const FiniteGroup& group) {
  std::vector<std::string> out;
  for (Index g = 0; g < group.order(); ++g) out.push_back(group.name(g));
  return out;
}

// a^-1 g a b inside `carrier`, with g drawn from the two-element subgroup
// {e, h} of `carrier`.
BinaryGSpace involution_conjugation_space(const FiniteGroup& carrier, Index h) {
  const FiniteGroup pair = make_group({{0, 1}, {1, 0}}, {"e", carrier.name(h)});
  return BinaryGSpace::tabulate(
      pair, carrier.order(),
      [&](Index g, Index a, Index b) {
        const Index acting = g == 0 ? FiniteGroup::identity : h;
        return carrier.product({carrier.inverse(a), acting, a, b});
      },
      element_labels(carrier));
}

}  // namespace

BinaryGSpace coset_action(const FiniteGroup& group, const Subgroup& subgroup) {
  const CosetSpace cosets(group, subgroup);
  const auto k = static_cast<Index>(cosets.size());
  std::vector<std::string> labels;
  for (Index c = 0; c < k; ++c) labels.push_back(cosets.label(c));

  const auto rule = [&](Index g, Index g1, Index g2) {
    return cosets.coset_of(group.product({g1, g, group.inverse(g1), g2}));
  };
  auto space = BinaryGSpace::tabulate(
      group, k,
      [&](Index g, Index c1, Index c2) {
        return rule(g, cosets.representative(c1), cosets.representative(c2));
      },
      std::move(labels));

  // Well-definedness over every choice of representatives.
  for (Index g = 0; g < group.order(); ++g) {
    for (Index g1 = 0; g1 < group.order(); ++g1) {
      for (Index g2 = 0; g2 < group.order(); ++g2) {
        const Index c1 = cosets.coset_of(g1), c2 = cosets.coset_of(g2);
        const Index expected = space(g, c1, c2);
        const Index got = rule(g, g1, g2);
        if (got != expected) {
          throw NotNormal(CosetWitness{g, cosets.representative(c1), cosets.representative(c2),
                                       g1, g2, expected, got});
        }
      }
    }
  }
  return space;
}

BinaryGSpace standard_distributive_action(const FiniteGroup& group) {
  return BinaryGSpace::tabulate(
      group, group.order(),
      [&](Index g, Index g1, Index g2) {
        return group.product({g1, g, group.inverse(g1), g2});
      },
      element_labels(group));
}

BinaryGSpace z5_multiplicative_space() {
  const auto residue = [](Index i) { return i + 1; };
  const auto index = [](unsigned r) { return static_cast<Index>(r % 5 - 1); };
  std::vector<std::vector<Index>> table(4, std::vector<Index>(4));
  for (Index a = 0; a < 4; ++a) {
    for (Index b = 0; b < 4; ++b) table[a][b] = index(residue(a) * residue(b));
  }
  const std::vector<std::string> names{"1", "2", "3", "4"};
  FiniteGroup units(std::move(table), names);
  auto space = BinaryGSpace::tabulate(
      units, 4,
      [&](Index g, Index x, Index y) {
        unsigned power = 1;
        for (Index k = 0; k < residue(x); ++k) power = power * residue(g) % 5;
        return index(power * residue(y));
      },
      names);
  validate_action(space);
  return space;
}

FiniteGroup s3_presented() {
  const auto x = Permutation::unchecked({1, 0, 2});
  const auto h = Permutation::unchecked({0, 2, 1});
  const std::vector<Permutation> elements{
      Permutation::identity(3), x, h, x.after(h), h.after(x), x.after(h).after(x)};
  const std::vector<std::string> names{"e", "x", "h", "xh", "hx", "xhx"};
  std::vector<std::vector<Index>> table(6, std::vector<Index>(6));
  for (Index a = 0; a < 6; ++a) {
    for (Index b = 0; b < 6; ++b) {
      const auto prod = elements[a].after(elements[b]);
      table[a][b] = static_cast<Index>(
          std::find(elements.begin(), elements.end(), prod) - elements.begin());
    }
  }
  return FiniteGroup(std::move(table), names);
}

BinaryGSpace s3_conjugation_space() {
  auto space = involution_conjugation_space(s3_presented(), 2);
  validate_action(space);
  return space;
}

BinaryGSpace dihedral_conjugation_space(std::size_t m) {
  const FiniteGroup dm = dihedral_group(m);
  const Index s = dihedral_base_point(m);
  const Index h = dm.mul(s, 1);
  auto space = involution_conjugation_space(dm, h);
  validate_action(space);
  return space;
}

Index dihedral_base_point(std::size_t m) { return static_cast<Index>(m); }

WindowedIntSpace::WindowedIntSpace(std::int64_t window) : window_(window) {
  if (window < 1) throw ShapeError("window must be at least 1");
}

std::optional<std::int64_t> WindowedIntSpace::apply(std::int64_t n, std::int64_t x,
                                                    std::int64_t y) const {
  const std::int64_t z = n * x + y;
  if (!in_window(z)) return std::nullopt;
  return z;
}

Index WindowedIntSpace::point_index(std::int64_t value) const {
  if (!in_window(value)) throw ShapeError("point " + std::to_string(value) + " outside window");
  return static_cast<Index>(value + window_);
}

std::int64_t WindowedIntSpace::point_value(Index index) const {
  return static_cast<std::int64_t>(index) - window_;
}

OrbitReport WindowedIntSpace::orbit(std::int64_t x) const {
  const std::int64_t radius = group_radius();
  return detail::closure_chain(
      group_size(), carrier_size(), point_index(x),
      [&](Index g, Index a1, Index a2) -> std::optional<Index> {
        const auto z = apply(static_cast<std::int64_t>(g) - radius, point_value(a1),
                             point_value(a2));
        if (!z) return std::nullopt;
        return point_index(*z);
      });
}

WindowedIntSpace windowed_integer_space(std::int64_t window) { return WindowedIntSpace(window); }

std::optional<FiniteGroup> parse_group_name(const std::string& name) {
  if (name == "klein" || name == "z2xz2") return direct_product(cyclic_group(2), cyclic_group(2));
  if (name == "s3p") return s3_presented();
  if (name.size() < 2) return std::nullopt;
  const auto n = parse_int(name.substr(1));
  if (!n || *n < 1) return std::nullopt;
  const auto size = static_cast<std::size_t>(*n);
  switch (name[0]) {
    case 'z': return cyclic_group(size);
    case 'd': return dihedral_group(size);
    case 's': return symmetric_group(size);
    default: return std::nullopt;
  }
}

std::vector<Index> parse_element_list(const FiniteGroup& group, const std::string& list) {
  std::vector<Index> out;
  if (list.empty()) return out;
  for (const auto& token : split(list, ',')) {
    const auto idx = group.find(token);
    if (!idx) throw ShapeError("unknown group element '" + token + "'");
    out.push_back(*idx);
  }
  return out;
}

std::optional<GalleryEntry> resolve_gallery(const std::string& name) {
  const auto parts = split(name, ':');
  const auto& head = parts[0];
  const auto need_group = [&](const std::string& g) {
    auto group = parse_group_name(g);
    if (!group) throw ShapeError("unknown group name '" + g + "'");
    return *group;
  };
  const auto need_int = [&](const std::string& s) {
    const auto v = parse_int(s);
    if (!v) throw ShapeError("expected an integer in '" + name + "'");
    return *v;
  };
  GalleryEntry entry{name, std::nullopt, std::nullopt};
  if (head == "z5" && parts.size() == 1) {
    entry.space = z5_multiplicative_space();
  } else if (head == "s3" && parts.size() == 1) {
    entry.space = s3_conjugation_space();
  } else if (head == "dihedral" && parts.size() == 2) {
    const auto m = need_int(parts[1]);
    if (m < 2) throw ShapeError("dihedral:m needs m >= 2");
    entry.space = dihedral_conjugation_space(static_cast<std::size_t>(m));
  } else if (head == "eta" && parts.size() == 2) {
    entry.space = standard_distributive_action(need_group(parts[1]));
  } else if (head == "coset" && (parts.size() == 2 || parts.size() == 3)) {
    const auto group = need_group(parts[1]);
    const auto gens = parse_element_list(group, parts.size() == 3 ? parts[2] : "");
    entry.space = coset_action(group, subgroup_closure(group, gens));
  } else if (head == "zwin" && parts.size() == 2) {
    entry.windowed = WindowedIntSpace(need_int(parts[1]));
  } else {
    return std::nullopt;
  }
  return entry;
}

std::vector<std::pair<std::string, std::string>> gallery_catalog() {
  return {
      {"z5", "units of Z_5 acting on themselves by g(x,x') = g^x x'"},
      {"s3", "{e,h} <= S_3 acting on S_3 by g(a,b) = a^-1 g a b"},
      {"dihedral:m", "{e, sr} acting on D_m by conjugation-translation, base point s"},
      {"coset:G:H", "G acting on G|H, H generated by the listed elements (must be normal)"},
      {"eta:G", "G acting on itself by eta(g,g1,g2) = g1 g g1^-1 g2"},
      {"zwin:N", "Z acting on Z by n(x,x') = nx + x', carrier window [-N,N]"},
  };
}

}  // namespace binact
