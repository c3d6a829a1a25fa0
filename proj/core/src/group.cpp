#include "binact/group.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

#include "binact/permutation.hpp"

namespace binact {

namespace {

std::string triple_text(Index a, Index b, Index c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

std::optional<Index> parse_index(const std::string& s) {
  Index value = 0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc{} || ptr != end || s.empty()) return std::nullopt;
  return value;
}

std::string cycle_name(const std::vector<Index>& images) {
  std::string out;
  std::vector<bool> seen(images.size(), false);
  for (Index start = 0; start < images.size(); ++start) {
    if (seen[start] || images[start] == start) continue;
    out += '(';
    for (Index i = start; !seen[i]; i = images[i]) {
      seen[i] = true;
      out += std::to_string(i + 1);
    }
    out += ')';
  }
  return out.empty() ? "e" : out;
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<std::vector<Index>> table, std::vector<std::string> names) {
  const std::size_t n = table.size();
  if (n == 0) throw NotAGroup(NotAGroup::Reason::range, {0, 0, 0}, "empty Cayley table");
  if (!names.empty() && names.size() != n) {
    throw ShapeError("group has " + std::to_string(n) + " elements but " +
                     std::to_string(names.size()) + " names");
  }
  auto data = std::make_shared<Data>();
  data->order = n;
  data->table.resize(n * n);
  for (Index a = 0; a < n; ++a) {
    if (table[a].size() != n) {
      throw NotAGroup(NotAGroup::Reason::range, {a, 0, 0},
                      "row " + std::to_string(a) + " has length " +
                          std::to_string(table[a].size()) + ", expected " + std::to_string(n));
    }
    for (Index b = 0; b < n; ++b) {
      if (table[a][b] >= n) {
        throw NotAGroup(NotAGroup::Reason::range, {a, b, 0},
                        "entry " + triple_text(a, b, 0) + " out of range");
      }
      data->table[a * n + b] = table[a][b];
    }
  }
  const auto at = [&](Index a, Index b) { return data->table[a * n + b]; };

  // Latin square: every row and column a permutation.
  for (Index a = 0; a < n; ++a) {
    std::vector<bool> row(n, false), col(n, false);
    for (Index b = 0; b < n; ++b) {
      if (row[at(a, b)]) {
        throw NotAGroup(NotAGroup::Reason::inverses, {a, b, at(a, b)},
                        "row " + std::to_string(a) + " is not a permutation (value " +
                            std::to_string(at(a, b)) + " repeats)");
      }
      if (col[at(b, a)]) {
        throw NotAGroup(NotAGroup::Reason::inverses, {b, a, at(b, a)},
                        "column " + std::to_string(a) + " is not a permutation (value " +
                            std::to_string(at(b, a)) + " repeats)");
      }
      row[at(a, b)] = true;
      col[at(b, a)] = true;
    }
  }
  for (Index b = 0; b < n; ++b) {
    if (at(0, b) != b || at(b, 0) != b) {
      throw NotAGroup(NotAGroup::Reason::identity, {b, 0, 0},
                      "index 0 is not a two-sided identity at element " + std::to_string(b));
    }
  }
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      for (Index c = 0; c < n; ++c) {
        if (at(at(a, b), c) != at(a, at(b, c))) {
          throw NotAGroup(NotAGroup::Reason::associativity, {a, b, c},
                          "associativity fails at " + triple_text(a, b, c));
        }
      }
    }
  }
  data->inverse.resize(n);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      if (at(a, b) == 0) data->inverse[a] = b;
    }
  }
  data->names = std::move(names);
  data_ = std::move(data);
}

Index FiniteGroup::product(std::initializer_list<Index> factors) const {
  Index acc = identity;
  for (Index f : factors) acc = mul(acc, f);
  return acc;
}

std::size_t FiniteGroup::element_order(Index a) const {
  std::size_t k = 1;
  for (Index p = a; p != identity; p = mul(p, a)) ++k;
  return k;
}

std::string FiniteGroup::name(Index a) const {
  return has_names() ? data_->names[a] : std::to_string(a);
}

std::optional<Index> FiniteGroup::find(const std::string& name_or_index) const {
  const auto& names = data_->names;
  if (auto it = std::find(names.begin(), names.end(), name_or_index); it != names.end()) {
    return static_cast<Index>(it - names.begin());
  }
  if (auto idx = parse_index(name_or_index); idx && *idx < order()) return idx;
  return std::nullopt;
}

std::vector<std::vector<Index>> FiniteGroup::table() const {
  const std::size_t n = order();
  std::vector<std::vector<Index>> out(n, std::vector<Index>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) out[a][b] = data_->table[a * n + b];
  }
  return out;
}

bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
  return a.data_ == b.data_ || a.data_->table == b.data_->table;
}

FiniteGroup make_group(std::vector<std::vector<Index>> table, std::vector<std::string> names) {
  return FiniteGroup(std::move(table), std::move(names));
}

FiniteGroup cyclic_group(std::size_t m) {
  if (m == 0) throw ShapeError("cyclic group order must be positive");
  std::vector<std::vector<Index>> table(m, std::vector<Index>(m));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) table[a][b] = static_cast<Index>((a + b) % m);
  }
  return FiniteGroup(std::move(table));
}

FiniteGroup dihedral_group(std::size_t m) {
  if (m < 2) throw ShapeError("dihedral group needs m >= 2");
  const std::size_t n = 2 * m;
  // r^k1 s^f1 * r^k2 s^f2 = r^(k1 + (-1)^f1 k2) s^(f1+f2)
  std::vector<std::vector<Index>> table(n, std::vector<Index>(n));
  std::vector<std::string> names(n);
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t k1 = a % m, f1 = a / m;
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t k2 = b % m, f2 = b / m;
      const std::size_t k = f1 == 0 ? (k1 + k2) % m : (k1 + m - k2) % m;
      table[a][b] = static_cast<Index>(k + ((f1 + f2) % 2) * m);
    }
    std::string name = k1 == 0 ? "" : (k1 == 1 ? "r" : "r" + std::to_string(k1));
    if (f1 == 1) name += "s";
    names[a] = name.empty() ? "e" : name;
  }
  return FiniteGroup(std::move(table), std::move(names));
}

FiniteGroup symmetric_group(std::size_t n) {
  if (n == 0 || n > 6) throw ShapeError("symmetric group supported for 1 <= n <= 6");
  const auto perms = all_permutations(n);
  const std::size_t order = perms.size();
  std::vector<std::vector<Index>> table(order, std::vector<Index>(order));
  std::vector<std::string> names(order);
  for (std::size_t a = 0; a < order; ++a) {
    names[a] = cycle_name(perms[a].images());
    for (std::size_t b = 0; b < order; ++b) {
      const auto prod = perms[a].after(perms[b]);
      const auto it = std::lower_bound(perms.begin(), perms.end(), prod);
      table[a][b] = static_cast<Index>(it - perms.begin());
    }
  }
  return FiniteGroup(std::move(table), std::move(names));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t ng = g.order(), nh = h.order(), n = ng * nh;
  std::vector<std::vector<Index>> table(n, std::vector<Index>(n));
  std::vector<std::string> names(n);
  for (Index a = 0; a < n; ++a) {
    const Index ag = static_cast<Index>(a / nh), ah = static_cast<Index>(a % nh);
    names[a] = "(" + g.name(ag) + "," + h.name(ah) + ")";
    for (Index b = 0; b < n; ++b) {
      const Index bg = static_cast<Index>(b / nh), bh = static_cast<Index>(b % nh);
      table[a][b] = static_cast<Index>(g.mul(ag, bg) * nh + h.mul(ah, bh));
    }
  }
  return FiniteGroup(std::move(table), std::move(names));
}

Subgroup::Subgroup(FiniteGroup parent, std::vector<Index> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty() && members_.back() >= parent_.order()) {
    throw NotASubgroup("subgroup member " + std::to_string(members_.back()) + " out of range");
  }
  if (members_.empty() || members_.front() != FiniteGroup::identity) {
    throw NotASubgroup("subgroup must contain the identity");
  }
  for (Index a : members_) {
    if (!contains(parent_.inverse(a))) {
      throw NotASubgroup("not closed under inverse at " + std::to_string(a));
    }
    for (Index b : members_) {
      if (!contains(parent_.mul(a, b))) {
        throw NotASubgroup("not closed under product at (" + std::to_string(a) + "," +
                           std::to_string(b) + ")");
      }
    }
  }
}

bool Subgroup::contains(Index g) const {
  return std::binary_search(members_.begin(), members_.end(), g);
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

Subgroup subgroup_closure(const FiniteGroup& group, std::span<const Index> generators) {
  for (Index g : generators) {
    if (g >= group.order()) throw ShapeError("generator " + std::to_string(g) + " out of range");
  }
  std::vector<bool> in(group.order(), false);
  std::vector<Index> members{FiniteGroup::identity};
  in[FiniteGroup::identity] = true;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Index s : generators) {
      const Index next = group.mul(members[i], s);
      if (!in[next]) {
        in[next] = true;
        members.push_back(next);
      }
    }
  }
  return Subgroup(group, std::move(members));
}

Subgroup trivial_subgroup(const FiniteGroup& group) {
  return Subgroup(group, {FiniteGroup::identity});
}

Subgroup whole_group(const FiniteGroup& group) {
  std::vector<Index> all(group.order());
  std::iota(all.begin(), all.end(), Index{0});
  return Subgroup(group, std::move(all));
}

bool is_normal(const FiniteGroup& group, const Subgroup& subgroup) {
  for (Index g = 0; g < group.order(); ++g) {
    for (Index h : subgroup.members()) {
      if (!subgroup.contains(group.product({g, h, group.inverse(g)}))) return false;
    }
  }
  return true;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& group) {
  std::set<std::vector<Index>> found;
  for (Index g = 0; g < group.order(); ++g) {
    const Index gens[] = {g};
    found.insert(subgroup_closure(group, gens).members());
  }
  // Every subgroup is the join of its cyclic subgroups.
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<std::vector<Index>> current(found.begin(), found.end());
    for (std::size_t i = 0; i < current.size(); ++i) {
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        std::vector<Index> gens = current[i];
        gens.insert(gens.end(), current[j].begin(), current[j].end());
        if (found.insert(subgroup_closure(group, gens).members()).second) grew = true;
      }
    }
  }
  std::vector<Subgroup> out;
  for (const auto& members : found) out.emplace_back(group, members);
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members() < b.members();
  });
  return out;
}

std::vector<Subgroup> normal_subgroups(const FiniteGroup& group) {
  std::vector<Subgroup> out;
  for (auto& h : all_subgroups(group)) {
    if (is_normal(group, h)) out.push_back(std::move(h));
  }
  return out;
}

CosetSpace::CosetSpace(const FiniteGroup& group, const Subgroup& subgroup)
    : subgroup_(subgroup), rep_(group.order(), 0) {
  if (!(subgroup.parent() == group)) throw ShapeError("subgroup of a different group");
  std::vector<bool> assigned(group.order(), false);
  for (Index g = 0; g < group.order(); ++g) {
    if (assigned[g]) continue;
    std::vector<Index> coset;
    for (Index h : subgroup.members()) coset.push_back(group.mul(g, h));
    std::sort(coset.begin(), coset.end());
    const auto c = static_cast<Index>(cosets_.size());
    for (Index m : coset) {
      assigned[m] = true;
      rep_[m] = c;
    }
    cosets_.push_back(std::move(coset));
  }
}

std::string CosetSpace::label(Index c) const {
  const Index r = representative(c);
  return subgroup_.is_trivial() ? group().name(r) : group().name(r) + "H";
}

CosetSpace coset_space(const FiniteGroup& group, const Subgroup& subgroup) {
  return CosetSpace(group, subgroup);
}

}  // namespace binact
