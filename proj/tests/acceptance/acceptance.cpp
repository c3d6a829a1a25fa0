// Acceptance suite: one PASS/FAIL line per criterion.
//
//   binact_acceptance                 run every criterion
//   binact_acceptance --criterion N   run criterion N only
//   binact_acceptance --golden DIR    directory holding dihedral_steps.json
//
// Exit status is 0 when every selected criterion passes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "binact/action.hpp"
#include "binact/continuum.hpp"
#include "binact/enumerate.hpp"
#include "binact/gallery.hpp"
#include "binact/morphisms.hpp"
#include "binact/properties.hpp"
#include "cli.hpp"
#include "oracles.hpp"

using namespace binact;

namespace {

// Pinned limits.
constexpr double kFastSeconds = 1.0;          // criteria 1, 2
constexpr double kClassifySeconds = 60.0;     // criterion 5
constexpr double kProp2Seconds = 60.0;        // criterion 7
constexpr double kContinuumSeconds = 10.0;    // criterion 10
constexpr double kAxiomTolerance = 1e-9;
constexpr double kReachTolerance = 1e-6;
constexpr double kTailTolerance = 1e-12;
constexpr std::size_t kAxiomSamples = 1000;
constexpr std::size_t kReachSamples = 100;
constexpr std::size_t kInclusionSamples = 1000;
constexpr std::uint64_t kContinuumSeed = 20240601;
constexpr std::uint64_t kRandomSuiteSeed = 4242;
constexpr std::size_t kRandomSpaces = 500;
constexpr std::int64_t kWindow = 50;
const std::vector<std::size_t> kDihedralMs{3, 5, 8, 12, 16};

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(3);
  s << v;
  return s.str();
}

oracle::Set as_set(const PointSet& p) { return {p.begin(), p.end()}; }

oracle::Set all_points(std::size_t m) {
  oracle::Set s;
  for (Index i = 0; i < m; ++i) s.insert(i);
  return s;
}

// Equivariance of a map, checked directly on the tables.
bool equivariant(const BinaryGSpace& x, const BinaryGSpace& y, const std::vector<Index>& f) {
  for (Index g = 0; g < x.group_order(); ++g)
    for (Index a = 0; a < x.carrier_size(); ++a)
      for (Index b = 0; b < x.carrier_size(); ++b)
        if (f[x(g, a, b)] != y(g, f[a], f[b])) return false;
  return true;
}

bool bijective(const std::vector<Index>& f) {
  return std::set<Index>(f.begin(), f.end()).size() == f.size();
}

std::vector<Index> inverse_of(const std::vector<Index>& f) {
  std::vector<Index> inv(f.size());
  for (Index i = 0; i < f.size(); ++i) inv[f[i]] = i;
  return inv;
}

bool biequimorphism(const BinaryGSpace& x, const BinaryGSpace& y, const std::vector<Index>& f) {
  return x.carrier_size() == y.carrier_size() && bijective(f) && equivariant(x, y, f) &&
         equivariant(y, x, inverse_of(f));
}

oracle::Set isotropy_oracle(const BinaryGSpace& s, Index x) {
  oracle::Set out;
  for (Index g = 0; g < s.group_order(); ++g)
    if (s(g, x, x) == x) out.insert(g);
  return out;
}

bool distributive_oracle(const BinaryGSpace& s) {
  const auto n = s.group_order(), m = s.carrier_size();
  for (Index g = 0; g < n; ++g)
    for (Index h = 0; h < n; ++h)
      for (Index x = 0; x < m; ++x)
        for (Index a = 0; a < m; ++a)
          for (Index b = 0; b < m; ++b)
            if (s(g, s(h, x, a), s(h, x, b)) != s(h, x, s(g, a, b))) return false;
  return true;
}

bool transitive_oracle(const BinaryGSpace& s) {
  for (Index x = 0; x < s.carrier_size(); ++x)
    if (oracle::image(s, {x}).size() != s.carrier_size()) return false;
  return true;
}

bool free_oracle(const BinaryGSpace& s) {
  for (Index x = 0; x < s.carrier_size(); ++x)
    if (isotropy_oracle(s, x).size() != 1) return false;
  return true;
}

std::vector<BinaryGSpace> census_family() {
  auto out = enumerate_binary_actions(cyclic_group(2), 2);
  const auto three = enumerate_binary_actions(cyclic_group(2), 3);
  out.insert(out.end(), three.begin(), three.end());
  return out;
}

std::vector<BinaryGSpace> implication_suite() {
  auto out = census_family();
  const auto z4 = cyclic_group(4);
  const auto homs = enumerate_homomorphisms(z4, 3);
  std::mt19937_64 rng(kRandomSuiteSeed);
  for (std::size_t i = 0; i < kRandomSpaces; ++i) out.push_back(random_binary_action(z4, homs, 3, rng));
  return out;
}

// --- criteria -----------------------------------------------------------------

Outcome z5_example() {
  Outcome o;
  Stopwatch t;
  const auto s = z5_multiplicative_space();
  const Index one = *s.find_point("1"), two = *s.find_point("2"), three = *s.find_point("3");
  const auto c1 = orbit(s, one);
  const auto c2 = orbit(s, two);
  o.require(as_set(c1.chain.front()) == all_points(4), "G^1(1) != X");
  o.require(c1.step == std::optional<std::size_t>{1}, "step at 1 != 1");
  o.require(as_set(c2.chain.at(0)) == oracle::Set{two, three}, "G^1(2) != {2,3}");
  o.require(c2.chain.size() >= 2 && as_set(c2.chain[1]) == all_points(4), "G^2(2) != X");
  o.require(c2.step == std::optional<std::size_t>{2}, "step at 2 != 2");
  o.require(oracle::naive_chain(s, two).front() == oracle::Set{two, three}, "oracle G^1(2)");
  o.require(oracle::naive_step(s, one) == c1.step && oracle::naive_step(s, two) == c2.step,
            "oracle steps disagree");
  const double secs = t.seconds();
  o.require(secs < kFastSeconds, "took " + fmt(secs) + " s");
  if (o.pass) o.detail = "steps 1 and 2 in " + fmt(secs) + " s";
  return o;
}

Outcome s3_example() {
  Outcome o;
  Stopwatch t;
  const auto s = s3_conjugation_space();
  const auto id = [&](const char* l) { return *s.find_point(l); };
  const Index x = id("x");
  const auto r = orbit(s, x);
  const std::vector<oracle::Set> expected{
      {x, id("xh")}, {id("e"), id("h"), x, id("xh")}, all_points(6)};
  o.require(r.chain.size() == 3, "chain length " + std::to_string(r.chain.size()));
  for (std::size_t i = 0; i < std::min<std::size_t>(3, r.chain.size()); ++i) {
    o.require(as_set(r.chain[i]) == expected[i], "level " + std::to_string(i + 1) + " differs");
  }
  o.require(r.step == std::optional<std::size_t>{3}, "step != 3");
  o.require(oracle::naive_chain(s, x) == expected, "oracle chain differs");
  const double secs = t.seconds();
  o.require(secs < kFastSeconds, "took " + fmt(secs) + " s");
  if (o.pass) o.detail = "chain 2,4,6 step 3 in " + fmt(secs) + " s";
  return o;
}

Outcome windowed_integers() {
  Outcome o;
  const WindowedIntSpace w(kWindow);
  const auto r1 = w.orbit(1);
  o.require(r1.step == std::optional<std::size_t>{1}, "point 1 step != 1");
  const auto r0 = w.orbit(0);
  o.require(r0.orbit().size() == 1 && w.point_value(r0.orbit()[0]) == 0, "orbit of 0 != {0}");
  o.require(!r0.step, "point 0 has a step");
  std::set<std::int64_t> evens, got;
  for (std::int64_t v = -kWindow; v <= kWindow; ++v)
    if (v % 2 == 0) evens.insert(v);
  const auto r2 = w.orbit(2);
  for (Index p : r2.orbit()) got.insert(w.point_value(p));
  o.require(got == evens, "orbit of 2 is not the evens in range");
  if (o.pass) o.detail = "N=50, orbit(2) = " + std::to_string(evens.size()) + " evens";
  return o;
}

Outcome coset_actions() {
  Outcome o;
  const auto s3 = symmetric_group(3);
  const auto z4 = cyclic_group(4);
  for (const auto& [g, members] :
       {std::pair{s3, std::vector<Index>{0, 3, 4}}, std::pair{z4, std::vector<Index>{0, 2}}}) {
    try {
      const auto space = coset_action(g, Subgroup(g, members));
      validate_action(space);
      o.require(transitive_oracle(space), "coset action not transitive");
    } catch (const Error& e) {
      o.require(false, e.what());
    }
  }
  const Subgroup h(s3, {0, 2});
  try {
    coset_action(s3, h);
    o.require(false, "non-normal subgroup accepted");
  } catch (const NotNormal& e) {
    const auto& w = e.witness();
    const CosetSpace cs(s3, h);
    const bool same_inputs =
        cs.coset_of(w.g1) == cs.coset_of(w.g1_alt) && cs.coset_of(w.g2) == cs.coset_of(w.g2_alt);
    const Index c = cs.coset_of(s3.product({w.g1, w.g, s3.inverse(w.g1), w.g2}));
    const Index c_alt = cs.coset_of(s3.product({w.g1_alt, w.g, s3.inverse(w.g1_alt), w.g2_alt}));
    o.require(same_inputs && c == w.coset && c_alt == w.coset_alt && c != c_alt,
              "NotNormal witness does not replay");
  }
  if (o.pass) o.detail = "A3 and {0,2} accepted, {e,(12)} rejected with replayed witness";
  return o;
}

Outcome classification_round_trip() {
  Outcome o;
  Stopwatch t;
  std::size_t cases = 0;
  const std::vector<FiniteGroup> groups{cyclic_group(2), cyclic_group(3), cyclic_group(4),
                                        direct_product(cyclic_group(2), cyclic_group(2)),
                                        symmetric_group(3)};
  for (const auto& g : groups) {
    for (const auto& h : normal_subgroups(g)) {
      ++cases;
      const auto space = coset_action(g, h);
      try {
        const auto cls = classify_transitive_distributive(space);
        o.require(cls.subgroup == h, "recovered subgroup differs");
        o.require(biequimorphism(cls.map.source(), space, cls.map.map()),
                  "classification map fails the direct check");
      } catch (const Error& e) {
        o.require(false, e.what());
      }
    }
  }
  std::size_t census_cases = 0;
  for (const auto& s : census_family()) {
    if (!(transitive_oracle(s) && distributive_oracle(s))) continue;
    ++census_cases;
    try {
      const auto cls = classify_transitive_distributive(s);
      const auto& m = cls.subgroup.members();
      o.require(oracle::Set(m.begin(), m.end()) == isotropy_oracle(s, 0), "isotropy differs");
      o.require(biequimorphism(cls.map.source(), s, cls.map.map()), "census map fails");
    } catch (const Error& e) {
      o.require(false, e.what());
    }
  }
  o.require(census_cases > 0, "no transitive distributive census spaces");
  const double secs = t.seconds();
  o.require(secs < kClassifySeconds, "took " + fmt(secs) + " s");
  if (o.pass) {
    o.detail = std::to_string(cases) + " coset spaces + " + std::to_string(census_cases) +
               " census spaces in " + fmt(secs) + " s";
  }
  return o;
}

Outcome free_spaces() {
  Outcome o;
  std::size_t cases = 0;
  for (const auto& s : census_family()) {
    if (!(free_oracle(s) && transitive_oracle(s) && distributive_oracle(s))) continue;
    ++cases;
    const auto eta = standard_distributive_action(s.group());
    try {
      const auto map = verify_theorem2(s);
      o.require(biequimorphism(s, eta, map.map()), "map to eta fails the direct check");
    } catch (const Error& e) {
      o.require(false, e.what());
    }
    bool found = false;
    for (const auto& m : find_biequivariant_maps(eta, s))
      found = found || biequimorphism(eta, s, m.map());
    o.require(found, "no biequimorphism from eta found by search");
  }
  o.require(cases > 0, "no free transitive distributive census spaces");
  if (o.pass) o.detail = std::to_string(cases) + " free transitive distributive spaces";
  return o;
}

Outcome prop2() {
  Outcome o;
  Stopwatch t;
  std::size_t pairs = 0;
  for (const auto& g : {cyclic_group(4), direct_product(cyclic_group(2), cyclic_group(2)),
                        symmetric_group(3)}) {
    const auto normals = normal_subgroups(g);
    for (const auto& h : normals) {
      for (const auto& k : normals) {
        ++pairs;
        const bool contained = std::includes(k.members().begin(), k.members().end(),
                                             h.members().begin(), h.members().end());
        try {
          const auto r = verify_prop2(g, h, k);
          o.require(r.holds && r.contained == contained, "biconditional fails");
          if (r.example) {
            o.require(equivariant(coset_action(g, h), coset_action(g, k), *r.example),
                      "example map not equivariant");
          }
        } catch (const Error& e) {
          o.require(false, e.what());
        }
      }
    }
  }
  const double secs = t.seconds();
  o.require(secs < kProp2Seconds, "took " + fmt(secs) + " s");
  if (o.pass) o.detail = std::to_string(pairs) + " ordered pairs in " + fmt(secs) + " s";
  return o;
}

Outcome implications() {
  Outcome o;
  std::mt19937_64 rng(kRandomSuiteSeed + 1);
  PropertyTally tally;
  const auto suite = implication_suite();
  for (const auto& s : suite) {
    check_implications(s, rng, tally);
    // independent restatement of the implications on raw tables
    const bool dist = distributive_oracle(s), trans = transitive_oracle(s);
    bool homog = false;
    for (Index x = 0; x < s.carrier_size(); ++x) {
      const auto chain = oracle::naive_chain(s, x);
      homog = homog || chain.back().size() == s.carrier_size();
      for (std::size_t i = 1; i < chain.size(); ++i)
        o.require(std::includes(chain[i].begin(), chain[i].end(), chain[i - 1].begin(),
                                chain[i - 1].end()),
                  "oracle chain not monotone");
      if (dist) o.require(chain.back() == chain.front(), "distributive but [x] != G(x,x)");
    }
    if (dist && homog) o.require(trans, "distributive homogeneous space not transitive");
    if (trans) o.require(homog, "transitive space not homogeneous");
  }
  o.require(tally.clean(), std::to_string(tally.violations.size()) + " library violations" +
                               (tally.clean() ? "" : " (first: " + tally.violations[0].property +
                                                         " " + tally.violations[0].detail + ")"));
  std::size_t checks = 0;
  for (const auto& [name, n] : tally.checks) checks += n;
  if (o.pass) {
    o.detail = std::to_string(suite.size()) + " spaces, " + std::to_string(checks) +
               " checks, 0 violations";
  }
  return o;
}

Outcome translations() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& s : implication_suite()) {
    for (Index x0 = 0; x0 < s.carrier_size(); ++x0) {
      const auto chain = oracle::naive_chain(s, x0);
      if (chain.back().size() != s.carrier_size()) continue;
      for (Index target : chain.back()) {
        ++checked;
        try {
          const auto tr = point_translation(s, x0, target);
          // recompose the slice maps independently
          std::vector<Index> map(s.carrier_size());
          for (Index y = 0; y < s.carrier_size(); ++y) {
            Index v = y;
            for (const auto& f : tr.factors) v = s(f.g, f.anchor, v);
            map[y] = v;
          }
          o.require(map == tr.map.images(), "factors do not compose to the map");
          o.require(bijective(map) && map[x0] == target, "not a bijection sending x0 to x*");
        } catch (const Error& e) {
          o.require(false, e.what());
        }
      }
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " translations verified";
  return o;
}

Outcome continuum() {
  Outcome o;
  Stopwatch t;
  for (std::size_t dim : {2u, 3u, 4u}) {
    const EuclideanAction a(dim, kAxiomTolerance, kReachTolerance);
    const auto ax = check_axioms_sampled(a, kAxiomSamples, kContinuumSeed);
    o.require(ax.max_identity < kAxiomTolerance && ax.max_composition < kAxiomTolerance,
              "dim " + std::to_string(dim) + " axiom residual " + fmt(ax.max_composition));
    // reach: random targets, evaluated and compared here
    auto rng = sample_rng(kContinuumSeed, 7);
    std::uniform_real_distribution<double> u(-10, 10);
    for (std::size_t i = 0; i < kReachSamples; ++i) {
      Vector z(dim);
      for (auto& c : z) c = u(rng);
      const auto term = reach(a, z);
      const auto v = term.evaluate(a);
      double err = 0;
      for (std::size_t j = 0; j < dim; ++j) err = std::max(err, std::abs(v[j] - z[j]));
      o.require(err < kReachTolerance && term.depth() <= dim,
                "dim " + std::to_string(dim) + " reach error " + fmt(err));
    }
    for (std::size_t k = 0; k <= dim; ++k) {
      const auto w = subspace_witness(a, k, kContinuumSeed, kInclusionSamples, kReachSamples);
      o.require(w.max_tail < kTailTolerance, "dim " + std::to_string(dim) + " k " +
                                                  std::to_string(k) + " tail " + fmt(w.max_tail));
      o.require(w.surjectivity_pass, "dim " + std::to_string(dim) + " k " + std::to_string(k) +
                                         " reach within R^k failed");
    }
  }
  const double secs = t.seconds();
  o.require(secs < kContinuumSeconds, "took " + fmt(secs) + " s");
  if (o.pass) o.detail = "dims 2-4 in " + fmt(secs) + " s";
  return o;
}

std::string golden_dir = BINACT_GOLDEN_DIR;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome dihedral_family() {
  Outcome o;
  const std::string path = golden_dir + "/dihedral_steps.json";
  const std::string golden = slurp(path);
  o.require(!golden.empty(), "missing golden " + path);
  const std::string oracle_text = oracle::dihedral_family(kDihedralMs).dump(2) + "\n";
  const std::string impl_text = cli::dihedral_family(kDihedralMs).dump(2) + "\n";
  o.require(oracle_text == golden, "oracle rerun differs from golden");
  o.require(impl_text == golden, "implementation differs from golden");
  const auto family = nlohmann::json::parse(impl_text)["family"];
  std::size_t max_step = 0;
  std::string steps;
  for (const auto& row : family) {
    steps += (steps.empty() ? "" : ",") + row["step"].dump();
    if (row["step"].is_number()) max_step = std::max(max_step, row["step"].get<std::size_t>());
  }
  o.require(family.at(0)["step"] == 3, "step at m=3 is not 3");
  o.require(max_step > 3, "max step " + std::to_string(max_step) + " does not exceed 3 (steps " +
                              steps + ")");
  if (o.pass) o.detail = "steps " + steps;
  return o;
}

Outcome enumeration_oracle() {
  Outcome o;
  std::set<std::vector<Index>> got;
  for (const auto& s : enumerate_binary_actions(cyclic_group(2), 2)) got.insert(s.mu());
  const auto raw = oracle::z2_on_two_points_raw();
  o.require(got == raw, "enumerated " + std::to_string(got.size()) + " vs filtered " +
                            std::to_string(raw.size()));
  if (o.pass) o.detail = std::to_string(raw.size()) + " of 256 raw tables";
  return o;
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string flag = argv[i];
    if (flag == "--criterion") only = std::atoi(argv[i + 1]);
    else if (flag == "--golden") golden_dir = argv[i + 1];
  }
  const std::vector<Criterion> criteria{
      {1, "z5 chain and steps", z5_example},
      {2, "s3 chain at the generator", s3_example},
      {3, "windowed integers", windowed_integers},
      {4, "coset actions and normality", coset_actions},
      {5, "classification round trip", classification_round_trip},
      {6, "free spaces are eta-spaces", free_spaces},
      {7, "map existence iff containment", prop2},
      {8, "implication suite", implications},
      {9, "point translations", translations},
      {10, "continuum action", continuum},
      {11, "dihedral step growth", dihedral_family},
      {12, "enumeration vs raw filter", enumeration_oracle},
  };
  bool all = true;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << ": " << o.detail
              << std::endl;
  }
  return all ? 0 : 1;
}
