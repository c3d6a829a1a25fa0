#include <doctest.h>

#include "binact/action.hpp"
#include "binact/enumerate.hpp"
#include "binact/gallery.hpp"
#include "oracles.hpp"

using namespace binact;

namespace {

oracle::Set as_set(const PointSet& p) { return {p.begin(), p.end()}; }

}  // namespace

TEST_CASE("validate_action finds the first bad tuple") {
  const auto z2 = cyclic_group(2);
  // e(x,y) = y everywhere, but g swaps only when x = 0 and then maps 1 -> 1 as well.
  const BinaryGSpace bad(z2, 2, {0, 1, 0, 1, 0, 0, 0, 1});
  try {
    validate_action(bad);
    FAIL("expected AxiomViolation");
  } catch (const AxiomViolation& e) {
    CHECK(e.law() == AxiomViolation::Law::composition);
  }
  const BinaryGSpace no_identity(z2, 2, {1, 0, 0, 1, 0, 1, 0, 1});
  CHECK_THROWS_AS(validate_action(no_identity), AxiomViolation);
  CHECK_THROWS_AS(BinaryGSpace(z2, 2, {0, 1}), ShapeError);
}

TEST_CASE("orbit chain matches the naive chain on every Z2 x 3-point space") {
  const auto spaces = enumerate_binary_actions(cyclic_group(2), 3);
  REQUIRE(spaces.size() == 64);
  for (const auto& s : spaces) {
    for (Index x = 0; x < 3; ++x) {
      const auto report = orbit(s, x);
      const auto naive = oracle::naive_chain(s, x);
      REQUIRE(report.chain.size() == naive.size());
      for (std::size_t i = 0; i < naive.size(); ++i) CHECK(as_set(report.chain[i]) == naive[i]);
      CHECK(report.step == oracle::naive_step(s, x));
      CHECK(as_set(report.orbit()) == oracle::minimal_biinvariant(s, x));
    }
  }
}

TEST_CASE("witnesses replay") {
  const auto s = s3_conjugation_space();
  const auto report = orbit(s, 1);
  for (Index p = 0; p < s.carrier_size(); ++p) {
    REQUIRE(report.witnesses[p].has_value());
    const auto& w = *report.witnesses[p];
    if (p == report.base) continue;
    CHECK(s(w.g, w.first, w.second) == p);
    if (w.level == 1) {
      CHECK(w.first == report.base);
      CHECK(w.second == report.base);
    } else {
      // both inputs were known one level earlier
      CHECK(report.witnesses[w.first]->level < w.level);
      CHECK(report.witnesses[w.second]->level < w.level);
    }
  }
}

TEST_CASE("predicates on the standard distributive action") {
  const auto eta = standard_distributive_action(symmetric_group(3));
  CHECK(is_distributive(eta));
  CHECK(is_transitive(eta));
  CHECK(is_free(eta));
  CHECK(is_homogeneous(eta).stabilization_points.size() == 6);
  for (Index x = 0; x < 6; ++x) CHECK(isotropy(eta, x).is_trivial());
}

TEST_CASE("slice homomorphism is a homomorphism") {
  const auto s = s3_conjugation_space();
  const auto& g = s.group();
  for (Index x = 0; x < s.carrier_size(); ++x) {
    const auto phi = slice_homomorphism(s, x);
    for (Index a = 0; a < g.order(); ++a)
      for (Index b = 0; b < g.order(); ++b) CHECK(phi[g.mul(a, b)] == phi[a].after(phi[b]));
  }
}

TEST_CASE("point translation sends source to target") {
  const auto s = z5_multiplicative_space();
  const Index source = 1;  // residue 2
  const auto report = orbit(s, source);
  for (Index t : report.orbit()) {
    const auto tr = point_translation(s, report, t);
    CHECK(tr.map(source) == t);
    CHECK(evaluate_factors(s, tr.factors) == tr.map);
  }
  CHECK_THROWS_AS(point_translation(s, 3, 0), NotInOrbit);
}
