#include <doctest.h>

#include "binact/gallery.hpp"
#include "oracles.hpp"

using namespace binact;

TEST_CASE("coset action over a normal subgroup") {
  const auto s3 = symmetric_group(3);
  const auto space = coset_action(s3, Subgroup(s3, {0, 3, 4}));
  CHECK(space.carrier_size() == 2);
  CHECK_NOTHROW(validate_action(space));
  CHECK(is_transitive(space));
  CHECK(is_distributive(space));
}

TEST_CASE("coset action rejects a non-normal subgroup with a witness") {
  const auto s3 = symmetric_group(3);
  const Subgroup h(s3, {0, 2});
  try {
    coset_action(s3, h);
    FAIL("expected NotNormal");
  } catch (const NotNormal& e) {
    const auto& w = e.witness();
    const CosetSpace cs(s3, h);
    // both representative pairs name the same cosets but land in different ones
    CHECK(cs.coset_of(w.g1) == cs.coset_of(w.g1_alt));
    CHECK(cs.coset_of(w.g2) == cs.coset_of(w.g2_alt));
    CHECK(w.coset != w.coset_alt);
    CHECK(cs.coset_of(s3.product({w.g1, w.g, s3.inverse(w.g1), w.g2})) == w.coset);
    CHECK(cs.coset_of(s3.product({w.g1_alt, w.g, s3.inverse(w.g1_alt), w.g2_alt})) ==
          w.coset_alt);
  }
}

TEST_CASE("z5 multiplicative example") {
  const auto s = z5_multiplicative_space();
  CHECK_NOTHROW(validate_action(s));
  CHECK(oracle::naive_step(s, 0) == std::optional<std::size_t>{1});
  CHECK(oracle::naive_step(s, 1) == std::optional<std::size_t>{2});
  CHECK(oracle::naive_chain(s, 1).front() == oracle::Set{1, 2});
  CHECK(oracle::minimal_biinvariant(s, 3) == oracle::Set{3});
}

TEST_CASE("s3 conjugation example") {
  const auto s = s3_conjugation_space();
  CHECK_NOTHROW(validate_action(s));
  CHECK(s.label(1) == "x");
  CHECK(stabilization_step(s, 1) == std::optional<std::size_t>{3});
}

TEST_CASE("dihedral family agrees with the m-gon construction") {
  for (std::size_t m : {3u, 4u, 5u, 6u, 8u}) {
    const auto s = dihedral_conjugation_space(m);
    CHECK_NOTHROW(validate_action(s));
    const auto run = oracle::dihedral_run(m);
    const auto report = orbit(s, dihedral_base_point(m));
    REQUIRE(report.chain.size() == run.chain_sizes.size());
    for (std::size_t i = 0; i < run.chain_sizes.size(); ++i) {
      CHECK(report.chain[i].size() == run.chain_sizes[i]);
    }
    CHECK(report.step == run.step);
  }
}

TEST_CASE("windowed integers") {
  const WindowedIntSpace w(5);
  CHECK(w.apply(-2, 3, 1) == std::optional<std::int64_t>{-5});
  CHECK(w.apply(1, 2, 1) == std::optional<std::int64_t>{3});
  CHECK_FALSE(w.apply(3, 2, 1).has_value());
  const auto r0 = w.orbit(0);
  CHECK(r0.orbit().size() == 1);
  CHECK_FALSE(r0.step);
  CHECK(w.orbit(1).step == std::optional<std::size_t>{1});
  const auto r2 = w.orbit(2);
  for (Index p : r2.orbit()) CHECK(w.point_value(p) % 2 == 0);
  CHECK(r2.orbit().size() == 5);
}

TEST_CASE("gallery name resolution") {
  CHECK(resolve_gallery("s3"));
  CHECK(resolve_gallery("dihedral:5")->space->carrier_size() == 10);
  CHECK(resolve_gallery("eta:z3")->space->carrier_size() == 3);
  CHECK(resolve_gallery("coset:s3:(123)")->space->carrier_size() == 2);
  CHECK(resolve_gallery("zwin:7")->windowed->window() == 7);
  CHECK_FALSE(resolve_gallery("no-such-space"));
  CHECK(parse_group_name("klein")->order() == 4);
  CHECK(parse_group_name("d4")->order() == 8);
  CHECK_FALSE(parse_group_name("q8"));
}

TEST_CASE("dihedral steps grow along odd m") {
  const std::vector<std::pair<std::size_t, std::size_t>> expected{{3, 3}, {7, 4}, {15, 5}, {43, 6}};
  for (const auto& [m, step] : expected) {
    const auto s = dihedral_conjugation_space(m);
    CHECK(stabilization_step(s, dihedral_base_point(m)) == std::optional<std::size_t>{step});
    CHECK(oracle::dihedral_run(m).step == std::optional<std::size_t>{step});
  }
}
