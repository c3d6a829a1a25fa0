#include <doctest.h>

#include <cmath>
#include <numbers>

#include "binact/continuum.hpp"
#include "binact/errors.hpp"
#include "oracles.hpp"

using namespace binact;

TEST_CASE("direction matches explicit spherical coordinates") {
  const EuclideanAction a(4);
  const std::vector<double> angles{0.3, 1.1, -2.0};
  const auto d = a.direction(Vector{0.3, 1.1, -2.0, 7.0});
  const auto ref = oracle::spherical_to_cartesian(1.0, angles);
  for (std::size_t i = 0; i < 4; ++i) CHECK(d[i] == doctest::Approx(ref[i]).epsilon(1e-14));
}

TEST_CASE("inverse coordinates round trip") {
  const EuclideanAction a(4);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-10, 10);
  for (std::size_t k = 2; k <= 4; ++k) {
    for (int i = 0; i < 50; ++i) {
      Vector z(4, 0.0);
      for (std::size_t j = 0; j < k; ++j) z[j] = u(rng);
      const auto hs = hyperspherical_inverse(a, z, k);
      const auto back = oracle::spherical_to_cartesian(hs.radius, hs.angles);
      for (std::size_t j = 0; j < k; ++j) CHECK(std::abs(back[j] - z[j]) < 1e-9);
      for (std::size_t j = 0; j + 2 < k; ++j) {
        CHECK(hs.angles[j] >= 0.0);
        CHECK(hs.angles[j] <= std::numbers::pi);
      }
    }
  }
}

TEST_CASE("inverse edge cases") {
  const EuclideanAction a(3);
  CHECK(hyperspherical_inverse(a, Vector{-2.5, 0, 0}, 1).radius == -2.5);
  CHECK(hyperspherical_inverse(a, Vector{0, 0, 0}, 0).angles.empty());
  CHECK_THROWS_AS(hyperspherical_inverse(a, Vector{1, 2, 3}, 2), TailNotZero);
  CHECK_THROWS_AS(a.apply(1.0, Vector{1, 2}, Vector{1, 2, 3}), DimensionMismatch);
}

TEST_CASE("reach builds a shallow term") {
  const EuclideanAction a(3);
  for (const Vector& z : {Vector{1, 2, 3}, Vector{0, 0, 5}, Vector{-4, 0, 0}, Vector{0, 0, 0}}) {
    const auto t = reach(a, z);
    CHECK(t.depth() <= 3);
    const auto v = t.evaluate(a);
    for (std::size_t i = 0; i < 3; ++i) CHECK(std::abs(v[i] - z[i]) < 1e-9);
  }
}

TEST_CASE("axioms and witnesses pass at default tolerances") {
  const EuclideanAction a(2);
  CHECK(check_axioms_sampled(a, 200, 3).pass);
  const auto w = subspace_witness(a, 1, 3, 200, 50);
  CHECK(w.inclusion_pass);
  CHECK(w.surjectivity_pass);
}

TEST_CASE("one-dimensional action is translation") {
  const EuclideanAction a(1);
  CHECK(a.apply(2.0, Vector{9.0}, Vector{1.0})[0] == 3.0);
}
