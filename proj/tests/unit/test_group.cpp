#include <doctest.h>

#include "binact/group.hpp"

using namespace binact;

TEST_CASE("cyclic and dihedral tables") {
  const auto z4 = cyclic_group(4);
  CHECK(z4.order() == 4);
  CHECK(z4.mul(3, 2) == 1);
  CHECK(z4.inverse(1) == 3);
  CHECK(z4.element_order(2) == 2);

  const auto d4 = dihedral_group(4);
  CHECK(d4.order() == 8);
  const Index r = 1, s = 4;
  CHECK(d4.element_order(r) == 4);
  CHECK(d4.element_order(s) == 2);
  // s r s = r^-1
  CHECK(d4.product({s, r, s}) == d4.inverse(r));
  CHECK(d4.name(0) == "e");
  CHECK(d4.find("s") == std::optional<Index>{s});
}

TEST_CASE("symmetric group layout") {
  const auto s3 = symmetric_group(3);
  REQUIRE(s3.order() == 6);
  CHECK(s3.name(2) == "(12)");
  CHECK(is_normal(s3, Subgroup(s3, {0, 3, 4})));
  CHECK_FALSE(is_normal(s3, Subgroup(s3, {0, 2})));
  CHECK(normal_subgroups(s3).size() == 3);
  CHECK(all_subgroups(s3).size() == 6);
}

TEST_CASE("table validation reports the failing law") {
  SUBCASE("out of range") {
    try {
      make_group({{0, 2}, {1, 0}});
      FAIL("expected NotAGroup");
    } catch (const NotAGroup& e) {
      CHECK(e.reason() == NotAGroup::Reason::range);
    }
  }
  SUBCASE("repeated column entry") {
    try {
      make_group({{0, 1}, {0, 1}});
      FAIL("expected NotAGroup");
    } catch (const NotAGroup& e) {
      CHECK(e.reason() == NotAGroup::Reason::inverses);
    }
  }
  SUBCASE("no identity at index 0") {
    CHECK_THROWS_AS(make_group({{1, 0}, {0, 1}}), NotAGroup);
  }
  SUBCASE("latin square that is not associative") {
    // A loop of order 5 that is not a group.
    const std::vector<std::vector<Index>> t{
        {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
    try {
      make_group(t);
      FAIL("expected NotAGroup");
    } catch (const NotAGroup& e) {
      CHECK(e.reason() == NotAGroup::Reason::associativity);
    }
  }
}

TEST_CASE("subgroups and cosets") {
  const auto z6 = cyclic_group(6);
  const Index gen[] = {2};
  const auto h = subgroup_closure(z6, gen);
  CHECK(h.members() == std::vector<Index>{0, 2, 4});
  CHECK_THROWS_AS(Subgroup(z6, {0, 1}), NotASubgroup);

  const CosetSpace cs(z6, h);
  CHECK(cs.size() == 2);
  CHECK(cs.coset_of(5) == 1);
  CHECK(cs.representative(1) == 1);
  CHECK(trivial_subgroup(z6).is_subset_of(h));
  CHECK(h.is_subset_of(whole_group(z6)));
}

TEST_CASE("direct product") {
  const auto k = direct_product(cyclic_group(2), cyclic_group(2));
  CHECK(k.order() == 4);
  for (Index a = 0; a < 4; ++a) CHECK(k.mul(a, a) == 0);
  CHECK(normal_subgroups(k).size() == 5);
}
