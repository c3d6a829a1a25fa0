#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "binact/gallery.hpp"
#include "binact/io.hpp"

using namespace binact;

TEST_CASE("space JSON round trip") {
  const auto s = s3_conjugation_space();
  const auto back = space_from_json(space_to_json(s));
  CHECK(back == s);
  CHECK(back.labels() == s.labels());
}

TEST_CASE("group by name inside a space file") {
  const Json doc{{"group", "z2"}, {"carrier", 2}, {"mu", {{{0, 1}, {0, 1}}, {{1, 0}, {1, 0}}}}};
  const auto s = space_from_json(doc);
  CHECK(s.group_order() == 2);
  CHECK(s(1, 0, 0) == 1);
}

TEST_CASE("group file referenced relative to the space file") {
  const auto dir = std::filesystem::temp_directory_path() / "binact_io_test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream(dir / "z3.json") << group_to_json(cyclic_group(3)).dump();
    const Json space{{"group", "z3.json"}, {"carrier", 1}, {"mu", {{{0}}, {{0}}, {{0}}}}};
    std::ofstream(dir / "space.json") << space.dump();
  }
  CHECK(load_space(dir / "space.json").group_order() == 3);
  std::filesystem::remove_all(dir);
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_AS(group_from_json(Json{{"order", 3}, {"table", {{0, 1}, {1, 0}}}}), ShapeError);
  CHECK_THROWS_AS(group_from_json(Json{{"table", {{0}}}}), ShapeError);
  const Json bad{{"group", "z2"}, {"carrier", 2}, {"mu", {{{0, 1}, {0, 1}}, {{0, 0}, {1, 1}}}}};
  CHECK_THROWS_AS(space_from_json(bad), AxiomViolation);
  CHECK_THROWS_AS(load_space("/nonexistent/space.json"), ShapeError);
}
