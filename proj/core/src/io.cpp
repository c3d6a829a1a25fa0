#include "binact/io.hpp"

#include <fstream>

#include "binact/gallery.hpp"

namespace binact {

namespace {

template <class T>
T field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw ShapeError(std::string("missing field \"") + key + "\"");
  }
  try {
    return doc.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ShapeError(std::string("field \"") + key + "\": " + e.what());
  }
}

std::vector<std::string> optional_strings(const Json& doc, const char* key) {
  if (!doc.contains(key) || doc.at(key).is_null()) return {};
  return field<std::vector<std::string>>(doc, key);
}

}  // namespace

Json group_to_json(const FiniteGroup& group) {
  Json doc{{"order", group.order()}, {"table", group.table()}};
  if (group.has_names()) doc["names"] = group.names();
  return doc;
}

FiniteGroup group_from_json(const Json& doc) {
  const auto order = field<std::size_t>(doc, "order");
  auto table = field<std::vector<std::vector<Index>>>(doc, "table");
  if (table.size() != order) {
    throw ShapeError("\"order\" is " + std::to_string(order) + " but the table has " +
                     std::to_string(table.size()) + " rows");
  }
  return FiniteGroup(std::move(table), optional_strings(doc, "names"));
}

Json space_to_json(const BinaryGSpace& space) {
  const std::size_t n = space.group_order(), m = space.carrier_size();
  Json mu = Json::array();
  for (Index g = 0; g < n; ++g) {
    Json rows = Json::array();
    for (Index x = 0; x < m; ++x) {
      Json row = Json::array();
      for (Index y = 0; y < m; ++y) row.push_back(space(g, x, y));
      rows.push_back(std::move(row));
    }
    mu.push_back(std::move(rows));
  }
  Json doc{{"group", group_to_json(space.group())}, {"carrier", m}, {"mu", std::move(mu)}};
  if (space.has_labels()) doc["labels"] = space.labels();
  return doc;
}

BinaryGSpace space_from_json(const Json& doc, const std::filesystem::path& base_dir) {
  if (!doc.is_object() || !doc.contains("group")) throw ShapeError("missing field \"group\"");
  const Json& group_doc = doc.at("group");
  std::optional<FiniteGroup> group;
  if (group_doc.is_string()) {
    const auto ref = group_doc.get<std::string>();
    group = parse_group_name(ref);
    if (!group) group = load_group(base_dir / ref);
  } else {
    group = group_from_json(group_doc);
  }
  const auto m = field<std::size_t>(doc, "carrier");
  const auto mu = field<std::vector<std::vector<std::vector<Index>>>>(doc, "mu");
  if (mu.size() != group->order()) {
    throw ShapeError("\"mu\" has " + std::to_string(mu.size()) + " slices, group order is " +
                     std::to_string(group->order()));
  }
  std::vector<Index> flat;
  flat.reserve(group->order() * m * m);
  for (const auto& slice : mu) {
    if (slice.size() != m) throw ShapeError("\"mu\" slice does not have carrier rows");
    for (const auto& row : slice) {
      if (row.size() != m) throw ShapeError("\"mu\" row does not have carrier entries");
      flat.insert(flat.end(), row.begin(), row.end());
    }
  }
  BinaryGSpace space(*group, m, std::move(flat), optional_strings(doc, "labels"));
  validate_action(space);
  return space;
}

Json bimap_to_json(const BiMap& map) {
  return Json{{"map", map.map()}, {"checked", map.certificate().checked && map.is_biequivariant()}};
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ShapeError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ShapeError(path.string() + ": " + e.what());
  }
}

FiniteGroup load_group(const std::filesystem::path& path) {
  return group_from_json(read_json_file(path));
}

BinaryGSpace load_space(const std::filesystem::path& path) {
  return space_from_json(read_json_file(path), path.parent_path());
}

}  // namespace binact
