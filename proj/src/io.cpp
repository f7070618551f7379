#include "dtg/io.hpp"

#include <sstream>

namespace dtg {

namespace {

const nlohmann::json& require(const nlohmann::json& j, const std::string& key,
                              const std::string& field) {
  if (!j.is_object()) throw SchemaError(field, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(field + "." + key, "missing");
  return *it;
}

int require_int(const nlohmann::json& j, const std::string& field) {
  if (!j.is_number_integer()) throw SchemaError(field, "expected an integer");
  return j.get<int>();
}

}  // namespace

nlohmann::ordered_json image_to_json(const DigitalImage& image) {
  nlohmann::ordered_json j;
  j["dimension"] = image.dimension();
  auto points = nlohmann::ordered_json::array();
  for (const Point& p : image.points()) points.push_back(p.coords);
  j["points"] = std::move(points);
  nlohmann::ordered_json adj;
  if (image.adjacency().kind() == Adjacency::Kind::CU) {
    adj["type"] = "cu";
    adj["u"] = image.adjacency().u();
  } else {
    adj["type"] = "explicit";
    auto edges = nlohmann::ordered_json::array();
    for (const auto& [a, b] : image.adjacency().edges()) {
      edges.push_back({a, b});
    }
    adj["edges"] = std::move(edges);
  }
  j["adjacency"] = std::move(adj);
  return j;
}

DigitalImage image_from_json(const nlohmann::json& j, const std::string& field) {
  const int dimension = require_int(require(j, "dimension", field),
                                    field + ".dimension");
  const auto& points_json = require(j, "points", field);
  if (!points_json.is_array()) {
    throw SchemaError(field + ".points", "expected an array");
  }
  std::vector<Point> points;
  for (std::size_t i = 0; i < points_json.size(); ++i) {
    const auto& pj = points_json[i];
    const std::string pfield = field + ".points[" + std::to_string(i) + "]";
    if (!pj.is_array()) throw SchemaError(pfield, "expected an array");
    Point p;
    for (const auto& c : pj) {
      if (!c.is_number_integer()) {
        throw SchemaError(pfield, "expected integer coordinates");
      }
      p.coords.push_back(c.get<Coord>());
    }
    points.push_back(std::move(p));
  }

  const auto& adj_json = require(j, "adjacency", field);
  const auto& type = require(adj_json, "type", field + ".adjacency");
  if (!type.is_string()) {
    throw SchemaError(field + ".adjacency.type", "expected a string");
  }
  try {
    if (type.get<std::string>() == "cu") {
      const int u = require_int(require(adj_json, "u", field + ".adjacency"),
                                field + ".adjacency.u");
      return DigitalImage(dimension, std::move(points), Adjacency::cu(u));
    }
    if (type.get<std::string>() == "explicit") {
      const auto& edges_json =
          require(adj_json, "edges", field + ".adjacency");
      if (!edges_json.is_array()) {
        throw SchemaError(field + ".adjacency.edges", "expected an array");
      }
      std::vector<std::pair<int, int>> edges;
      for (std::size_t i = 0; i < edges_json.size(); ++i) {
        const auto& ej = edges_json[i];
        const std::string efield =
            field + ".adjacency.edges[" + std::to_string(i) + "]";
        if (!ej.is_array() || ej.size() != 2) {
          throw SchemaError(efield, "expected a pair of indices");
        }
        edges.emplace_back(require_int(ej[0], efield),
                           require_int(ej[1], efield));
      }
      return DigitalImage(dimension, std::move(points),
                          Adjacency::explicit_edges(std::move(edges)));
    }
  } catch (const std::invalid_argument& e) {
    throw SchemaError(field, e.what());
  } catch (const std::out_of_range& e) {
    throw SchemaError(field, e.what());
  }
  throw SchemaError(field + ".adjacency.type", "expected \"cu\" or \"explicit\"");
}

nlohmann::ordered_json group_to_json(const FiniteGroup& group) {
  nlohmann::ordered_json j;
  j["order"] = group.order;
  j["table"] = group.table;
  if (!group.names.empty()) j["names"] = group.names;
  return j;
}

FiniteGroup group_from_json(const nlohmann::json& j, const std::string& field) {
  const int order = require_int(require(j, "order", field), field + ".order");
  const auto& table_json = require(j, "table", field);
  if (!table_json.is_array() || static_cast<int>(table_json.size()) != order) {
    throw SchemaError(field + ".table", "expected " + std::to_string(order) +
                                            " rows");
  }
  std::vector<std::vector<int>> table;
  for (std::size_t i = 0; i < table_json.size(); ++i) {
    const auto& row = table_json[i];
    const std::string rfield = field + ".table[" + std::to_string(i) + "]";
    if (!row.is_array() || static_cast<int>(row.size()) != order) {
      throw SchemaError(rfield, "expected " + std::to_string(order) +
                                    " entries");
    }
    std::vector<int> r;
    for (const auto& v : row) r.push_back(require_int(v, rfield));
    table.push_back(std::move(r));
  }
  std::vector<std::string> names;
  if (j.contains("names")) {
    const auto& names_json = j["names"];
    if (!names_json.is_array() ||
        static_cast<int>(names_json.size()) != order) {
      throw SchemaError(field + ".names", "expected " + std::to_string(order) +
                                              " entries");
    }
    for (const auto& n : names_json) {
      if (!n.is_string()) throw SchemaError(field + ".names", "expected strings");
      names.push_back(n.get<std::string>());
    }
  }
  auto validation = validate_group(table, std::move(names));
  if (!validation.ok()) {
    throw SchemaError(field + ".table", "not a group table: " +
                                            validation.message);
  }
  return std::move(*validation.group);
}

nlohmann::ordered_json dtg_to_json(const DTG& d) {
  nlohmann::ordered_json j;
  j["image"] = image_to_json(d.image);
  j["group"] = group_to_json(d.group);
  if (d.level.has_value()) {
    j["claimed_level"] = to_string(*d.level);
  } else {
    j["claimed_level"] = nullptr;
  }
  return j;
}

DTG dtg_from_json(const nlohmann::json& j) {
  DigitalImage image = image_from_json(require(j, "image", "dtg"), "image");
  FiniteGroup group = group_from_json(require(j, "group", "dtg"), "group");
  if (group.order != image.size()) {
    throw SchemaError("group.order", "does not match the number of points");
  }
  std::optional<NPLevel> claimed;
  const auto& level_json = require(j, "claimed_level", "dtg");
  if (!level_json.is_null()) {
    if (!level_json.is_string()) {
      throw SchemaError("claimed_level", "expected \"NP1\", \"NP2\" or null");
    }
    const std::string s = level_json.get<std::string>();
    if (s == "NP1") claimed = NPLevel::NP1;
    else if (s == "NP2") claimed = NPLevel::NP2;
    else throw SchemaError("claimed_level", "expected \"NP1\", \"NP2\" or null");
  }
  DTG d = make_dtg(std::move(image), std::move(group));
  if (claimed.has_value() && !d.verified(*claimed)) {
    throw ClaimError("the file claims level " +
                     std::string(to_string(*claimed)) +
                     " but the pair does not verify at that level");
  }
  return d;
}

std::vector<int> map_from_json(const nlohmann::json& j, int source_size,
                               int target_size) {
  const auto& map_json = require(j, "map", "hom");
  if (!map_json.is_array() ||
      static_cast<int>(map_json.size()) != source_size) {
    throw SchemaError("hom.map", "expected " + std::to_string(source_size) +
                                     " entries");
  }
  std::vector<int> map;
  for (std::size_t i = 0; i < map_json.size(); ++i) {
    const int v = require_int(map_json[i],
                              "hom.map[" + std::to_string(i) + "]");
    if (v < 0 || v >= target_size) {
      throw SchemaError("hom.map[" + std::to_string(i) + "]",
                        "index out of range");
    }
    map.push_back(v);
  }
  return map;
}

nlohmann::ordered_json map_to_json(const std::vector<int>& map) {
  nlohmann::ordered_json j;
  j["map"] = map;
  return j;
}

std::string to_dot(const DigitalImage& image) {
  std::ostringstream out;
  out << "graph {\n";
  for (int i = 0; i < image.size(); ++i) {
    out << "  v" << i << " [label=\"";
    const auto& c = image.point(i).coords;
    for (std::size_t k = 0; k < c.size(); ++k) {
      out << (k ? "," : "(") << c[k];
    }
    out << ")\"];\n";
  }
  for (const auto& [a, b] : image.edge_list()) {
    out << "  v" << a << " -- v" << b << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string dump_normalized(const nlohmann::ordered_json& j) {
  return j.dump(2) + "\n";
}

}  // namespace dtg
