// Command-line front end: verification, classification, construction and
// exhaustive search for digital topological groups, with JSON file I/O.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dtg/construct.hpp"
#include "dtg/enumerate.hpp"
#include "dtg/hom.hpp"
#include "dtg/io.hpp"

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw dtg::SchemaError(path, "cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw dtg::SchemaError(path, std::string("invalid JSON: ") + e.what());
  }
}

struct RawDtg {
  dtg::DigitalImage image;
  dtg::FiniteGroup group;
};

// Image and group of a dtg file without enforcing the claimed level; used by
// `verify`, whose whole point is to diagnose the pair.
RawDtg load_raw_dtg(const std::string& path) {
  json j = load_json(path);
  if (!j.is_object()) throw dtg::SchemaError(path, "expected an object");
  if (!j.contains("image")) throw dtg::SchemaError("image", "missing");
  if (!j.contains("group")) throw dtg::SchemaError("group", "missing");
  RawDtg raw{dtg::image_from_json(j["image"], "image"),
             dtg::group_from_json(j["group"], "group")};
  if (raw.group.order != raw.image.size()) {
    throw dtg::SchemaError("group.order",
                           "does not match the number of points");
  }
  return raw;
}

dtg::DTG load_dtg(const std::string& path) {
  return dtg::dtg_from_json(load_json(path));
}

std::string element(const dtg::FiniteGroup& g, int i) { return g.name_of(i); }

ordered_json mu_witness_json(const dtg::ProductWitness& w) {
  return ordered_json{{"first", {w.first[0], w.first[1]}},
                      {"second", {w.second[0], w.second[1]}},
                      {"image_first", w.image_first},
                      {"image_second", w.image_second}};
}

ordered_json continuity_witness_json(const dtg::ContinuityWitness& w) {
  return ordered_json{
      {"pair", {w.a, w.b}}, {"images", {w.fa, w.fb}}};
}

std::string describe_verify(const dtg::VerifyReport& report,
                            const dtg::FiniteGroup& g, dtg::NPLevel level) {
  std::ostringstream out;
  if (report.ok) {
    out << "verified at " << dtg::to_string(level);
    return out.str();
  }
  out << "refuted at " << dtg::to_string(level) << ":";
  if (report.multiplication_witness) {
    const auto& w = *report.multiplication_witness;
    out << " mu((" << element(g, w.first[0]) << "," << element(g, w.first[1])
        << "),(" << element(g, w.second[0]) << "," << element(g, w.second[1])
        << ")) = (" << element(g, w.image_first) << ","
        << element(g, w.image_second) << ") not adjacent-or-equal";
  }
  if (report.inverse_witness) {
    const auto& w = *report.inverse_witness;
    out << (report.multiplication_witness ? ";" : "") << " inverse maps "
        << element(g, w.a) << " ~ " << element(g, w.b) << " to "
        << element(g, w.fa) << " !~ " << element(g, w.fb);
  }
  return out.str();
}

void emit(const ordered_json& j) { std::cout << dtg::dump_normalized(j); }

// ---------------------------------------------------------------- commands

int cmd_verify(const std::string& file, const std::string& level_arg,
               bool as_json) {
  RawDtg raw = load_raw_dtg(file);
  dtg::NPLevel level = dtg::NPLevel::NP1;
  if (level_arg == "np2") {
    level = dtg::NPLevel::NP2;
  } else if (level_arg.empty()) {
    // fall back to the file's claim when there is one
    json j = load_json(file);
    if (j.contains("claimed_level") && j["claimed_level"].is_string() &&
        j["claimed_level"] == "NP2") {
      level = dtg::NPLevel::NP2;
    }
  } else if (level_arg != "np1") {
    throw dtg::SchemaError("--level", "expected np1 or np2");
  }
  auto report = dtg::verify_dtg(raw.image, raw.group, level);
  if (as_json) {
    ordered_json j{{"command", "verify"},
                   {"level", dtg::to_string(level)},
                   {"ok", report.ok}};
    j["multiplication_witness"] =
        report.multiplication_witness
            ? mu_witness_json(*report.multiplication_witness)
            : ordered_json(nullptr);
    j["inverse_witness"] = report.inverse_witness
                               ? continuity_witness_json(*report.inverse_witness)
                               : ordered_json(nullptr);
    emit(j);
  } else {
    std::cout << describe_verify(report, raw.group, level) << "\n";
  }
  return report.ok ? 0 : 1;
}

int cmd_classify(const std::string& file, int bound, bool as_json) {
  auto image = dtg::image_from_json(load_json(file), "image");
  auto profile = dtg::degree_profile(image);
  auto comp = dtg::components(image);
  bool equal_sizes = true;
  for (const auto& c : comp.components) {
    if (c.size() != comp.components[0].size()) equal_sizes = false;
  }
  auto structures = dtg::dtg_structures(image, bound);
  auto np2 = dtg::classify_np2(image);

  std::optional<dtg::Z2Verdict> z2;
  if (image.dimension() == 2 &&
      image.adjacency().kind() == dtg::Adjacency::Kind::CU &&
      image.adjacency().u() == 1 && comp.components.size() == 1) {
    z2 = dtg::classify_z2_c1(image);
  }

  const bool admits_np1 = !structures.empty();
  if (as_json) {
    ordered_json j{{"command", "classify"},
                   {"points", image.size()},
                   {"dimension", image.dimension()},
                   {"regular", profile.is_regular},
                   {"complete", profile.is_complete},
                   {"components", comp.components.size()},
                   {"simple_closed_curve", dtg::is_simple_closed_curve(image)},
                   {"cluster_graph", dtg::is_cluster_graph(image)},
                   {"regular_cluster", np2.admits_np2},
                   {"np1_structures", structures.size()},
                   {"admits_np1", admits_np1},
                   {"admits_np2", np2.admits_np2}};
    j["z2_c1_verdict"] = z2 ? ordered_json(dtg::to_string(*z2))
                            : ordered_json(nullptr);
    emit(j);
  } else {
    std::cout << image.size() << " points, "
              << comp.components.size() << " component(s), "
              << (profile.is_regular ? "regular" : "not regular") << ", "
              << (dtg::is_simple_closed_curve(image)
                      ? "simple closed curve"
                      : (np2.admits_np2 ? "regular cluster graph"
                                        : "no special shape"))
              << "\n";
    std::cout << "NP1 structures (identity at vertex 0): " << structures.size()
              << "\n";
    std::cout << "admits NP2 structure: " << (np2.admits_np2 ? "yes" : "no")
              << "\n";
    if (z2) std::cout << "plane c1 verdict: " << dtg::to_string(*z2) << "\n";
    (void)equal_sizes;
  }
  return admits_np1 ? 0 : 1;
}

int cmd_components(const std::string& file, bool as_json) {
  auto d = load_dtg(file);
  if (!d.verified(dtg::NPLevel::NP1)) {
    throw dtg::SchemaError(file, "the pair is not a digital topological group"
                                 " (no level verifies)");
  }
  auto s = dtg::component_structure(d);
  const bool ok = s.components_pairwise_isomorphic &&
                  s.identity_component_normal && s.quotient_iso_ok;
  if (as_json) {
    ordered_json j{{"command", "components"},
                   {"component_count", s.decomposition.components.size()},
                   {"identity_component", s.identity_component},
                   {"components_pairwise_isomorphic",
                    s.components_pairwise_isomorphic},
                   {"identity_component_normal", s.identity_component_normal},
                   {"component_group", dtg::group_to_json(s.component_group)},
                   {"quotient_isomorphic", s.quotient_iso_ok}};
    emit(j);
  } else {
    std::cout << s.decomposition.components.size()
              << " component(s); identity component has "
              << s.identity_component.size() << " element(s)\n";
    std::cout << "pairwise isomorphic: "
              << (s.components_pairwise_isomorphic ? "yes" : "no")
              << "; identity component normal: "
              << (s.identity_component_normal ? "yes" : "no")
              << "; quotient isomorphic to component group: "
              << (s.quotient_iso_ok ? "yes" : "no") << "\n";
  }
  return ok ? 0 : 1;
}

int emit_dtg(const dtg::DTG& d, bool as_dot) {
  if (as_dot) {
    std::cout << dtg::to_dot(d.image);
  } else {
    emit(dtg::dtg_to_json(d));
  }
  return 0;
}

int cmd_product(const std::string& file1, const std::string& file2,
                const std::string& level_arg, bool as_dot) {
  dtg::NPLevel level;
  if (level_arg == "np1") level = dtg::NPLevel::NP1;
  else if (level_arg == "np2") level = dtg::NPLevel::NP2;
  else throw dtg::SchemaError("--level", "expected np1 or np2");
  auto a = load_dtg(file1);
  auto b = load_dtg(file2);
  if (!a.verified(level) || !b.verified(level)) {
    throw dtg::SchemaError("--level",
                           "both factors must verify at the requested level");
  }
  return emit_dtg(dtg::dtg_product(a, b, level), as_dot);
}

int cmd_quotient(const std::string& file, const std::vector<int>& subgroup,
                 bool as_dot) {
  auto d = load_dtg(file);
  if (!d.level.has_value()) {
    throw dtg::SchemaError(file, "the pair is not a digital topological group");
  }
  return emit_dtg(dtg::dtg_quotient(d, subgroup), as_dot);
}

int cmd_cayley(const std::string& file, const std::vector<int>& gens,
               bool as_json, bool as_dot) {
  auto group = dtg::group_from_json(load_json(file));
  auto outcome = dtg::cayley_graph(group, gens);
  auto obstruction = dtg::cayley_np2_obstruction(group, gens);
  if (outcome.dtg.has_value()) {
    if (as_dot) {
      std::cout << dtg::to_dot(outcome.dtg->image);
    } else {
      auto j = dtg::dtg_to_json(*outcome.dtg);
      j["np2_obstruction"] = obstruction ? ordered_json(*obstruction)
                                         : ordered_json(nullptr);
      emit(j);
    }
    return 0;
  }
  if (as_json) {
    ordered_json j{{"command", "cayley"},
                   {"ok", false},
                   {"multiplication_witness",
                    mu_witness_json(*outcome.verification.multiplication_witness)}};
    emit(j);
  } else {
    std::cout << "refuted: the Cayley pair is not NP1-continuous ("
              << describe_verify(outcome.verification, group, dtg::NPLevel::NP1)
              << ")\n";
  }
  return 1;
}

int cmd_hom(const std::string& src_file, const std::string& dst_file,
            const std::string& map_file, bool as_json) {
  auto src = load_dtg(src_file);
  auto dst = load_dtg(dst_file);
  auto map = dtg::map_from_json(load_json(map_file), src.image.size(),
                                dst.image.size());
  auto h = dtg::check_dtg_hom(src, dst, map);
  ordered_json j{{"command", "hom"},
                 {"is_hom", h.is_hom},
                 {"is_continuous", h.is_continuous}};
  j["hom_witness"] = h.hom.witness
                         ? ordered_json({(*h.hom.witness)[0], (*h.hom.witness)[1]})
                         : ordered_json(nullptr);
  j["continuity_witness"] = h.continuity.witness
                                ? continuity_witness_json(*h.continuity.witness)
                                : ordered_json(nullptr);
  if (h.is_hom && h.is_continuous) {
    auto open = dtg::is_open_map(h);
    j["is_open"] = open.open;
    j["open_witness"] = open.witness
                            ? ordered_json({(*open.witness)[0],
                                            (*open.witness)[1]})
                            : ordered_json(nullptr);
    if (src.level.has_value()) {
      auto fi = dtg::first_isomorphism(h);
      j["first_isomorphism"] =
          ordered_json{{"factorization_ok", fi.factorization_ok},
                       {"kernel_size", h.hom.kernel.size()},
                       {"quotient_points", fi.quotient.image.size()},
                       {"image_points", fi.image_subgroup.image.size()},
                       {"is_digital_isomorphism", fi.is_dtg_isomorphism}};
    }
    auto local = dtg::continuity_from_identity(src, dst, map);
    j["continuous_at_identity"] = local.local_ok;
  }
  if (as_json) {
    emit(j);
  } else {
    std::cout << "homomorphism: " << (h.is_hom ? "yes" : "no")
              << "; continuous: " << (h.is_continuous ? "yes" : "no");
    if (j.contains("is_open")) {
      std::cout << "; open: " << (j["is_open"].get<bool>() ? "yes" : "no");
    }
    if (j.contains("first_isomorphism")) {
      std::cout << "; induced quotient map is "
                << (j["first_isomorphism"]["is_digital_isomorphism"].get<bool>()
                        ? "a digital isomorphism"
                        : "not a digital isomorphism");
    }
    std::cout << "\n";
  }
  return h.is_hom && h.is_continuous ? 0 : 1;
}

int cmd_enumerate_z2(int window, bool all_records, bool as_json) {
  auto report = dtg::scan_z2_windows(window, all_records);
  if (as_json) {
    ordered_json records = ordered_json::array();
    for (const auto& r : report.records) {
      ordered_json cells = ordered_json::array();
      for (const auto& p : r.cells) cells.push_back(p.coords);
      records.push_back(ordered_json{{"points", cells},
                                     {"size", r.size},
                                     {"expected_admits", r.expected_admits},
                                     {"structures", r.structure_count},
                                     {"consistent", r.consistent}});
    }
    emit(ordered_json{{"command", "enumerate-z2"},
                      {"window", report.half_width},
                      {"connected_subsets", report.connected_subsets},
                      {"exceptions", report.exceptions},
                      {"records", records}});
  } else {
    std::cout << "window half-width " << report.half_width << ": "
              << report.connected_subsets << " connected subsets, "
              << report.exceptions << " exception(s)\n";
  }
  return report.exceptions == 0 ? 0 : 1;
}

int cmd_enumerate_np2(int max_vertices, bool as_json) {
  auto report = dtg::scan_np2(max_vertices);
  if (as_json) {
    ordered_json records = ordered_json::array();
    for (const auto& r : report.records) {
      ordered_json edges = ordered_json::array();
      for (const auto& [a, b] : r.edges) edges.push_back({a, b});
      records.push_back(ordered_json{{"vertices", r.vertices},
                                     {"edges", edges},
                                     {"np1_structures", r.structure_count},
                                     {"np2_structures", r.np2_structure_count},
                                     {"regular_cluster", r.regular_cluster},
                                     {"consistent", r.consistent}});
    }
    emit(ordered_json{{"command", "enumerate-np2"},
                      {"max_vertices", report.max_vertices},
                      {"graphs_examined", report.graphs_examined},
                      {"classes", report.isomorphism_classes},
                      {"exceptions", report.exceptions},
                      {"records", records}});
  } else {
    std::cout << report.isomorphism_classes << " isomorphism classes on up to "
              << report.max_vertices << " vertices, " << report.exceptions
              << " exception(s)\n";
  }
  return report.exceptions == 0 ? 0 : 1;
}

int cmd_enumerate_structures(const std::string& file, int bound, bool as_json) {
  auto image = dtg::image_from_json(load_json(file), "image");
  auto structures = dtg::dtg_structures(image, bound);
  if (as_json) {
    ordered_json list = ordered_json::array();
    for (const auto& g : structures) {
      auto level = dtg::np_level(image, g);
      list.push_back(ordered_json{
          {"table", g.table},
          {"level", level ? ordered_json(dtg::to_string(*level))
                          : ordered_json(nullptr)}});
    }
    emit(ordered_json{{"command", "structures"},
                      {"count", structures.size()},
                      {"structures", list}});
  } else {
    std::cout << structures.size() << " structure(s)\n";
    for (const auto& g : structures) {
      auto level = dtg::np_level(image, g);
      std::cout << "  order profile:";
      for (int i = 0; i < g.order; ++i) std::cout << " " << g.element_order(i);
      std::cout << "  level " << (level ? dtg::to_string(*level) : "none")
                << "\n";
    }
  }
  return structures.empty() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"digital topological groups: verify, classify, construct, "
               "enumerate"};
  app.require_subcommand(1);
  bool as_json = false;
  bool as_dot = false;
  app.add_flag("--json", as_json, "machine-readable output");
  app.add_flag("--dot", as_dot, "DOT edge dump instead of JSON, where "
                                "applicable");

  std::string file, file2, map_file, level_arg, fixture_name;
  std::vector<int> elements;
  int n = 0, k = 0;
  int bound = dtg::kDefaultStructureBound;
  int window = 1;
  bool all_records = true;

  auto* verify = app.add_subcommand("verify", "check a dtg file at a level");
  verify->add_option("file", file)->required();
  verify->add_option("--level", level_arg, "np1 or np2");

  auto* classify = app.add_subcommand(
      "classify", "shape recognition and admissible structures of an image");
  classify->add_option("file", file)->required();
  classify->add_option("--bound", bound, "vertex bound for the search");

  auto* components_cmd =
      app.add_subcommand("components", "component structure of a dtg file");
  components_cmd->add_option("file", file)->required();

  auto* product = app.add_subcommand("product", "product of two dtg files");
  product->add_option("file1", file)->required();
  product->add_option("file2", file2)->required();
  product->add_option("--level", level_arg)->required();

  auto* quotient = app.add_subcommand("quotient",
                                      "quotient of a dtg by a normal subgroup");
  quotient->add_option("file", file)->required();
  quotient->add_option("--subgroup", elements, "element indices")
      ->required()
      ->delimiter(',');

  auto* cayley = app.add_subcommand("cayley", "Cayley pair of a group file");
  cayley->add_option("file", file)->required();
  cayley->add_option("--gens", elements, "generator indices")
      ->required()
      ->delimiter(',');

  auto* scc = app.add_subcommand("scc", "simple closed curve group");
  scc->add_option("n", n)->required();
  bool plane = false;
  scc->add_flag("--plane", plane, "realize on a rectangle boundary in Z^2");

  auto* cluster = app.add_subcommand("cluster", "k complete graphs of size n");
  cluster->add_option("n", n)->required();
  cluster->add_option("k", k)->required();

  auto* embed = app.add_subcommand("embed",
                                   "realize an image inside a small hypercube");
  embed->add_option("file", file)->required();

  auto* hom = app.add_subcommand("hom", "check a map between two dtg files");
  hom->add_option("source", file)->required();
  hom->add_option("target", file2)->required();
  hom->add_option("map", map_file)->required();

  auto* enumerate = app.add_subcommand("enumerate", "exhaustive scans");
  enumerate->require_subcommand(1);
  auto* enum_z2 = enumerate->add_subcommand(
      "z2", "connected window subsets of the c1 plane");
  enum_z2->add_option("--window", window, "half-width (1 or 2)");
  enum_z2->add_flag("!--exceptions-only", all_records,
                    "record only inconsistent candidates");
  auto* enum_np2 = enumerate->add_subcommand(
      "np2", "all graph classes up to a vertex count");
  int max_vertices = 6;
  enum_np2->add_option("--max-vertices", max_vertices);
  auto* enum_structures = enumerate->add_subcommand(
      "structures", "all group structures on an image file");
  enum_structures->add_option("file", file)->required();
  enum_structures->add_option("--bound", bound);

  auto* fixture_cmd = app.add_subcommand("fixture", "emit a named fixture");
  fixture_cmd->add_option("name", fixture_name)->required();

  // --json / --dot may follow the subcommand
  for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
    sub->fallthrough();
    for (auto* nested :
         sub->get_subcommands([](const CLI::App*) { return true; })) {
      nested->fallthrough();
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*verify) return cmd_verify(file, level_arg, as_json);
    if (*classify) return cmd_classify(file, bound, as_json);
    if (*components_cmd) return cmd_components(file, as_json);
    if (*product) return cmd_product(file, file2, level_arg, as_dot);
    if (*quotient) return cmd_quotient(file, elements, as_dot);
    if (*cayley) return cmd_cayley(file, elements, as_json, as_dot);
    if (*scc) {
      return emit_dtg(dtg::scc_group(n, plane ? dtg::SccAmbient::Plane
                                              : dtg::SccAmbient::Abstract),
                      as_dot);
    }
    if (*cluster) return emit_dtg(dtg::cluster_np2_group(n, k), as_dot);
    if (*embed) {
      auto image = dtg::image_from_json(load_json(file), "image");
      auto embedding = dtg::embed_in_hypercube(image);
      if (as_dot) {
        std::cout << dtg::to_dot(embedding.image);
      } else {
        emit(ordered_json{{"image", dtg::image_to_json(embedding.image)},
                          {"vertex_map", embedding.vertex_map}});
      }
      return 0;
    }
    if (*hom) return cmd_hom(file, file2, map_file, as_json);
    if (*enum_z2) return cmd_enumerate_z2(window, all_records, as_json);
    if (*enum_np2) return cmd_enumerate_np2(max_vertices, as_json);
    if (*enum_structures) return cmd_enumerate_structures(file, bound, as_json);
    if (*fixture_cmd) return emit_dtg(dtg::fixture(fixture_name).dtg, as_dot);
  } catch (const dtg::ClaimError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const dtg::SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
