#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dtg/construct.hpp"
#include "dtg/enumerate.hpp"

using namespace dtg;

namespace {

DigitalImage labeled_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<Point> points;
  for (int i = 0; i < n; ++i) points.push_back(Point{static_cast<Coord>(i)});
  return DigitalImage(1, points, Adjacency::explicit_edges(edges));
}

DigitalImage complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return labeled_graph(n, edges);
}

}  // namespace

TEST_CASE("structures of the 4-cycle") {
  auto structures = dtg_structures(scc_group(4).image);
  // the rotation group and the three fixed-point-free involutions
  REQUIRE(structures.size() == 2);
  bool has_cyclic = false, has_klein = false;
  for (const auto& g : structures) {
    if (groups_isomorphic(g, cyclic_group(4))) has_cyclic = true;
    if (groups_isomorphic(g, direct_product(cyclic_group(2), cyclic_group(2)))) {
      has_klein = true;
    }
  }
  CHECK(has_cyclic);
  CHECK(has_klein);
}

TEST_CASE("structures of paths and complete graphs") {
  CHECK(dtg_structures(labeled_graph(3, {{0, 1}, {1, 2}})).empty());

  auto k4 = dtg_structures(complete_graph(4));
  CHECK(k4.size() == 4);  // three cyclic rotations plus the Klein group
  int cyclic = 0, klein = 0;
  for (const auto& g : k4) {
    if (groups_isomorphic(g, cyclic_group(4))) ++cyclic;
    if (groups_isomorphic(g, direct_product(cyclic_group(2), cyclic_group(2)))) {
      ++klein;
    }
  }
  CHECK(cyclic == 3);
  CHECK(klein == 1);

  CHECK_THROWS_AS(dtg_structures(complete_graph(13)), std::invalid_argument);
}

TEST_CASE("every structure re-verifies and implies transitivity") {
  for (int n = 3; n <= 6; ++n) {
    auto image = scc_group(n).image;
    auto structures = dtg_structures(image);
    CHECK_FALSE(structures.empty());
    for (const auto& g : structures) {
      CHECK(verify_dtg(image, g, NPLevel::NP1).ok);
      CHECK(g.identity == 0);
    }
    CHECK(transitivity(image).vertex_transitive);
  }
  // cycles of odd length admit only the rotations; even length also the
  // dihedral-free involution groups when the cycle has length 4
  CHECK(dtg_structures(scc_group(5).image).size() == 1);
  CHECK(dtg_structures(scc_group(6).image).size() == 1);
}

TEST_CASE("structure search is deterministic") {
  auto a = dtg_structures(scc_group(6).image);
  auto b = dtg_structures(scc_group(6).image);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].table == b[i].table);
}

TEST_CASE("window scan at half-width 1") {
  auto report = scan_z2_windows(1);
  CHECK(report.exceptions == 0);
  CHECK(report.connected_subsets > 0);

  long long admitting = 0;
  bool saw_ring = false, saw_square = false;
  for (const auto& r : report.records) {
    CHECK(r.consistent);
    if (r.structure_count > 0) ++admitting;
    // the boundary of the window: the unique admitting subset of size 8
    if (r.size == 8 && r.expected_admits) saw_ring = true;
    if (r.size == 4 && r.expected_admits) saw_square = true;
  }
  CHECK(admitting > 0);
  CHECK(saw_ring);    // the boundary of the full window
  CHECK(saw_square);  // a 2x2 block
  CHECK_THROWS_AS(scan_z2_windows(3), std::invalid_argument);
  CHECK_THROWS_AS(scan_z2_windows(0), std::invalid_argument);
}

TEST_CASE("np2 scan matches the known class counts") {
  auto report = scan_np2(4);
  CHECK(report.exceptions == 0);
  int n4 = 0;
  for (const auto& r : report.records) {
    CHECK(r.consistent);
    if (r.vertices == 4) ++n4;
  }
  CHECK(n4 == 11);
  CHECK(report.isomorphism_classes == 1 + 2 + 4 + 11);

  // the empty graph admits a structure, the path does not
  for (const auto& r : report.records) {
    if (r.vertices == 3 && r.edges.empty()) {
      CHECK(r.np2_structure_count > 0);
    }
    if (r.vertices == 3 && r.edges == std::vector<std::pair<int, int>>{{0, 1},
                                                                       {1, 2}}) {
      CHECK(r.np2_structure_count == 0);
      CHECK_FALSE(r.regular_cluster);
    }
  }
  CHECK_THROWS_AS(scan_np2(8), std::invalid_argument);
}

TEST_CASE("np2 scan at five vertices") {
  auto report = scan_np2(5);
  CHECK(report.exceptions == 0);
  int n5 = 0;
  for (const auto& r : report.records) {
    if (r.vertices == 5) ++n5;
  }
  CHECK(n5 == 34);
}
