#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "dtg/construct.hpp"
#include "dtg/graph.hpp"

using namespace dtg;

namespace {

DigitalImage abstract_cycle(int n) {
  std::vector<Point> points;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    points.push_back(Point{static_cast<Coord>(i)});
    edges.emplace_back(i, (i + 1) % n);
  }
  return DigitalImage(1, points, Adjacency::explicit_edges(edges));
}

DigitalImage complete_graph(int n) {
  std::vector<Point> points;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    points.push_back(Point{static_cast<Coord>(i)});
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return DigitalImage(1, points, Adjacency::explicit_edges(edges));
}

DigitalImage path3() {
  return DigitalImage(1, {Point{0}, Point{1}, Point{2}},
                      Adjacency::explicit_edges({{0, 1}, {1, 2}}));
}

DigitalImage unit_cube() {
  std::vector<Point> points;
  for (Coord x = 0; x <= 1; ++x) {
    for (Coord y = 0; y <= 1; ++y) {
      for (Coord z = 0; z <= 1; ++z) points.push_back(Point{x, y, z});
    }
  }
  return DigitalImage(3, points, Adjacency::cu(1));
}

DigitalImage ring8(int u) {
  std::vector<Point> points;
  for (Coord x = -1; x <= 1; ++x) {
    for (Coord y = -1; y <= 1; ++y) {
      if (x != 0 || y != 0) points.push_back(Point{x, y});
    }
  }
  return DigitalImage(2, points, Adjacency::cu(u));
}

// Oracle for small instances: count automorphisms by checking every
// permutation of the vertex set.
int automorphism_count_oracle(const DigitalImage& x) {
  std::vector<int> perm(x.size());
  std::iota(perm.begin(), perm.end(), 0);
  int count = 0;
  do {
    bool is_auto = true;
    for (int i = 0; i < x.size() && is_auto; ++i) {
      for (int j = i + 1; j < x.size(); ++j) {
        if (x.adjacent(i, j) != x.adjacent(perm[i], perm[j])) {
          is_auto = false;
          break;
        }
      }
    }
    if (is_auto) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace

TEST_CASE("components partition the vertex set") {
  CHECK(components(digital_interval(0, 3)).components.size() == 1);

  auto split = fixture("d8-split").dtg.image;
  auto decomposition = components(split);
  REQUIRE(decomposition.components.size() == 2);
  CHECK(decomposition.components[0].size() == 4);
  CHECK(decomposition.components[1].size() == 4);

  DigitalImage isolated(1, {Point{0}, Point{2}, Point{4}, Point{6}},
                        Adjacency::cu(1));
  CHECK(components(isolated).components.size() == 4);

  for (const auto& image : {split, ring8(1), path3()}) {
    const auto d = components(image);
    std::set<int> all;
    for (const auto& c : d.components) {
      for (int v : c) {
        CHECK(d.component_id[v] == d.component_id[c[0]]);
        all.insert(v);
      }
    }
    CHECK(static_cast<int>(all.size()) == image.size());
  }
}

TEST_CASE("degree profiles") {
  auto cube = degree_profile(unit_cube());
  CHECK(cube.is_regular);
  CHECK(cube.degrees[0] == 3);
  CHECK_FALSE(cube.is_complete);

  DigitalImage square(2, {Point{0, 0}, Point{1, 0}, Point{1, 1}, Point{0, 1}},
                      Adjacency::cu(2));
  CHECK(degree_profile(square).is_complete);

  DigitalImage single(1, {Point{0}}, Adjacency::cu(1));
  auto sp = degree_profile(single);
  CHECK(sp.is_regular);
  CHECK(sp.degrees == std::vector<int>{0});
  CHECK(sp.is_complete);
}

TEST_CASE("simple closed curve recognition") {
  CHECK(is_simple_closed_curve(ring8(1)));
  CHECK_FALSE(is_simple_closed_curve(ring8(2)));  // diagonal adjacencies
  CHECK(is_simple_closed_curve(complete_graph(3)));
  CHECK_FALSE(is_simple_closed_curve(path3()));

  // two disjoint triangles: 2-regular but not connected
  std::vector<Point> pts{Point{0}, Point{1}, Point{2},
                         Point{10}, Point{11}, Point{12}};
  std::vector<std::pair<int, int>> e{{0, 1}, {1, 2}, {0, 2},
                                     {3, 4}, {4, 5}, {3, 5}};
  CHECK_FALSE(is_simple_closed_curve(
      DigitalImage(1, pts, Adjacency::explicit_edges(e))));
}

TEST_CASE("cluster graph recognition") {
  std::vector<Point> pts;
  std::vector<std::pair<int, int>> edges;
  for (int c = 0; c < 2; ++c) {
    for (int i = 0; i < 4; ++i) {
      pts.push_back(Point{static_cast<Coord>(c * 10 + i)});
      for (int j = i + 1; j < 4; ++j) edges.emplace_back(c * 4 + i, c * 4 + j);
    }
  }
  CHECK(is_cluster_graph(DigitalImage(1, pts, Adjacency::explicit_edges(edges))));
  CHECK_FALSE(is_cluster_graph(path3()));
  CHECK_FALSE(is_cluster_graph(fixture("d8-split").dtg.image));
}

TEST_CASE("automorphism counts match the brute-force oracle") {
  for (int n = 3; n <= 6; ++n) {
    auto cycle = abstract_cycle(n);
    auto autos = automorphisms(cycle);
    CHECK(static_cast<int>(autos.size()) == 2 * n);
    CHECK(static_cast<int>(autos.size()) == automorphism_count_oracle(cycle));
  }
  for (int m = 1; m <= 5; ++m) {
    int factorial = 1;
    for (int i = 2; i <= m; ++i) factorial *= i;
    CHECK(static_cast<int>(automorphisms(complete_graph(m)).size()) ==
          factorial);
  }
  CHECK(automorphisms(path3()).size() == 2);
  CHECK(automorphism_count_oracle(path3()) == 2);

  CHECK_THROWS_AS(automorphisms(abstract_cycle(17)), std::invalid_argument);
}

TEST_CASE("automorphisms form a group") {
  for (const auto& image : {abstract_cycle(5), path3(), unit_cube()}) {
    auto autos = automorphisms(image);
    std::set<Permutation> group(autos.begin(), autos.end());
    CHECK(group.count(Permutation::identity(image.size())) == 1);
    for (const auto& a : autos) {
      CHECK(group.count(a.inverse()) == 1);
      for (const auto& b : autos) {
        CHECK(group.count(a.compose(b)) == 1);
      }
    }
  }
}

TEST_CASE("isomorphism search") {
  auto c4 = abstract_cycle(4);
  DigitalImage edge(1, {Point{0}, Point{1}}, Adjacency::cu(1));
  CHECK(find_isomorphism(c4, np_product(edge, edge, NPLevel::NP1)).has_value());
  CHECK_FALSE(find_isomorphism(c4, complete_graph(4)).has_value());

  auto found = find_isomorphism(c4, c4);
  REQUIRE(found.has_value());
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      CHECK(c4.adjacent(i, j) == c4.adjacent(found->map[i], found->map[j]));
    }
  }

  // found one way iff found the other way
  const auto p3 = path3();
  const auto& cc4 = c4;
  for (const auto* a : {&cc4, &p3}) {
    for (const auto* b : {&cc4, &p3}) {
      CHECK(find_isomorphism(*a, *b).has_value() ==
            find_isomorphism(*b, *a).has_value());
    }
  }
}

TEST_CASE("transitivity") {
  for (int n : {4, 5, 8}) {
    auto t = transitivity(abstract_cycle(n));
    CHECK(t.vertex_transitive);
    CHECK(t.edge_transitive);
  }
  auto p = transitivity(path3());
  CHECK_FALSE(p.vertex_transitive);
  // the endpoint swap carries either edge onto the other
  CHECK(p.edge_transitive);

  auto torus = np_product(abstract_cycle(4), abstract_cycle(8), NPLevel::NP1);
  auto t = transitivity(torus, torus.size());
  CHECK(t.vertex_transitive);
  CHECK_FALSE(t.edge_transitive);
}

TEST_CASE("vertex transitivity implies regularity on all small graphs") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    }
    for (unsigned mask = 0; mask < (1u << slots.size()); ++mask) {
      std::vector<Point> points;
      for (int i = 0; i < n; ++i) points.push_back(Point{static_cast<Coord>(i)});
      std::vector<std::pair<int, int>> edges;
      for (std::size_t s = 0; s < slots.size(); ++s) {
        if (mask & (1u << s)) edges.push_back(slots[s]);
      }
      DigitalImage x(1, points, Adjacency::explicit_edges(edges));
      if (transitivity(x).vertex_transitive) {
        CHECK(degree_profile(x).is_regular);
      }
    }
  }
}

TEST_CASE("induced subimages restrict the adjacency") {
  auto cube = unit_cube();
  auto sub = induced_subimage(cube, {0, 1, 3, 7});
  CHECK(sub.size() == 4);
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      const std::vector<int> keep{0, 1, 3, 7};
      CHECK(sub.adjacent(a, b) == cube.adjacent(keep[a], keep[b]));
    }
  }
}
