#include "dtg/construct.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dtg {

namespace {

std::vector<Point> line_points(int n) {
  std::vector<Point> points;
  for (int i = 0; i < n; ++i) points.push_back(Point{static_cast<Coord>(i)});
  return points;
}

// Counterclockwise boundary walk of the rectangle [x0,x1]x[y0,y1],
// starting at (x1, 0).
std::vector<Point> rectangle_boundary(Coord x0, Coord x1, Coord y0, Coord y1) {
  std::vector<Point> walk;
  for (Coord y = 0; y <= y1; ++y) walk.push_back(Point{x1, y});
  for (Coord x = x1 - 1; x >= x0; --x) walk.push_back(Point{x, y1});
  for (Coord y = y1 - 1; y >= y0; --y) walk.push_back(Point{x0, y});
  for (Coord x = x0 + 1; x <= x1; ++x) walk.push_back(Point{x, y0});
  for (Coord y = y0 + 1; y <= -1; ++y) walk.push_back(Point{x1, y});
  return walk;
}

}  // namespace

DTG scc_group(int n, SccAmbient ambient) {
  if (n < 3) throw std::invalid_argument("scc_group: n must be >= 3");
  DTG result = [&] {
    if (ambient == SccAmbient::Abstract) {
      std::vector<std::pair<int, int>> edges;
      for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
      DigitalImage image(1, line_points(n),
                         Adjacency::explicit_edges(std::move(edges)));
      return make_dtg(std::move(image), cyclic_group(n));
    }
    if (n % 2 != 0 || n < 8) {
      throw std::invalid_argument(
          "scc_group: no plane realization for n = " + std::to_string(n) +
          " (requires even n >= 8)");
    }
    const int a = n / 4;
    const int b = n / 2 - a;
    auto points = rectangle_boundary(-(a / 2), a - a / 2, -(b / 2), b - b / 2);
    DigitalImage image(2, std::move(points), Adjacency::cu(1));
    return make_dtg(std::move(image), cyclic_group(n));
  }();
  if (!result.verified(NPLevel::NP1)) {
    throw std::logic_error("scc_group: cycle structure failed to verify");
  }
  return result;
}

CayleyOutcome cayley_graph(const FiniteGroup& g, const std::vector<int>& gens) {
  auto info = subgroup_ops(g, gens);
  std::set<int> s(gens.begin(), gens.end());
  if (s.count(g.identity)) {
    throw std::invalid_argument(
        "cayley_graph: the identity may not be a generator");
  }
  if (!info.is_symmetric_genset) {
    throw std::invalid_argument(
        "cayley_graph: the generating set is not symmetrized");
  }
  std::vector<std::pair<int, int>> edges;
  for (int x = 0; x < g.order; ++x) {
    for (int gen : s) edges.emplace_back(x, g.mul(gen, x));
  }
  DigitalImage image(1, line_points(g.order),
                     Adjacency::explicit_edges(std::move(edges)));
  CayleyOutcome out{image, g, verify_dtg(image, g, NPLevel::NP1), std::nullopt};
  if (out.verification.ok) {
    out.dtg = make_dtg(std::move(image), g);
  }
  return out;
}

std::optional<int> cayley_np2_obstruction(const FiniteGroup& g,
                                          const std::vector<int>& gens) {
  std::set<int> s(gens.begin(), gens.end());
  for (int x : s) {
    const int sq = g.mul(x, x);
    if (sq != g.identity && !s.count(sq)) return x;
  }
  return std::nullopt;
}

DTG cluster_np2_group(int n, int k) {
  if (n < 1 || k < 1) {
    throw std::invalid_argument("cluster_np2_group: n and k must be >= 1");
  }
  std::vector<std::pair<int, int>> edges;
  for (int j = 0; j < k; ++j) {
    for (int i = 0; i < n; ++i) {
      for (int i2 = i + 1; i2 < n; ++i2) {
        edges.emplace_back(j * n + i, j * n + i2);
      }
    }
  }
  DigitalImage image(1, line_points(n * k),
                     Adjacency::explicit_edges(std::move(edges)));
  std::vector<std::vector<int>> table(n * k, std::vector<int>(n * k));
  for (int v = 0; v < n * k; ++v) {
    const int i = v % n, j = v / n;
    for (int w = 0; w < n * k; ++w) {
      const int a = w % n, b = w / n;
      table[v][w] = ((j + b) % k) * n + (i + a) % n;
    }
  }
  DTG result = make_dtg(std::move(image), *validate_group(table).group);
  if (!result.verified(NPLevel::NP2)) {
    throw std::logic_error("cluster_np2_group: structure failed NP2 check");
  }
  return result;
}

HypercubeEmbedding embed_in_hypercube(const DigitalImage& x) {
  const int k = x.size();
  if (k < 2) {
    throw std::invalid_argument("embed_in_hypercube: needs at least 2 points");
  }
  const int m = k - 1;
  // Coordinate i separates vertex i from everything not adjacent to it:
  // vertex i sits at +1, neighbors of i at 0, the rest at -1. Adjacent pairs
  // then differ by at most 1 in every coordinate while non-adjacent pairs
  // differ by 2 in the coordinate of the smaller vertex.
  std::vector<Point> points(k);
  for (int j = 0; j < k; ++j) {
    points[j].coords.resize(m);
    for (int i = 0; i < m; ++i) {
      if (j == i) {
        points[j].coords[i] = 1;
      } else if (x.adjacent(j, i)) {
        points[j].coords[i] = 0;
      } else {
        points[j].coords[i] = -1;
      }
    }
  }
  DigitalImage embedded(m, std::move(points), Adjacency::cu(m));
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      if (embedded.adjacent(a, b) != x.adjacent(a, b)) {
        throw std::logic_error("embed_in_hypercube: adjacency not preserved");
      }
    }
  }
  HypercubeEmbedding out{std::move(embedded), {}};
  out.vertex_map.resize(k);
  for (int j = 0; j < k; ++j) out.vertex_map[j] = j;
  return out;
}

namespace {

std::vector<Fixture> build_fixtures() {
  std::vector<Fixture> all;

  {
    std::vector<Point> cube{{0, 0, 0}, {0, 0, 1}, {1, 0, 1}, {1, 0, 0},
                            {0, 1, 0}, {0, 1, 1}, {1, 1, 1}, {1, 1, 0}};
    all.push_back({"d8-cube",
                   "unit cube in (Z^3,c_1) carrying the dihedral table",
                   make_dtg(DigitalImage(3, std::move(cube), Adjacency::cu(1)),
                            dihedral_8())});
  }
  {
    std::vector<Point> split{{0, 0}, {1, 0}, {1, 1}, {0, 1},
                             {3, 0}, {4, 0}, {4, 1}, {3, 1}};
    all.push_back({"d8-split",
                   "two squares in (Z^2,c_1) carrying the dihedral table",
                   make_dtg(DigitalImage(2, std::move(split), Adjacency::cu(1)),
                            dihedral_8())});
  }
  all.push_back({"scc16-mod4",
                 "simple closed curve of 16 points on a rectangle boundary",
                 scc_group(16, SccAmbient::Plane)});
  {
    std::vector<Point> cross{{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    all.push_back({"cross4-c1",
                   "four axis points of Z^2 under c_1 (discrete) with the "
                   "cyclic structure",
                   make_dtg(DigitalImage(2, cross, Adjacency::cu(1)),
                            cyclic_group(4))});
    all.push_back({"cross4-c2",
                   "four axis points of Z^2 under c_2 (a 4-cycle) with the "
                   "cyclic structure",
                   make_dtg(DigitalImage(2, cross, Adjacency::cu(2)),
                            cyclic_group(4))});
  }
  {
    std::vector<Point> square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    all.push_back({"unit-square-c2",
                   "unit square under c_2 (complete) with the cyclic "
                   "structure",
                   make_dtg(DigitalImage(2, std::move(square), Adjacency::cu(2)),
                            cyclic_group(4))});
  }
  return all;
}

}  // namespace

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = build_fixtures();
  return all;
}

const Fixture& fixture(const std::string& name) {
  for (const Fixture& f : fixtures()) {
    if (f.name == name) return f;
  }
  throw std::invalid_argument("unknown fixture: " + name);
}

}  // namespace dtg
