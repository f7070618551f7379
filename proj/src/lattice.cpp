#include "dtg/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <string>

namespace dtg {

bool cu_adjacent(const Point& p, const Point& q, int u) {
  const int n = p.dimension();
  if (q.dimension() != n) {
    throw std::invalid_argument("cu_adjacent: dimension mismatch (" +
                                std::to_string(n) + " vs " +
                                std::to_string(q.dimension()) + ")");
  }
  if (u < 1 || u > n) {
    throw std::invalid_argument("cu_adjacent: u out of range");
  }
  int unit_diffs = 0;
  for (int i = 0; i < n; ++i) {
    const Coord d = p.coords[i] - q.coords[i];
    if (d == 0) continue;
    if (d != 1 && d != -1) return false;
    ++unit_diffs;
  }
  return unit_diffs >= 1 && unit_diffs <= u;
}

Adjacency Adjacency::cu(int u) {
  if (u < 1) throw std::invalid_argument("Adjacency::cu: u must be positive");
  Adjacency a;
  a.kind_ = Kind::CU;
  a.u_ = u;
  return a;
}

Adjacency Adjacency::explicit_edges(std::vector<std::pair<int, int>> edges) {
  for (auto& [a, b] : edges) {
    if (a == b) {
      throw std::invalid_argument("Adjacency: self-loop on index " +
                                  std::to_string(a));
    }
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  Adjacency adj;
  adj.kind_ = Kind::Explicit;
  adj.edges_ = std::move(edges);
  return adj;
}

DigitalImage::DigitalImage(int dimension, std::vector<Point> points,
                           Adjacency adjacency)
    : dimension_(dimension),
      points_(std::move(points)),
      adjacency_(std::move(adjacency)) {
  if (dimension_ < 1) {
    throw std::invalid_argument("DigitalImage: dimension must be >= 1");
  }
  const int m = size();
  for (const Point& p : points_) {
    if (p.dimension() != dimension_) {
      throw std::invalid_argument(
          "DigitalImage: point dimension does not match image dimension");
    }
  }
  {
    std::set<Point> seen(points_.begin(), points_.end());
    if (static_cast<int>(seen.size()) != m) {
      throw std::invalid_argument("DigitalImage: duplicate points");
    }
  }
  if (adjacency_.kind() == Adjacency::Kind::CU) {
    if (adjacency_.u() > dimension_) {
      throw std::invalid_argument("DigitalImage: c_u adjacency with u > n");
    }
  } else {
    for (const auto& [a, b] : adjacency_.edges()) {
      if (a < 0 || b >= m) {
        throw std::invalid_argument("DigitalImage: edge index out of range");
      }
    }
  }

  adj_.assign(m, std::vector<bool>(m, false));
  if (adjacency_.kind() == Adjacency::Kind::CU) {
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) {
        if (cu_adjacent(points_[i], points_[j], adjacency_.u())) {
          adj_[i][j] = adj_[j][i] = true;
        }
      }
    }
  } else {
    for (const auto& [a, b] : adjacency_.edges()) {
      adj_[a][b] = adj_[b][a] = true;
    }
  }
  neighbors_.assign(m, {});
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (adj_[i][j]) neighbors_[i].push_back(j);
    }
  }
}

void DigitalImage::check_index(int i) const {
  if (i < 0 || i >= size()) {
    throw std::out_of_range("DigitalImage: point index " + std::to_string(i) +
                            " out of range");
  }
}

const Point& DigitalImage::point(int i) const {
  check_index(i);
  return points_[i];
}

bool DigitalImage::adjacent(int i, int j) const {
  check_index(i);
  check_index(j);
  return adj_[i][j];
}

const std::vector<int>& DigitalImage::neighbors(int i) const {
  check_index(i);
  return neighbors_[i];
}

int DigitalImage::degree(int i) const {
  check_index(i);
  return static_cast<int>(neighbors_[i].size());
}

std::vector<std::pair<int, int>> DigitalImage::edge_list() const {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < size(); ++i) {
    for (int j : neighbors_[i]) {
      if (i < j) edges.emplace_back(i, j);
    }
  }
  return edges;
}

int DigitalImage::edge_count() const {
  int total = 0;
  for (const auto& ns : neighbors_) total += static_cast<int>(ns.size());
  return total / 2;
}

DigitalImage digital_interval(Coord a, Coord b) {
  if (a >= b) throw std::invalid_argument("digital_interval: requires a < b");
  std::vector<Point> points;
  for (Coord z = a; z <= b; ++z) points.push_back(Point{z});
  return DigitalImage(1, std::move(points), Adjacency::cu(1));
}

DigitalImage np_product(const DigitalImage& x, const DigitalImage& y,
                        NPLevel level) {
  const int nx = x.size();
  const int ny = y.size();
  const int max_adjacent = static_cast<int>(level);
  std::vector<Point> points;
  points.reserve(static_cast<std::size_t>(nx) * ny);
  for (int i = 0; i < nx; ++i) {
    for (int j = 0; j < ny; ++j) {
      Point p = x.point(i);
      p.coords.insert(p.coords.end(), y.point(j).coords.begin(),
                      y.point(j).coords.end());
      points.push_back(std::move(p));
    }
  }
  std::vector<std::pair<int, int>> edges;
  const int total = nx * ny;
  for (int p = 0; p < total; ++p) {
    const int i1 = p / ny, j1 = p % ny;
    for (int q = p + 1; q < total; ++q) {
      const int i2 = q / ny, j2 = q % ny;
      int adjacent_positions = 0;
      if (i1 != i2) {
        if (!x.adjacent(i1, i2)) continue;
        ++adjacent_positions;
      }
      if (j1 != j2) {
        if (!y.adjacent(j1, j2)) continue;
        ++adjacent_positions;
      }
      if (adjacent_positions >= 1 && adjacent_positions <= max_adjacent) {
        edges.emplace_back(p, q);
      }
    }
  }
  return DigitalImage(x.dimension() + y.dimension(), std::move(points),
                      Adjacency::explicit_edges(std::move(edges)));
}

}  // namespace dtg
