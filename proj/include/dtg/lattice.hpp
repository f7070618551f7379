#ifndef DTG_LATTICE_HPP
#define DTG_LATTICE_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace dtg {

using Coord = std::int64_t;

// A point of the integer lattice Z^n.
struct Point {
  std::vector<Coord> coords;

  Point() = default;
  Point(std::initializer_list<Coord> cs) : coords(cs) {}
  explicit Point(std::vector<Coord> cs) : coords(std::move(cs)) {}

  int dimension() const { return static_cast<int>(coords.size()); }
  bool operator==(const Point& other) const = default;
  bool operator<(const Point& other) const { return coords < other.coords; }
};

// True iff p and q are distinct, every coordinate differs by at most 1, and
// the number of coordinates differing by exactly 1 is between 1 and u.
bool cu_adjacent(const Point& p, const Point& q, int u);

// Adjacency relation of a digital image: the standard c_u relation evaluated
// on point coordinates, or an explicit edge set over point indices.
class Adjacency {
 public:
  enum class Kind { CU, Explicit };

  static Adjacency cu(int u);
  // Edges are normalized to a<b, deduplicated and sorted. Self-loops are
  // rejected; index ranges are validated by DigitalImage.
  static Adjacency explicit_edges(std::vector<std::pair<int, int>> edges);

  Kind kind() const { return kind_; }
  int u() const { return u_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

 private:
  Adjacency() = default;
  Kind kind_ = Kind::CU;
  int u_ = 1;
  std::vector<std::pair<int, int>> edges_;
};

// A finite set of distinct lattice points with an antireflexive, symmetric
// adjacency relation. Immutable after construction; all higher layers refer
// to points by their index in the point list.
class DigitalImage {
 public:
  DigitalImage(int dimension, std::vector<Point> points, Adjacency adjacency);

  int dimension() const { return dimension_; }
  int size() const { return static_cast<int>(points_.size()); }
  const std::vector<Point>& points() const { return points_; }
  const Point& point(int i) const;
  const Adjacency& adjacency() const { return adjacency_; }

  bool adjacent(int i, int j) const;
  const std::vector<int>& neighbors(int i) const;
  int degree(int i) const;
  // All edges, normalized a<b and sorted lexicographically.
  std::vector<std::pair<int, int>> edge_list() const;
  int edge_count() const;

 private:
  void check_index(int i) const;

  int dimension_ = 0;
  std::vector<Point> points_;
  Adjacency adjacency_;
  std::vector<std::vector<bool>> adj_;
  std::vector<std::vector<int>> neighbors_;
};

// The digital interval [a,b] in Z with c_1 adjacency; requires a < b.
DigitalImage digital_interval(Coord a, Coord b);

// Product adjacency strength: tuples are adjacent when their coordinates are
// adjacent in at most `level` positions and equal in the rest.
enum class NPLevel { NP1 = 1, NP2 = 2 };

// Cartesian product of two images under the normal product adjacency.
// Point (i,j) of the product has index i*|Y|+j and coordinates
// concat(X[i], Y[j]); the result always stores an explicit edge set.
DigitalImage np_product(const DigitalImage& x, const DigitalImage& y,
                        NPLevel level);

}  // namespace dtg

#endif
