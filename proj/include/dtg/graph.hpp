#ifndef DTG_GRAPH_HPP
#define DTG_GRAPH_HPP

#include <optional>
#include <vector>

#include "dtg/lattice.hpp"

namespace dtg {

// Default cap on the vertex count accepted by the search-based operations
// (automorphisms, isomorphism, transitivity). Configurable per call.
inline constexpr int kDefaultSizeBound = 16;

struct Permutation {
  std::vector<int> map;  // image of i at position i

  int size() const { return static_cast<int>(map.size()); }
  int operator()(int i) const { return map[i]; }
  static Permutation identity(int n);
  // (a.compose(b))(i) = a(b(i))
  Permutation compose(const Permutation& other) const;
  Permutation inverse() const;
  bool operator==(const Permutation&) const = default;
  bool operator<(const Permutation& other) const { return map < other.map; }
};

struct ComponentDecomposition {
  std::vector<int> component_id;           // vertex -> component label
  std::vector<std::vector<int>> components;  // sorted members per label
};

// Connected components under the image adjacency; components are labeled in
// order of their smallest vertex.
ComponentDecomposition components(const DigitalImage& x);

struct DegreeProfile {
  std::vector<int> degrees;
  bool is_regular = false;
  bool is_complete = false;
};

DegreeProfile degree_profile(const DigitalImage& x);

// A connected 2-regular image on at least 3 points (a cycle graph).
bool is_simple_closed_curve(const DigitalImage& x);

// Every connected component is a complete graph.
bool is_cluster_graph(const DigitalImage& x);

// The induced image on the given vertices (original coordinates, adjacency
// restricted and stored explicitly). Vertex i of the result is vertices[i].
DigitalImage induced_subimage(const DigitalImage& x,
                              const std::vector<int>& vertices);

// All adjacency-preserving bijections of the vertex set, in deterministic
// backtracking order. Throws when |x| exceeds size_bound.
std::vector<Permutation> automorphisms(const DigitalImage& x,
                                       int size_bound = kDefaultSizeBound);

// First adjacency-preserving bijection x -> y whose inverse also preserves
// adjacency, or nullopt.
std::optional<Permutation> find_isomorphism(const DigitalImage& x,
                                            const DigitalImage& y,
                                            int size_bound = kDefaultSizeBound);

struct Transitivity {
  bool vertex_transitive = false;
  bool edge_transitive = false;
};

// Orbit computation over the full automorphism list; edges are unordered.
Transitivity transitivity(const DigitalImage& x,
                          int size_bound = kDefaultSizeBound);

}  // namespace dtg

#endif
