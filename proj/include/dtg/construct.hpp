#ifndef DTG_CONSTRUCT_HPP
#define DTG_CONSTRUCT_HPP

#include <optional>
#include <string>
#include <vector>

#include "dtg/topgroup.hpp"

namespace dtg {

enum class SccAmbient { Abstract, Plane };

// A simple closed curve of n points carrying the cyclic rotation structure.
// The abstract variant uses an explicit cycle on 1-dimensional points; the
// plane variant realizes the curve as an axis-aligned rectangle boundary in
// (Z^2, c_1), available for even n >= 8. Always verified at NP1.
DTG scc_group(int n, SccAmbient ambient = SccAmbient::Abstract);

struct CayleyOutcome {
  DigitalImage image;
  FiniteGroup group;
  VerifyReport verification;  // NP1 check of the constructed pair
  std::optional<DTG> dtg;     // present iff verification.ok
};

// The Cayley graph of (g, gens): vertex set g, an edge from x to s*x for
// every s in gens. Requires gens to be inverse-closed and identity-free
// (throws std::invalid_argument otherwise). The constructed pair is checked
// at NP1; a failed check is returned as a refutation witness rather than a
// group, since not every symmetric generating set yields a continuous
// multiplication.
CayleyOutcome cayley_graph(const FiniteGroup& g, const std::vector<int>& gens);

// Some generator x with x*x not in gens and x*x != e, certifying that the
// Cayley pair is not an NP2 group; nullopt when no generator qualifies.
std::optional<int> cayley_np2_obstruction(const FiniteGroup& g,
                                          const std::vector<int>& gens);

// k disjoint complete graphs on n vertices with the Z_n x Z_k structure,
// verified at NP2. Vertex j*n+i carries the coordinates (i,j).
DTG cluster_np2_group(int n, int k);

struct HypercubeEmbedding {
  DigitalImage image;           // in [-1,1]^m with c_m adjacency, m < |X|
  std::vector<int> vertex_map;  // original vertex -> embedded point index
};

// Realizes any image of k >= 2 points as a digital image in the cube
// [-1,1]^(k-1) under c_{k-1}, graph-isomorphic to the input.
HypercubeEmbedding embed_in_hypercube(const DigitalImage& x);

struct Fixture {
  std::string name;
  std::string summary;
  DTG dtg;
};

// The named gallery: d8-cube, d8-split, scc16-mod4, cross4-c1, cross4-c2,
// unit-square-c2. Levels are computed, not assumed.
const std::vector<Fixture>& fixtures();
const Fixture& fixture(const std::string& name);  // throws on unknown name

}  // namespace dtg

#endif
