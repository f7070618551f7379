#ifndef DTG_ENUMERATE_HPP
#define DTG_ENUMERATE_HPP

#include <vector>

#include "dtg/topgroup.hpp"

namespace dtg {

inline constexpr int kDefaultStructureBound = 12;

// Every group structure making the image a verified NP1 digital topological
// group, with the identity at vertex 0. Candidates are the subgroups of the
// automorphism group that act freely and transitively on the vertices
// (generated by at most 3 fixed-point-free automorphisms); each one is
// confirmed by verify_dtg before inclusion. Output sorted by table.
std::vector<FiniteGroup> dtg_structures(const DigitalImage& image,
                                        int size_bound = kDefaultStructureBound);

struct Z2ScanRecord {
  std::vector<Point> cells;  // anchored at the lower-left window corner
  int size = 0;
  bool expected_admits = false;  // simple closed curve or at most 2 points
  int structure_count = 0;
  bool consistent = false;
};

struct Z2ScanReport {
  int half_width = 0;
  long long connected_subsets = 0;
  long long exceptions = 0;
  std::vector<Z2ScanRecord> records;
};

// Enumerates the connected subsets of the window [-w,w]^2 under c_1, one per
// translation class, and checks that group structures exist exactly on the
// simple closed curves and the sets of at most 2 points. Only half-widths 1
// and 2 are accepted. With keep_consistent_records = false only the
// exceptional records are retained.
Z2ScanReport scan_z2_windows(int half_width,
                             bool keep_consistent_records = true);

struct Np2ScanRecord {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;  // representative of the class
  int structure_count = 0;      // NP1 structures
  int np2_structure_count = 0;  // structures that also verify at NP2
  bool regular_cluster = false;
  bool consistent = false;  // (np2 structures exist) == regular cluster
};

struct Np2ScanReport {
  int max_vertices = 0;
  long long graphs_examined = 0;
  int isomorphism_classes = 0;
  long long exceptions = 0;
  std::vector<Np2ScanRecord> records;
};

// Enumerates every graph on up to max_vertices vertices (one per isomorphism
// class) and checks that NP2 structures exist exactly on the regular cluster
// graphs. Accepts max_vertices up to 7.
Np2ScanReport scan_np2(int max_vertices);

}  // namespace dtg

#endif
