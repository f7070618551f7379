#ifndef DTG_HOM_HPP
#define DTG_HOM_HPP

#include <array>
#include <optional>
#include <vector>

#include "dtg/topgroup.hpp"

namespace dtg {

struct DTGHom {
  DTG source;
  DTG target;
  std::vector<int> map;
  bool is_hom = false;
  bool is_continuous = false;
  HomReport hom;
  ContinuityReport continuity;
};

// Populates the algebraic and topological flags of the map.
DTGHom check_dtg_hom(const DTG& source, const DTG& target,
                     const std::vector<int>& map);

struct OpenMapReport {
  bool open = true;
  std::optional<std::array<int, 2>> witness;  // adjacent image points whose
                                              // preimages never touch
};

// A continuous map is open when adjacent points of its image have
// adjacent-or-equal preimage members.
OpenMapReport is_open_map(const DTGHom& h);

struct FirstIsomorphism {
  DTG quotient;        // source / kernel
  DTG image_subgroup;  // image of the map with the target's adjacency
  std::vector<int> induced_map;  // coset index -> image_subgroup index
  bool factorization_ok = false;  // induced map composed with the projection
                                  // reproduces the original map
  bool is_dtg_isomorphism = false;
};

// Factors a continuous homomorphism through its kernel. The induced map is a
// group isomorphism onto the image; it is a digital isomorphism whenever the
// original map is open, and may fail to be one otherwise.
FirstIsomorphism first_isomorphism(const DTGHom& h);

struct IdentityContinuityReport {
  bool local_ok = true;
  std::optional<int> witness;  // neighbor of the identity that maps badly
  bool global_ok = true;       // full continuity check, for comparison
};

// Checks continuity only at pairs (x, e) with x adjacent to the identity.
// For group homomorphisms of verified groups the local verdict implies the
// global one; both are reported. Throws when the map is not a homomorphism.
IdentityContinuityReport continuity_from_identity(const DTG& source,
                                                  const DTG& target,
                                                  const std::vector<int>& map);

}  // namespace dtg

#endif
