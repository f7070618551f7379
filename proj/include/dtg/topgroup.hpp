#ifndef DTG_TOPGROUP_HPP
#define DTG_TOPGROUP_HPP

#include <array>
#include <optional>
#include <vector>

#include "dtg/graph.hpp"
#include "dtg/group.hpp"
#include "dtg/lattice.hpp"

namespace dtg {

struct ContinuityWitness {
  int a = -1, b = -1;    // adjacent pair in the domain
  int fa = -1, fb = -1;  // their non-adjacent, non-equal images
};

struct ContinuityReport {
  bool ok = true;
  std::optional<ContinuityWitness> witness;
};

// ok iff every adjacent pair of x maps to adjacent-or-equal points of y.
// The witness is the first failing pair in lexicographic index order.
ContinuityReport check_continuous(const std::vector<int>& f,
                                  const DigitalImage& x,
                                  const DigitalImage& y);

// A failed multiplication-continuity check, decoded to factor indices.
struct ProductWitness {
  std::array<int, 2> first{-1, -1};   // (x1, y1)
  std::array<int, 2> second{-1, -1};  // (x2, y2)
  int image_first = -1, image_second = -1;
};

struct VerifyReport {
  bool ok = true;
  std::optional<ProductWitness> multiplication_witness;
  std::optional<ContinuityWitness> inverse_witness;
};

// Checks that the multiplication is continuous from the NP product at the
// given level and that the inverse map is continuous. Element i of the group
// is point i of the image; throws when the sizes differ.
VerifyReport verify_dtg(const DigitalImage& image, const FiniteGroup& group,
                        NPLevel level);

// Highest level at which (image, group) verifies; nullopt when NP1 fails.
std::optional<NPLevel> np_level(const DigitalImage& image,
                                const FiniteGroup& group);

// A digital image carrying a group structure; `level` is the highest level
// at which the pair verified (nullopt for a pair that is not a digital
// topological group at all).
struct DTG {
  DigitalImage image;
  FiniteGroup group;
  std::optional<NPLevel> level;

  bool verified(NPLevel l) const {
    return level.has_value() && static_cast<int>(*level) >= static_cast<int>(l);
  }
};

DTG make_dtg(DigitalImage image, FiniteGroup group);

struct TranslationMaps {
  std::vector<int> left;   // y -> x*y
  std::vector<int> right;  // y -> y*x
  bool both_isomorphisms = false;
};

TranslationMaps translations(const DigitalImage& image,
                             const FiniteGroup& group, int x);

struct TranslationWitness {
  int element = -1;
  bool left = true;  // which family failed
  ContinuityWitness pair;
};

struct TranslationReport {
  bool ok = true;
  std::optional<TranslationWitness> witness;
};

// ok iff every left and right translation is continuous, which certifies the
// pair at NP1 (equivalent to verify_dtg at NP1).
TranslationReport dtg_from_translations(const DigitalImage& image,
                                        const FiniteGroup& group);

// Requires the multiplication to be continuous at `level` (throws otherwise)
// and reports whether the inverse map is continuous.
bool inverse_continuity_check(const DigitalImage& image,
                              const FiniteGroup& group, NPLevel level);

struct ComponentStructure {
  ComponentDecomposition decomposition;
  std::vector<int> identity_component;  // sorted vertex set of G_e
  bool components_pairwise_isomorphic = false;
  bool identity_component_normal = false;
  FiniteGroup component_group;  // structure on component labels
  bool quotient_iso_ok = false;  // G/G_e isomorphic to the component group
};

// Requires a DTG verified at NP1.
ComponentStructure component_structure(const DTG& d);

// Product image at `level` with the direct-product group structure;
// both factors must be verified at `level`. The result is re-verified.
DTG dtg_product(const DTG& a, const DTG& b, NPLevel level);

// Quotient by a normal subgroup: carrier on cosets with explicit adjacency
// (cosets adjacent when some members are, never self-adjacent), quotient
// group structure, re-verified at the level of the input.
DTG dtg_quotient(const DTG& d, const std::vector<int>& normal_subgroup);

struct Np2Classification {
  bool admits_np2 = false;
  int clique_size = 0;
  int clique_count = 0;
  std::optional<FiniteGroup> witness_group;  // verified NP2 structure
};

// A digital image admits an NP2 group structure iff it is a regular cluster
// graph; when it does, a witness structure on Z_n x Z_k is constructed and
// verified before being returned.
Np2Classification classify_np2(const DigitalImage& image);

enum class Z2Verdict { SimpleClosedCurve, AtMostTwoPoints, NotATopologicalGroup };

// Classification of connected images in (Z^2, c_1); throws when the image is
// not 2-dimensional with c_1 adjacency, or not connected.
Z2Verdict classify_z2_c1(const DigitalImage& image);

const char* to_string(Z2Verdict v);
const char* to_string(NPLevel level);

}  // namespace dtg

#endif
