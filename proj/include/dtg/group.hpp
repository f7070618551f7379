#ifndef DTG_GROUP_HPP
#define DTG_GROUP_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace dtg {

// A finite group as a multiplication table over element indices 0..order-1.
// Identity and inverse table are derived during validation.
struct FiniteGroup {
  int order = 0;
  std::vector<std::vector<int>> table;
  int identity = 0;
  std::vector<int> inverse;
  std::vector<std::string> names;  // optional labels, empty when unnamed

  int mul(int a, int b) const { return table[a][b]; }
  int inv(int a) const { return inverse[a]; }
  std::string name_of(int a) const;
  int element_order(int a) const;
};

enum class GroupDefect { None, BadShape, NoIdentity, NotAssociative, NoInverse };

struct GroupValidation {
  std::optional<FiniteGroup> group;
  GroupDefect defect = GroupDefect::None;
  std::array<int, 3> witness{-1, -1, -1};
  std::string message;

  bool ok() const { return group.has_value(); }
};

// Accepts exactly the square tables satisfying the identity, associativity,
// and inverse axioms; on rejection the defect carries a concrete witness.
GroupValidation validate_group(const std::vector<std::vector<int>>& table,
                               std::vector<std::string> names = {});

FiniteGroup cyclic_group(int n);

// Dihedral group of order 8, elements ordered e,r,r2,r3,s,rs,r2s,r3s with
// s*r^k = r^{-k}*s.
FiniteGroup dihedral_8();

// Direct product; element (a,b) has index a*|H|+b.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

struct SubgroupInfo {
  std::vector<int> closure;  // smallest subgroup containing the input set
  bool is_subgroup = false;  // the input set itself is a subgroup
  bool is_normal = false;    // the closure is normal in the ambient group
  bool is_symmetric_genset = false;  // inverse-closed and identity-free
};

SubgroupInfo subgroup_ops(const FiniteGroup& g, const std::vector<int>& s);

struct QuotientGroup {
  FiniteGroup group;
  std::vector<int> coset_of;         // element index -> coset index
  std::vector<int> representatives;  // minimal element per coset
};

// Throws std::invalid_argument when the given set is not a normal subgroup.
// Cosets are ordered by their minimal element.
QuotientGroup quotient_group(const FiniteGroup& g,
                             const std::vector<int>& normal_subgroup);

struct HomReport {
  bool is_hom = false;
  std::optional<std::array<int, 2>> witness;  // pair with f(xy) != f(x)f(y)
  std::vector<int> kernel;                    // sorted preimage of identity
  std::vector<int> image;                     // sorted distinct values
};

HomReport hom_check(const FiniteGroup& g, const FiniteGroup& h,
                    const std::vector<int>& f);

// Every subgroup, as sorted element sets in lexicographic order.
std::vector<std::vector<int>> all_subgroups(const FiniteGroup& g);

// First subgroup K (in lexicographic order) with K intersect N = {e} and
// |K|*|N| = |G|, or nullopt after exhausting all subgroups.
std::optional<std::vector<int>> find_complement(
    const FiniteGroup& g, const std::vector<int>& normal_subgroup);

// Group isomorphism as an element map, found by backtracking with
// element-order pruning; nullopt when the groups are not isomorphic.
std::optional<std::vector<int>> find_group_isomorphism(const FiniteGroup& g,
                                                       const FiniteGroup& h);

bool groups_isomorphic(const FiniteGroup& g, const FiniteGroup& h);

}  // namespace dtg

#endif
