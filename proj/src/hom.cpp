#include "dtg/hom.hpp"

#include <algorithm>
#include <stdexcept>

namespace dtg {

DTGHom check_dtg_hom(const DTG& source, const DTG& target,
                     const std::vector<int>& map) {
  DTGHom h{source, target, map, false, false, {}, {}};
  h.hom = hom_check(source.group, target.group, map);
  h.is_hom = h.hom.is_hom;
  h.continuity = check_continuous(map, source.image, target.image);
  h.is_continuous = h.continuity.ok;
  return h;
}

OpenMapReport is_open_map(const DTGHom& h) {
  const auto& f = h.map;
  std::vector<std::vector<int>> preimage(h.target.image.size());
  for (int x = 0; x < static_cast<int>(f.size()); ++x) {
    preimage[f[x]].push_back(x);
  }
  for (int z = 0; z < h.target.image.size(); ++z) {
    if (preimage[z].empty()) continue;
    for (int w = z + 1; w < h.target.image.size(); ++w) {
      if (preimage[w].empty() || !h.target.image.adjacent(z, w)) continue;
      bool touched = false;
      for (int a : preimage[z]) {
        for (int b : preimage[w]) {
          if (a == b || h.source.image.adjacent(a, b)) {
            touched = true;
            break;
          }
        }
        if (touched) break;
      }
      if (!touched) return {false, std::array<int, 2>{z, w}};
    }
  }
  return {true, std::nullopt};
}

FirstIsomorphism first_isomorphism(const DTGHom& h) {
  if (!h.is_hom || !h.is_continuous) {
    throw std::invalid_argument(
        "first_isomorphism: the map must be a continuous homomorphism");
  }
  if (!h.source.level.has_value()) {
    throw std::invalid_argument(
        "first_isomorphism: source is not a verified digital topological "
        "group");
  }

  FirstIsomorphism out{dtg_quotient(h.source, h.hom.kernel),
                       DTG{h.target.image, h.target.group, std::nullopt},
                       {},
                       false,
                       false};

  // The image of the map, carrying the restriction of the target adjacency
  // and the restriction of the target multiplication.
  const std::vector<int>& image_set = h.hom.image;  // sorted
  std::vector<int> position(h.target.image.size(), -1);
  for (int i = 0; i < static_cast<int>(image_set.size()); ++i) {
    position[image_set[i]] = i;
  }
  const int s = static_cast<int>(image_set.size());
  std::vector<std::vector<int>> table(s, std::vector<int>(s));
  for (int a = 0; a < s; ++a) {
    for (int b = 0; b < s; ++b) {
      const int prod = h.target.group.mul(image_set[a], image_set[b]);
      if (position[prod] == -1) {
        throw std::logic_error("first_isomorphism: image is not closed");
      }
      table[a][b] = position[prod];
    }
  }
  out.image_subgroup = make_dtg(induced_subimage(h.target.image, image_set),
                                *validate_group(table).group);

  const QuotientGroup q = quotient_group(h.source.group, h.hom.kernel);
  out.induced_map.resize(q.group.order);
  for (int c = 0; c < q.group.order; ++c) {
    out.induced_map[c] = position[h.map[q.representatives[c]]];
  }
  out.factorization_ok = true;
  for (int x = 0; x < h.source.group.order; ++x) {
    if (out.induced_map[q.coset_of[x]] != position[h.map[x]]) {
      out.factorization_ok = false;
      break;
    }
  }

  std::vector<bool> hit(s, false);
  bool bijective = true;
  for (int v : out.induced_map) {
    if (v < 0 || hit[v]) bijective = false;
    else hit[v] = true;
  }
  out.is_dtg_isomorphism =
      bijective && static_cast<int>(out.induced_map.size()) == s &&
      check_continuous(out.induced_map, out.quotient.image,
                       out.image_subgroup.image)
          .ok;
  if (out.is_dtg_isomorphism) {
    std::vector<int> inverse_map(s);
    for (int c = 0; c < s; ++c) inverse_map[out.induced_map[c]] = c;
    out.is_dtg_isomorphism = check_continuous(inverse_map,
                                              out.image_subgroup.image,
                                              out.quotient.image)
                                 .ok;
  }
  if (!out.is_dtg_isomorphism && is_open_map(h).open &&
      h.target.level.has_value()) {
    throw std::runtime_error(
        "first_isomorphism: an open continuous homomorphism failed to induce "
        "a digital isomorphism; this falsifies the factorization theorem");
  }
  return out;
}

IdentityContinuityReport continuity_from_identity(const DTG& source,
                                                  const DTG& target,
                                                  const std::vector<int>& map) {
  auto hr = hom_check(source.group, target.group, map);
  if (!hr.is_hom) {
    throw std::invalid_argument(
        "continuity_from_identity: the map is not a group homomorphism");
  }
  IdentityContinuityReport out;
  const int e = source.group.identity;
  const int e_target = target.group.identity;
  for (int x : source.image.neighbors(e)) {
    if (map[x] != e_target && !target.image.adjacent(map[x], e_target)) {
      out.local_ok = false;
      out.witness = x;
      break;
    }
  }
  out.global_ok = check_continuous(map, source.image, target.image).ok;
  if (out.local_ok && !out.global_ok && source.level.has_value() &&
      target.level.has_value()) {
    throw std::runtime_error(
        "continuity_from_identity: local continuity did not imply global "
        "continuity on verified groups; this falsifies the local-to-global "
        "property");
  }
  return out;
}

}  // namespace dtg
