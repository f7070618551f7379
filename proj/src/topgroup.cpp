#include "dtg/topgroup.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace dtg {

const char* to_string(Z2Verdict v) {
  switch (v) {
    case Z2Verdict::SimpleClosedCurve: return "simple-closed-curve";
    case Z2Verdict::AtMostTwoPoints: return "at-most-2-points";
    case Z2Verdict::NotATopologicalGroup: return "not-a-dtg";
  }
  return "?";
}

const char* to_string(NPLevel level) {
  return level == NPLevel::NP1 ? "NP1" : "NP2";
}

ContinuityReport check_continuous(const std::vector<int>& f,
                                  const DigitalImage& x,
                                  const DigitalImage& y) {
  if (static_cast<int>(f.size()) != x.size()) {
    throw std::invalid_argument("check_continuous: map is not total");
  }
  for (int v : f) {
    if (v < 0 || v >= y.size()) {
      throw std::invalid_argument("check_continuous: map value out of range");
    }
  }
  for (const auto& [a, b] : x.edge_list()) {
    if (f[a] != f[b] && !y.adjacent(f[a], f[b])) {
      return {false, ContinuityWitness{a, b, f[a], f[b]}};
    }
  }
  return {true, std::nullopt};
}

VerifyReport verify_dtg(const DigitalImage& image, const FiniteGroup& group,
                        NPLevel level) {
  const int m = image.size();
  if (group.order != m) {
    throw std::invalid_argument("verify_dtg: image has " + std::to_string(m) +
                                " points but the group has order " +
                                std::to_string(group.order));
  }
  VerifyReport report;

  const DigitalImage product = np_product(image, image, level);
  for (const auto& [p, q] : product.edge_list()) {
    const int fp = group.mul(p / m, p % m);
    const int fq = group.mul(q / m, q % m);
    if (fp != fq && !image.adjacent(fp, fq)) {
      report.ok = false;
      report.multiplication_witness =
          ProductWitness{{p / m, p % m}, {q / m, q % m}, fp, fq};
      break;
    }
  }

  auto inv = check_continuous(group.inverse, image, image);
  if (!inv.ok) {
    report.ok = false;
    report.inverse_witness = inv.witness;
  }
  return report;
}

std::optional<NPLevel> np_level(const DigitalImage& image,
                                const FiniteGroup& group) {
  if (verify_dtg(image, group, NPLevel::NP2).ok) return NPLevel::NP2;
  if (verify_dtg(image, group, NPLevel::NP1).ok) return NPLevel::NP1;
  return std::nullopt;
}

DTG make_dtg(DigitalImage image, FiniteGroup group) {
  auto level = np_level(image, group);
  return DTG{std::move(image), std::move(group), level};
}

TranslationMaps translations(const DigitalImage& image,
                             const FiniteGroup& group, int x) {
  if (image.size() != group.order) {
    throw std::invalid_argument("translations: size mismatch");
  }
  if (x < 0 || x >= group.order) {
    throw std::invalid_argument("translations: element out of range");
  }
  TranslationMaps t;
  t.left.resize(group.order);
  t.right.resize(group.order);
  for (int y = 0; y < group.order; ++y) {
    t.left[y] = group.mul(x, y);
    t.right[y] = group.mul(y, x);
  }
  auto is_iso = [&](const std::vector<int>& f) {
    for (int a = 0; a < group.order; ++a) {
      for (int b = a + 1; b < group.order; ++b) {
        if (image.adjacent(a, b) != image.adjacent(f[a], f[b])) return false;
      }
    }
    return true;
  };
  t.both_isomorphisms = is_iso(t.left) && is_iso(t.right);
  return t;
}

TranslationReport dtg_from_translations(const DigitalImage& image,
                                        const FiniteGroup& group) {
  if (image.size() != group.order) {
    throw std::invalid_argument("dtg_from_translations: size mismatch");
  }
  for (int x = 0; x < group.order; ++x) {
    TranslationMaps t = translations(image, group, x);
    auto left = check_continuous(t.left, image, image);
    if (!left.ok) {
      return {false, TranslationWitness{x, true, *left.witness}};
    }
    auto right = check_continuous(t.right, image, image);
    if (!right.ok) {
      return {false, TranslationWitness{x, false, *right.witness}};
    }
  }
  return {true, std::nullopt};
}

bool inverse_continuity_check(const DigitalImage& image,
                              const FiniteGroup& group, NPLevel level) {
  const int m = image.size();
  if (group.order != m) {
    throw std::invalid_argument("inverse_continuity_check: size mismatch");
  }
  const DigitalImage product = np_product(image, image, level);
  for (const auto& [p, q] : product.edge_list()) {
    const int fp = group.mul(p / m, p % m);
    const int fq = group.mul(q / m, q % m);
    if (fp != fq && !image.adjacent(fp, fq)) {
      throw std::invalid_argument(
          "inverse_continuity_check: multiplication is not continuous at the "
          "requested level");
    }
  }
  return check_continuous(group.inverse, image, image).ok;
}

ComponentStructure component_structure(const DTG& d) {
  if (!d.verified(NPLevel::NP1)) {
    throw std::invalid_argument(
        "component_structure: input is not a verified digital topological "
        "group");
  }
  const FiniteGroup& g = d.group;
  ComponentStructure out;
  out.decomposition = components(d.image);
  const auto& comp = out.decomposition;
  const int k = static_cast<int>(comp.components.size());
  const int e_label = comp.component_id[g.identity];
  out.identity_component = comp.components[e_label];

  out.components_pairwise_isomorphic = true;
  DigitalImage identity_part = induced_subimage(d.image, out.identity_component);
  for (int c = 0; c < k; ++c) {
    if (c == e_label) continue;
    if (!find_isomorphism(identity_part,
                          induced_subimage(d.image, comp.components[c]),
                          d.image.size())) {
      out.components_pairwise_isomorphic = false;
      break;
    }
  }

  auto info = subgroup_ops(g, out.identity_component);
  out.identity_component_normal = info.is_subgroup && info.is_normal;

  // Component product: the label of x*y must depend only on the labels of x
  // and y. For a verified group this is always well-defined; a violation
  // would falsify the construction, so it is reported loudly.
  std::vector<std::vector<int>> table(k, std::vector<int>(k, -1));
  for (int x = 0; x < g.order; ++x) {
    for (int y = 0; y < g.order; ++y) {
      const int cx = comp.component_id[x];
      const int cy = comp.component_id[y];
      const int cxy = comp.component_id[g.mul(x, y)];
      if (table[cx][cy] == -1) {
        table[cx][cy] = cxy;
      } else if (table[cx][cy] != cxy) {
        throw std::runtime_error(
            "component_structure: component product is not well-defined");
      }
    }
  }
  auto v = validate_group(table);
  if (!v.ok()) {
    throw std::runtime_error(
        "component_structure: component table is not a group: " + v.message);
  }
  out.component_group = *v.group;

  out.quotient_iso_ok =
      out.identity_component_normal &&
      groups_isomorphic(quotient_group(g, out.identity_component).group,
                        out.component_group);
  return out;
}

DTG dtg_product(const DTG& a, const DTG& b, NPLevel level) {
  if (!a.verified(level) || !b.verified(level)) {
    throw std::invalid_argument(
        "dtg_product: both factors must be verified at the requested level");
  }
  DigitalImage image = np_product(a.image, b.image, level);
  FiniteGroup group = direct_product(a.group, b.group);
  DTG result = make_dtg(std::move(image), std::move(group));
  if (!result.verified(level)) {
    throw std::runtime_error(
        "dtg_product: the product failed to re-verify; this falsifies the "
        "product construction");
  }
  return result;
}

DTG dtg_quotient(const DTG& d, const std::vector<int>& normal_subgroup) {
  if (!d.level.has_value()) {
    throw std::invalid_argument(
        "dtg_quotient: input is not a verified digital topological group");
  }
  QuotientGroup q = quotient_group(d.group, normal_subgroup);
  const int k = q.group.order;

  std::vector<Point> points;
  for (int c = 0; c < k; ++c) points.push_back(Point{static_cast<Coord>(c)});
  std::vector<std::pair<int, int>> edges;
  for (const auto& [x, y] : d.image.edge_list()) {
    const int cx = q.coset_of[x];
    const int cy = q.coset_of[y];
    if (cx != cy) edges.emplace_back(std::min(cx, cy), std::max(cx, cy));
  }
  DigitalImage image(1, std::move(points),
                     Adjacency::explicit_edges(std::move(edges)));

  DTG result = make_dtg(std::move(image), q.group);
  if (!result.verified(*d.level)) {
    throw std::runtime_error(
        "dtg_quotient: the quotient failed to re-verify at the input's "
        "level; this falsifies the quotient construction");
  }
  return result;
}

Np2Classification classify_np2(const DigitalImage& image) {
  Np2Classification out;
  const auto comp = components(image);
  const int k = static_cast<int>(comp.components.size());
  if (k == 0) return out;
  const int n = static_cast<int>(comp.components[0].size());
  bool equal_sizes = true;
  for (const auto& c : comp.components) {
    if (static_cast<int>(c.size()) != n) equal_sizes = false;
  }
  if (!equal_sizes || !is_cluster_graph(image)) return out;

  out.admits_np2 = true;
  out.clique_size = n;
  out.clique_count = k;

  // Coordinates (i,j) in Z_n x Z_k: the component of vertex 0 comes first,
  // labeled through some fixed isomorphism from it to every other component.
  std::vector<int> component_order;
  const int first = comp.component_id[0];
  component_order.push_back(first);
  for (int c = 0; c < k; ++c) {
    if (c != first) component_order.push_back(c);
  }
  DigitalImage base = induced_subimage(image, comp.components[first]);
  // label[v] = (i, j)
  std::vector<std::pair<int, int>> label(image.size());
  std::vector<std::vector<int>> vertex_at(n, std::vector<int>(k, -1));
  for (int j = 0; j < k; ++j) {
    const auto& members = comp.components[component_order[j]];
    std::vector<int> iso(n);
    if (j == 0) {
      for (int i = 0; i < n; ++i) iso[i] = i;
    } else {
      auto found =
          find_isomorphism(base, induced_subimage(image, members), image.size());
      if (!found) {
        throw std::runtime_error(
            "classify_np2: equal-size complete components failed to match");
      }
      iso = found->map;
    }
    for (int i = 0; i < n; ++i) {
      const int v = members[iso[i]];
      label[v] = {i, j};
      vertex_at[i][j] = v;
    }
  }
  std::vector<std::vector<int>> table(image.size(),
                                      std::vector<int>(image.size()));
  for (int v = 0; v < image.size(); ++v) {
    for (int w = 0; w < image.size(); ++w) {
      const auto [i, j] = label[v];
      const auto [a, b] = label[w];
      table[v][w] = vertex_at[(i + a) % n][(j + b) % k];
    }
  }
  auto validation = validate_group(table);
  if (!validation.ok()) {
    throw std::runtime_error("classify_np2: witness table is not a group: " +
                             validation.message);
  }
  if (!verify_dtg(image, *validation.group, NPLevel::NP2).ok) {
    throw std::runtime_error(
        "classify_np2: witness structure failed NP2 verification; this "
        "falsifies the cluster-graph construction");
  }
  out.witness_group = std::move(*validation.group);
  return out;
}

Z2Verdict classify_z2_c1(const DigitalImage& image) {
  if (image.dimension() != 2 ||
      image.adjacency().kind() != Adjacency::Kind::CU ||
      image.adjacency().u() != 1) {
    throw std::invalid_argument(
        "classify_z2_c1: image must live in Z^2 with c_1 adjacency");
  }
  if (components(image).components.size() != 1) {
    throw std::invalid_argument("classify_z2_c1: image must be connected");
  }
  if (image.size() <= 2) return Z2Verdict::AtMostTwoPoints;
  if (is_simple_closed_curve(image)) return Z2Verdict::SimpleClosedCurve;
  return Z2Verdict::NotATopologicalGroup;
}

}  // namespace dtg
