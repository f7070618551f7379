#include "dtg/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace dtg {

Permutation Permutation::identity(int n) {
  Permutation p;
  p.map.resize(n);
  std::iota(p.map.begin(), p.map.end(), 0);
  return p;
}

Permutation Permutation::compose(const Permutation& other) const {
  Permutation r;
  r.map.resize(map.size());
  for (int i = 0; i < size(); ++i) r.map[i] = map[other.map[i]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.map.resize(map.size());
  for (int i = 0; i < size(); ++i) r.map[map[i]] = i;
  return r;
}

ComponentDecomposition components(const DigitalImage& x) {
  const int m = x.size();
  ComponentDecomposition out;
  out.component_id.assign(m, -1);
  for (int start = 0; start < m; ++start) {
    if (out.component_id[start] != -1) continue;
    const int label = static_cast<int>(out.components.size());
    std::vector<int> stack{start};
    std::vector<int> members;
    out.component_id[start] = label;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (int w : x.neighbors(v)) {
        if (out.component_id[w] == -1) {
          out.component_id[w] = label;
          stack.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.components.push_back(std::move(members));
  }
  return out;
}

DegreeProfile degree_profile(const DigitalImage& x) {
  DegreeProfile p;
  const int m = x.size();
  p.degrees.resize(m);
  for (int i = 0; i < m; ++i) p.degrees[i] = x.degree(i);
  p.is_regular = true;
  for (int d : p.degrees) {
    if (d != p.degrees[0]) {
      p.is_regular = false;
      break;
    }
  }
  p.is_complete = p.is_regular && m > 0 && p.degrees[0] == m - 1;
  if (m == 0) p.is_complete = true;
  return p;
}

bool is_simple_closed_curve(const DigitalImage& x) {
  if (x.size() < 3) return false;
  for (int i = 0; i < x.size(); ++i) {
    if (x.degree(i) != 2) return false;
  }
  return components(x).components.size() == 1;
}

bool is_cluster_graph(const DigitalImage& x) {
  for (const auto& comp : components(x).components) {
    for (std::size_t a = 0; a < comp.size(); ++a) {
      for (std::size_t b = a + 1; b < comp.size(); ++b) {
        if (!x.adjacent(comp[a], comp[b])) return false;
      }
    }
  }
  return true;
}

DigitalImage induced_subimage(const DigitalImage& x,
                              const std::vector<int>& vertices) {
  std::vector<Point> points;
  points.reserve(vertices.size());
  for (int v : vertices) points.push_back(x.point(v));
  std::vector<std::pair<int, int>> edges;
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      if (x.adjacent(vertices[a], vertices[b])) {
        edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
      }
    }
  }
  return DigitalImage(x.dimension(), std::move(points),
                      Adjacency::explicit_edges(std::move(edges)));
}

namespace {

// Per-vertex refinement key: degree plus the sorted degrees of neighbors.
std::vector<std::vector<int>> vertex_keys(const DigitalImage& x) {
  std::vector<std::vector<int>> keys(x.size());
  for (int i = 0; i < x.size(); ++i) {
    std::vector<int> k{x.degree(i)};
    for (int j : x.neighbors(i)) k.push_back(x.degree(j));
    std::sort(k.begin() + 1, k.end());
    keys[i] = std::move(k);
  }
  return keys;
}

// Backtracking enumeration of adjacency-preserving bijections from x to y.
// The sink receives each complete map; returning false stops the search.
void search_isomorphisms(const DigitalImage& x, const DigitalImage& y,
                         const std::function<bool(const std::vector<int>&)>& sink) {
  const int m = x.size();
  if (y.size() != m) return;
  const auto kx = vertex_keys(x);
  const auto ky = vertex_keys(y);
  {
    auto sx = kx;
    auto sy = ky;
    std::sort(sx.begin(), sx.end());
    std::sort(sy.begin(), sy.end());
    if (sx != sy) return;
  }
  std::vector<int> map(m, -1);
  std::vector<bool> used(m, false);
  bool stop = false;
  std::function<void(int)> extend = [&](int v) {
    if (stop) return;
    if (v == m) {
      if (!sink(map)) stop = true;
      return;
    }
    for (int w = 0; w < m && !stop; ++w) {
      if (used[w] || kx[v] != ky[w]) continue;
      bool ok = true;
      for (int u = 0; u < v; ++u) {
        if (x.adjacent(v, u) != y.adjacent(w, map[u])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      map[v] = w;
      used[w] = true;
      extend(v + 1);
      map[v] = -1;
      used[w] = false;
    }
  };
  extend(0);
}

void check_size_bound(const DigitalImage& x, int size_bound,
                      const char* what) {
  if (x.size() > size_bound) {
    throw std::invalid_argument(std::string(what) + ": image has " +
                                std::to_string(x.size()) +
                                " points, exceeding the bound " +
                                std::to_string(size_bound));
  }
}

}  // namespace

std::vector<Permutation> automorphisms(const DigitalImage& x, int size_bound) {
  check_size_bound(x, size_bound, "automorphisms");
  // A complete bijection found by the search preserves adjacency in both
  // directions (every pair is compared once), so each hit is an automorphism.
  std::vector<Permutation> out;
  const std::size_t cap = 1u << 20;
  search_isomorphisms(x, x, [&](const std::vector<int>& map) {
    out.push_back(Permutation{map});
    if (out.size() > cap) {
      throw std::runtime_error("automorphisms: group larger than the cap");
    }
    return true;
  });
  return out;
}

std::optional<Permutation> find_isomorphism(const DigitalImage& x,
                                            const DigitalImage& y,
                                            int size_bound) {
  check_size_bound(x, size_bound, "find_isomorphism");
  check_size_bound(y, size_bound, "find_isomorphism");
  if (x.size() != y.size() || x.edge_count() != y.edge_count()) {
    return std::nullopt;
  }
  std::optional<Permutation> found;
  search_isomorphisms(x, y, [&](const std::vector<int>& map) {
    found = Permutation{map};
    return false;
  });
  return found;
}

Transitivity transitivity(const DigitalImage& x, int size_bound) {
  const auto autos = automorphisms(x, size_bound);
  const int m = x.size();
  Transitivity t;

  std::vector<int> vertex_orbit(m);
  std::iota(vertex_orbit.begin(), vertex_orbit.end(), 0);
  std::function<int(int)> find = [&](int v) {
    while (vertex_orbit[v] != v) v = vertex_orbit[v] = vertex_orbit[vertex_orbit[v]];
    return v;
  };
  for (const auto& a : autos) {
    for (int v = 0; v < m; ++v) {
      int r1 = find(v), r2 = find(a(v));
      if (r1 != r2) vertex_orbit[r1] = r2;
    }
  }
  int orbit_count = 0;
  for (int v = 0; v < m; ++v) {
    if (find(v) == v) ++orbit_count;
  }
  t.vertex_transitive = (m == 0) || orbit_count == 1;

  const auto edges = x.edge_list();
  auto edge_index = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(a, b));
    return static_cast<int>(it - edges.begin());
  };
  std::vector<int> edge_orbit(edges.size());
  std::iota(edge_orbit.begin(), edge_orbit.end(), 0);
  std::function<int(int)> efind = [&](int e) {
    while (edge_orbit[e] != e) e = edge_orbit[e] = edge_orbit[edge_orbit[e]];
    return e;
  };
  for (const auto& a : autos) {
    for (std::size_t e = 0; e < edges.size(); ++e) {
      int im = edge_index(a(edges[e].first), a(edges[e].second));
      int r1 = efind(static_cast<int>(e)), r2 = efind(im);
      if (r1 != r2) edge_orbit[r1] = r2;
    }
  }
  int edge_orbits = 0;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (efind(static_cast<int>(e)) == static_cast<int>(e)) ++edge_orbits;
  }
  t.edge_transitive = edges.empty() || edge_orbits == 1;
  return t;
}

}  // namespace dtg
