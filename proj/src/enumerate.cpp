#include "dtg/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace dtg {

namespace {

bool fixed_point_free(const std::vector<int>& perm) {
  for (int i = 0; i < static_cast<int>(perm.size()); ++i) {
    if (perm[i] == i) return false;
  }
  return true;
}

// Closure of the generators under composition, capped at max_size elements.
// Returns an empty set when the closure grows past the cap or contains a
// non-identity element with a fixed point (no free group can contain it).
std::set<std::vector<int>> free_closure(
    const std::set<std::vector<int>>& base, const std::vector<int>& extra,
    int max_size) {
  std::set<std::vector<int>> members = base;
  std::vector<std::vector<int>> frontier;
  if (members.insert(extra).second) frontier.push_back(extra);
  const int m = static_cast<int>(extra.size());
  std::vector<int> composed(m);
  while (!frontier.empty()) {
    auto g = std::move(frontier.back());
    frontier.pop_back();
    std::vector<std::vector<int>> snapshot(members.begin(), members.end());
    for (const auto& h : snapshot) {
      for (int order = 0; order < 2; ++order) {
        for (int i = 0; i < m; ++i) {
          composed[i] = order == 0 ? g[h[i]] : h[g[i]];
        }
        bool is_identity = true;
        for (int i = 0; i < m; ++i) {
          if (composed[i] != i) {
            is_identity = false;
            break;
          }
        }
        if (!is_identity && !fixed_point_free(composed)) return {};
        if (members.insert(composed).second) {
          if (static_cast<int>(members.size()) > max_size) return {};
          frontier.push_back(composed);
        }
      }
    }
  }
  return members;
}

}  // namespace

std::vector<FiniteGroup> dtg_structures(const DigitalImage& image,
                                        int size_bound) {
  const int m = image.size();
  if (m > size_bound) {
    throw std::invalid_argument("dtg_structures: image has " +
                                std::to_string(m) +
                                " points, exceeding the bound " +
                                std::to_string(size_bound));
  }
  if (m == 0) return {};
  // A structure makes every left translation an automorphism carrying the
  // identity anywhere, so irregular images admit none and the search space
  // is the set of free transitive automorphism subgroups.
  if (!degree_profile(image).is_regular) return {};

  const auto autos = automorphisms(image, m);
  std::vector<std::vector<int>> fpf;
  for (const auto& a : autos) {
    if (fixed_point_free(a.map)) fpf.push_back(a.map);
  }
  {
    // transitivity of the full automorphism group is necessary
    std::vector<bool> orbit(m, false);
    orbit[0] = true;
    int reached = 1;
    for (const auto& a : autos) {
      for (int v = 0; v < m; ++v) {
        if (orbit[v] && !orbit[a(v)]) {
          orbit[a(v)] = true;
          ++reached;
        }
      }
    }
    if (reached != m) return {};
  }

  std::vector<int> identity(m);
  for (int i = 0; i < m; ++i) identity[i] = i;

  std::set<std::set<std::vector<int>>> seen;
  std::vector<std::set<std::vector<int>>> regular;
  std::vector<std::pair<std::set<std::vector<int>>, int>> queue;
  queue.push_back({{identity}, 0});
  seen.insert(queue[0].first);
  if (m == 1) regular.push_back(queue[0].first);
  while (!queue.empty()) {
    auto [subgroup, gens] = std::move(queue.back());
    queue.pop_back();
    if (gens == 3) continue;
    for (const auto& g : fpf) {
      if (subgroup.count(g)) continue;
      auto bigger = free_closure(subgroup, g, m);
      if (bigger.empty() || !seen.insert(bigger).second) continue;
      if (static_cast<int>(bigger.size()) == m) {
        // free and of full order, hence transitive
        regular.push_back(bigger);
      } else {
        queue.push_back({std::move(bigger), gens + 1});
      }
    }
  }

  std::vector<FiniteGroup> structures;
  for (const auto& subgroup : regular) {
    std::vector<std::vector<int>> element_at(m);
    for (const auto& h : subgroup) element_at[h[0]] = h;
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    for (int u = 0; u < m; ++u) {
      for (int v = 0; v < m; ++v) table[u][v] = element_at[u][v];
    }
    auto validation = validate_group(table);
    if (!validation.ok()) continue;
    if (verify_dtg(image, *validation.group, NPLevel::NP1).ok) {
      structures.push_back(std::move(*validation.group));
    }
  }
  std::sort(structures.begin(), structures.end(),
            [](const FiniteGroup& a, const FiniteGroup& b) {
              return a.table < b.table;
            });
  return structures;
}

namespace {

struct WindowGeometry {
  int half_width;
  int side;
  int cells;
  std::vector<std::vector<int>> cell_neighbors;

  explicit WindowGeometry(int w) : half_width(w), side(2 * w + 1) {
    cells = side * side;
    cell_neighbors.resize(cells);
    for (int cx = 0; cx < side; ++cx) {
      for (int cy = 0; cy < side; ++cy) {
        const int c = cx * side + cy;
        if (cx > 0) cell_neighbors[c].push_back(c - side);
        if (cx + 1 < side) cell_neighbors[c].push_back(c + side);
        if (cy > 0) cell_neighbors[c].push_back(c - 1);
        if (cy + 1 < side) cell_neighbors[c].push_back(c + 1);
      }
    }
  }

  Point point_of(int c) const {
    return Point{static_cast<Coord>(c / side - half_width),
                 static_cast<Coord>(c % side - half_width)};
  }
};

}  // namespace

Z2ScanReport scan_z2_windows(int half_width, bool keep_consistent_records) {
  if (half_width < 1 || half_width > 2) {
    throw std::invalid_argument(
        "scan_z2_windows: half-width must be 1 or 2 (larger windows blow up "
        "combinatorially)");
  }
  const WindowGeometry geo(half_width);
  Z2ScanReport report;
  report.half_width = half_width;

  std::uint64_t column0 = 0, row0 = 0;
  for (int c = 0; c < geo.cells; ++c) {
    if (c / geo.side == 0) column0 |= 1ull << c;
    if (c % geo.side == 0) row0 |= 1ull << c;
  }

  const std::uint64_t total = 1ull << geo.cells;
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    // one representative per translation class: touch both low edges
    if (!(mask & column0) || !(mask & row0)) continue;

    const int size = __builtin_popcountll(mask);
    {
      // connectivity by bit flood fill
      std::uint64_t seen = mask & (~mask + 1);
      for (;;) {
        std::uint64_t grown = seen;
        std::uint64_t scan = seen;
        while (scan) {
          const int c = __builtin_ctzll(scan);
          scan &= scan - 1;
          for (int nb : geo.cell_neighbors[c]) {
            grown |= mask & (1ull << nb);
          }
        }
        if (grown == seen) break;
        seen = grown;
      }
      if (seen != mask) continue;
    }
    ++report.connected_subsets;

    bool regular = true;
    int degree0 = -1;
    bool two_regular = true;
    {
      std::uint64_t scan = mask;
      while (scan) {
        const int c = __builtin_ctzll(scan);
        scan &= scan - 1;
        int deg = 0;
        for (int nb : geo.cell_neighbors[c]) {
          if (mask & (1ull << nb)) ++deg;
        }
        if (degree0 == -1) degree0 = deg;
        if (deg != degree0) regular = false;
        if (deg != 2) two_regular = false;
      }
    }

    Z2ScanRecord record;
    record.size = size;
    {
      std::uint64_t scan = mask;
      while (scan) {
        const int c = __builtin_ctzll(scan);
        scan &= scan - 1;
        record.cells.push_back(geo.point_of(c));
      }
    }
    record.expected_admits = size <= 2 || (two_regular && size >= 3);
    if (regular || geo.cells <= 9) {
      DigitalImage image(2, record.cells, Adjacency::cu(1));
      record.structure_count = static_cast<int>(
          dtg_structures(image, std::max(image.size(), kDefaultStructureBound))
              .size());
    } else {
      // an irregular image is never vertex-transitive, so the search would
      // return nothing; skip building it
      record.structure_count = 0;
    }
    record.consistent = (record.structure_count > 0) == record.expected_admits;
    if (!record.consistent) ++report.exceptions;
    if (!record.consistent || keep_consistent_records) {
      report.records.push_back(std::move(record));
    }
  }
  return report;
}

Np2ScanReport scan_np2(int max_vertices) {
  if (max_vertices < 1 || max_vertices > 7) {
    throw std::invalid_argument("scan_np2: max_vertices must be in [1,7]");
  }
  Np2ScanReport report;
  report.max_vertices = max_vertices;

  for (int n = 1; n <= max_vertices; ++n) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    }
    const std::uint64_t total = 1ull << slots.size();

    // class representatives bucketed by a cheap invariant
    std::map<std::vector<int>, std::vector<int>> buckets;  // key -> rec index
    std::vector<DigitalImage> rep_images;

    for (std::uint64_t mask = 0; mask < total; ++mask) {
      ++report.graphs_examined;
      std::vector<std::pair<int, int>> edges;
      for (std::size_t s = 0; s < slots.size(); ++s) {
        if (mask & (1ull << s)) edges.push_back(slots[s]);
      }
      std::vector<Point> points;
      for (int i = 0; i < n; ++i) points.push_back(Point{static_cast<Coord>(i)});
      DigitalImage image(1, std::move(points),
                         Adjacency::explicit_edges(edges));

      std::vector<int> key{n};
      {
        std::vector<int> degrees;
        for (int v = 0; v < n; ++v) degrees.push_back(image.degree(v));
        std::sort(degrees.begin(), degrees.end());
        key.insert(key.end(), degrees.begin(), degrees.end());
        int triangles = 0;
        for (int a = 0; a < n; ++a) {
          for (int b = a + 1; b < n; ++b) {
            if (!image.adjacent(a, b)) continue;
            for (int c = b + 1; c < n; ++c) {
              if (image.adjacent(a, c) && image.adjacent(b, c)) ++triangles;
            }
          }
        }
        key.push_back(triangles);
      }

      bool known = false;
      for (int rep_index : buckets[key]) {
        if (find_isomorphism(rep_images[rep_index], image, n)) {
          known = true;
          break;
        }
      }
      if (known) continue;

      Np2ScanRecord record;
      record.vertices = n;
      record.edges = edges;
      auto structures = dtg_structures(image, n);
      record.structure_count = static_cast<int>(structures.size());
      for (const auto& g : structures) {
        if (verify_dtg(image, g, NPLevel::NP2).ok) ++record.np2_structure_count;
      }
      const auto comp = components(image);
      bool equal_sizes = true;
      for (const auto& c : comp.components) {
        if (c.size() != comp.components[0].size()) equal_sizes = false;
      }
      record.regular_cluster = equal_sizes && is_cluster_graph(image);
      record.consistent =
          (record.np2_structure_count > 0) == record.regular_cluster;
      if (!record.consistent) ++report.exceptions;

      buckets[key].push_back(static_cast<int>(rep_images.size()));
      rep_images.push_back(std::move(image));
      report.records.push_back(std::move(record));
    }
  }
  report.isomorphism_classes = static_cast<int>(report.records.size());
  return report;
}

}  // namespace dtg
