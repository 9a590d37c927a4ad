#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "shamrock/lattice.hpp"

namespace shamrock::testing {

inline TriRef pick(std::mt19937& rng, const std::vector<TriRef>& v) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

// Union of lozenges grown from the origin; always has at least one tiling.
inline Region lozenge_blob(std::mt19937& rng, std::size_t max_cells) {
  std::vector<TriRef> cells{{0, 0, Orientation::Up}, {0, 0, Orientation::Down}};
  Region r(cells);
  const std::size_t target =
      2 * std::uniform_int_distribution<std::size_t>(1, max_cells / 2)(rng);
  for (int attempts = 0; r.size() < target && attempts < 400; ++attempts) {
    const TriRef base = pick(rng, r.cells());
    const TriRef a = edge_neighbors(base)[std::uniform_int_distribution<int>(0, 2)(rng)];
    if (r.contains(a)) continue;
    const TriRef b = edge_neighbors(a)[std::uniform_int_distribution<int>(0, 2)(rng)];
    if (r.contains(b)) continue;
    cells.push_back(a);
    cells.push_back(b);
    r = Region(cells);
  }
  return r;
}

// A small hexagon with equally many Up and Down cells removed at random.
inline Region punctured_hexagon(std::mt19937& rng, std::size_t max_cells) {
  std::uniform_int_distribution<int> side(1, 3);
  Region h;
  do {
    const int a = side(rng), b = side(rng), c = side(rng);
    h = build_hexagon({a, b, c, a, b, c});
  } while (h.size() > max_cells);
  std::vector<TriRef> ups, downs;
  for (const auto& t : h.cells()) (t.orient == Orientation::Up ? ups : downs).push_back(t);
  std::shuffle(ups.begin(), ups.end(), rng);
  std::shuffle(downs.begin(), downs.end(), rng);
  const std::size_t k = std::uniform_int_distribution<std::size_t>(0, ups.size() / 2)(rng);
  std::vector<TriRef> cells(ups.begin() + static_cast<long>(k), ups.end());
  cells.insert(cells.end(), downs.begin() + static_cast<long>(k), downs.end());
  return Region(cells);
}

// Arbitrary connected set of cells; frequently unbalanced or untileable.
inline Region cell_blob(std::mt19937& rng, std::size_t max_cells) {
  const std::size_t target = std::uniform_int_distribution<std::size_t>(1, max_cells)(rng);
  std::vector<TriRef> cells{{0, 0, Orientation::Up}};
  Region r(cells);
  while (r.size() < target) {
    const TriRef n = edge_neighbors(pick(rng, r.cells()))[std::uniform_int_distribution<int>(0, 2)(rng)];
    if (r.contains(n)) continue;
    cells.push_back(n);
    r = Region(cells);
  }
  return r;
}

inline Region random_region(std::mt19937& rng, std::size_t max_cells) {
  switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
    case 0: return lozenge_blob(rng, max_cells);
    case 1: return punctured_hexagon(rng, max_cells);
    default: return cell_blob(rng, max_cells);
  }
}

}  // namespace shamrock::testing
