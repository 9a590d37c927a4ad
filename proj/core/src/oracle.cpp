#include "shamrock/oracle.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>

namespace shamrock {

namespace {

__extension__ typedef unsigned __int128 u128;

void check_budget(const Region& region, std::size_t max_cells) {
  if (region.size() > max_cells) {
    throw ResourceLimitError("region has " + std::to_string(region.size()) +
                             " cells, above the budget of " + std::to_string(max_cells));
  }
}

struct Span {
  int i_lo, i_hi, j_lo, j_hi;
  int width() const { return i_hi - i_lo + 1; }
};

Span span_of(const std::vector<TriRef>& cells) {
  Span s{INT_MAX, INT_MIN, INT_MAX, INT_MIN};
  for (const auto& t : cells) {
    s.i_lo = std::min(s.i_lo, t.i);
    s.i_hi = std::max(s.i_hi, t.i);
    s.j_lo = std::min(s.j_lo, t.j);
    s.j_hi = std::max(s.j_hi, t.j);
  }
  return s;
}

// Among the twelve lattice isometries, the image whose rows are narrowest.
std::vector<TriRef> narrowest_image(const Region& region) {
  std::vector<TriRef> cur = region.cells();
  std::vector<TriRef> best = cur;
  int best_width = span_of(cur).width();
  for (int flip = 0; flip < 2; ++flip) {
    for (int turn = 0; turn < 6; ++turn) {
      const int w = span_of(cur).width();
      if (w < best_width) {
        best_width = w;
        best = cur;
      }
      for (auto& t : cur) t = rotate_60(t);
    }
    for (auto& t : cur) t = reflect_vertical(t);
  }
  std::sort(best.begin(), best.end());
  return best;
}

struct Overflow {};

struct U128Ops {
  using Value = u128;
  static void add(Value& acc, const Value& v) {
    acc += v;
    if (acc < v) throw Overflow{};
  }
  static BigInt to_big(const Value& v) {
    BigInt hi(static_cast<unsigned long>(static_cast<std::uint64_t>(v >> 64)));
    BigInt lo(static_cast<unsigned long>(static_cast<std::uint64_t>(v)));
    return (hi << 64) + lo;
  }
};

struct BigOps {
  using Value = BigInt;
  static void add(Value& acc, const Value& v) { acc += v; }
  static BigInt to_big(const Value& v) { return v; }
};

// Rows j in increasing order; within a row the cells Up(i,j), Down(i,j) for
// increasing i. State bit i of `mask`: Down(i,j-1) is paired with Up(i,j)
// above it. Bit 0 of the key is the pending horizontal pair with the next
// cell in sequence (Up(i,j)-Down(i,j) or Down(i,j)-Up(i+1,j)).
template <class Ops>
BigInt transfer_count(const std::vector<TriRef>& cells, std::size_t max_states) {
  using Value = typename Ops::Value;
  const Span s = span_of(cells);
  const int width = s.width();
  const int rows = s.j_hi - s.j_lo + 1;

  std::vector<std::uint8_t> present(static_cast<std::size_t>(width) * rows * 2, 0);
  auto slot = [&](int i, int j, Orientation o) {
    return (static_cast<std::size_t>(j - s.j_lo) * width + (i - s.i_lo)) * 2 +
           (o == Orientation::Up ? 0 : 1);
  };
  for (const auto& t : cells) present[slot(t.i, t.j, t.orient)] = 1;

  std::unordered_map<std::uint64_t, Value> cur, next;
  cur.emplace(0, Value(1));

  auto push = [&](std::uint64_t key, const Value& v) {
    auto [it, inserted] = next.try_emplace(key, v);
    if (!inserted) Ops::add(it->second, v);
  };

  for (int j = s.j_lo; j <= s.j_hi; ++j) {
    for (int i = s.i_lo; i <= s.i_hi; ++i) {
      const std::uint64_t bit = std::uint64_t{2} << (i - s.i_lo);

      // Up(i, j)
      next.clear();
      const bool up = present[slot(i, j, Orientation::Up)];
      for (const auto& [key, v] : cur) {
        const bool below = key & bit;
        const bool left = key & 1;
        if (!up) {
          if (!below && !left) push(key, v);
        } else if (below && left) {
          continue;
        } else if (below) {
          push(key & ~bit, v);
        } else if (left) {
          push(key & ~std::uint64_t{1}, v);
        } else {
          push(key | 1, v);
        }
      }
      cur.swap(next);

      // Down(i, j); its bit is always clear here.
      next.clear();
      const bool down = present[slot(i, j, Orientation::Down)];
      for (const auto& [key, v] : cur) {
        const bool left = key & 1;
        if (!down) {
          if (!left) push(key, v);
        } else if (left) {
          push(key & ~std::uint64_t{1}, v);
        } else {
          push(key | bit, v);
          push(key | 1, v);
        }
      }
      cur.swap(next);
      if (cur.size() > max_states) {
        throw ResourceLimitError("transfer sweep exceeded " + std::to_string(max_states) +
                                 " states");
      }
      if (cur.empty()) return BigInt(0);
    }
    // A horizontal pair cannot wrap to the next row.
    for (auto it = cur.begin(); it != cur.end();) {
      it = (it->first & 1) ? cur.erase(it) : std::next(it);
    }
  }
  auto it = cur.find(0);
  return it == cur.end() ? BigInt(0) : Ops::to_big(it->second);
}

}  // namespace

DualGraph dual_graph(const Region& region) {
  DualGraph g;
  for (const auto& t : region.cells()) {
    (t.orient == Orientation::Up ? g.up_vertices : g.down_vertices).push_back(t);
  }
  for (std::size_t u = 0; u < g.up_vertices.size(); ++u) {
    for (const auto& n : edge_neighbors(g.up_vertices[u])) {
      auto it = std::lower_bound(g.down_vertices.begin(), g.down_vertices.end(), n);
      if (it != g.down_vertices.end() && *it == n) {
        g.edges.emplace_back(u, static_cast<std::size_t>(it - g.down_vertices.begin()));
      }
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

BigInt count_tilings(const Region& region, const OracleOptions& options) {
  check_budget(region, options.max_cells);
  if (region.empty()) return 1;
  if (!region.balanced()) return 0;

  const auto cells = narrowest_image(region);
  if (span_of(cells).width() > 62) {
    throw ResourceLimitError("region is wider than 62 cells in every lattice direction");
  }
  try {
    return transfer_count<U128Ops>(cells, options.max_states);
  } catch (const Overflow&) {
    return transfer_count<BigOps>(cells, options.max_states);
  }
}

BigInt count_tilings_exhaustive(const Region& region, std::size_t max_cells) {
  check_budget(region, max_cells);
  if (!region.balanced()) return 0;
  const auto& cells = region.cells();
  std::vector<char> used(cells.size(), 0);

  // Cover the first uncovered cell in every possible way.
  std::function<std::uint64_t(std::size_t)> rec = [&](std::size_t from) -> std::uint64_t {
    while (from < cells.size() && used[from]) ++from;
    if (from == cells.size()) return 1;
    used[from] = 1;
    std::uint64_t total = 0;
    for (const auto& n : edge_neighbors(cells[from])) {
      auto idx = region.index_of(n);
      if (!idx || used[*idx]) continue;
      used[*idx] = 1;
      total += rec(from + 1);
      used[*idx] = 0;
    }
    used[from] = 0;
    return total;
  };
  return BigInt(static_cast<unsigned long>(rec(0)));
}

std::optional<Tiling> find_one_tiling(const Region& region, const OracleOptions& options) {
  check_budget(region, options.max_cells);
  if (!region.balanced()) return std::nullopt;

  const DualGraph g = dual_graph(region);
  const std::size_t n = g.up_vertices.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& [u, d] : g.edges) adj[u].push_back(d);

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> match_down(g.down_vertices.size(), kNone);
  std::vector<std::size_t> seen(g.down_vertices.size(), kNone);

  std::function<bool(std::size_t, std::size_t)> augment = [&](std::size_t u, std::size_t round) {
    for (auto d : adj[u]) {
      if (seen[d] == round) continue;
      seen[d] = round;
      if (match_down[d] == kNone || augment(match_down[d], round)) {
        match_down[d] = u;
        return true;
      }
    }
    return false;
  };
  for (std::size_t u = 0; u < n; ++u) {
    if (!augment(u, u)) return std::nullopt;
  }

  Tiling tiling;
  for (std::size_t d = 0; d < match_down.size(); ++d) {
    tiling.lozenges.push_back({g.up_vertices[match_down[d]], g.down_vertices[d]});
  }
  std::sort(tiling.lozenges.begin(), tiling.lozenges.end());
  return tiling;
}

}  // namespace shamrock
