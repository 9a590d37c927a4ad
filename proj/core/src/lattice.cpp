#include "shamrock/lattice.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace shamrock {

namespace {

constexpr int kUnbounded = std::numeric_limits<int>::max() / 4;

// Intersection of the six lattice half-planes
//   x_lo <= X <= x_hi,  y_lo <= Y <= y_hi,  s_lo <= X + Y <= s_hi
// in continuous oblique coordinates. A unit triangle is inside iff all of its
// vertices are, because every bounding line is a lattice line.
struct Box {
  int x_lo = -kUnbounded, x_hi = kUnbounded;
  int y_lo = -kUnbounded, y_hi = kUnbounded;
  int s_lo = -kUnbounded, s_hi = kUnbounded;

  bool holds(TriRef t) const {
    const int s0 = t.i + t.j + (t.orient == Orientation::Up ? 0 : 1);
    return t.i >= x_lo && t.i + 1 <= x_hi && t.j >= y_lo && t.j + 1 <= y_hi && s0 >= s_lo &&
           s0 + 1 <= s_hi;
  }
};

// Cells of `box` with i in [i_lo, i_hi) and j in [j_lo, j_hi).
void collect(const Box& box, int i_lo, int i_hi, int j_lo, int j_hi, std::vector<TriRef>& out) {
  for (int i = i_lo; i < i_hi; ++i) {
    for (int j = j_lo; j < j_hi; ++j) {
      for (auto o : {Orientation::Up, Orientation::Down}) {
        const TriRef t{i, j, o};
        if (box.holds(t)) out.push_back(t);
      }
    }
  }
}

std::vector<TriRef> hexagon_cells(const Box& box) {
  std::vector<TriRef> out;
  collect(box, box.x_lo, box.x_hi, box.y_lo, box.y_hi, out);
  return out;
}

// Up triangle of side m with lower-left corner (p, q).
void up_triangle(int p, int q, int m, std::vector<TriRef>& out) {
  if (m <= 0) return;
  Box box;
  box.x_lo = p;
  box.y_lo = q;
  box.s_hi = p + q + m;
  collect(box, p, p + m, q, q + m, out);
}

// Down triangle of side a whose bottom corner is (v1, v2).
void down_triangle(int v1, int v2, int a, std::vector<TriRef>& out) {
  if (a <= 0) return;
  Box box;
  box.x_hi = v1;
  box.y_hi = v2 + a;
  box.s_lo = v1 + v2;
  collect(box, v1 - a, v1, v2, v2 + a, out);
}

void shamrock_cells(int a, int b, int c, int m, int p, int q, std::vector<TriRef>& out) {
  up_triangle(p, q, m, out);
  down_triangle(p, q + m, a, out);          // top lobe, on the apex
  down_triangle(p, q - b, b, out);          // left lobe, on the lower-left corner
  down_triangle(p + m + c, q - c, c, out);  // right lobe, on the lower-right corner
}

void require_nonnegative(std::initializer_list<int> values, const char* what) {
  for (int v : values) {
    if (v < 0) throw GeometryError(std::string(what) + ": parameters must be nonnegative");
  }
}

// outer \ hole; throws unless hole is a subset of outer.
std::vector<TriRef> subtract_hole(std::vector<TriRef> outer, std::vector<TriRef> hole,
                                  const char* what) {
  std::sort(outer.begin(), outer.end());
  std::sort(hole.begin(), hole.end());
  if (std::adjacent_find(hole.begin(), hole.end()) != hole.end()) {
    throw GeometryError(std::string(what) + ": hole pieces overlap");
  }
  if (!std::includes(outer.begin(), outer.end(), hole.begin(), hole.end())) {
    throw GeometryError(std::string(what) + ": hole does not fit inside the outer hexagon");
  }
  std::vector<TriRef> out;
  out.reserve(outer.size() - hole.size());
  std::set_difference(outer.begin(), outer.end(), hole.begin(), hole.end(),
                      std::back_inserter(out));
  return out;
}

Region finish(std::vector<TriRef> cells, RegionSpec spec) {
  return canonical(Region(std::move(cells), std::move(spec)));
}

bool odd(int v) { return (v & 1) != 0; }

template <class F>
Region map_cells(const Region& region, F f) {
  std::vector<TriRef> out;
  out.reserve(region.size());
  for (const auto& t : region.cells()) out.push_back(f(t));
  return Region(std::move(out), region.spec());
}

}  // namespace

std::array<TriRef, 3> edge_neighbors(TriRef t) {
  if (t.orient == Orientation::Up) {
    return {TriRef{t.i - 1, t.j, Orientation::Down}, TriRef{t.i, t.j - 1, Orientation::Down},
            TriRef{t.i, t.j, Orientation::Down}};
  }
  return {TriRef{t.i, t.j, Orientation::Up}, TriRef{t.i + 1, t.j, Orientation::Up},
          TriRef{t.i, t.j + 1, Orientation::Up}};
}

// (X, Y) -> (-Y, X + Y)
TriRef rotate_60(TriRef t) {
  if (t.orient == Orientation::Up) return {-t.j - 1, t.i + t.j, Orientation::Down};
  return {-t.j - 1, t.i + t.j + 1, Orientation::Up};
}

// (X, Y) -> (-X - Y, Y)
TriRef reflect_vertical(TriRef t) {
  if (t.orient == Orientation::Up) return {-t.i - t.j - 1, t.j, Orientation::Up};
  return {-t.i - t.j - 2, t.j, Orientation::Down};
}

bool adjacent(TriRef a, TriRef b) {
  const auto n = edge_neighbors(a);
  return std::find(n.begin(), n.end(), b) != n.end();
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Hexagon: return "hexagon";
    case Family::ShamrockHole: return "shamrock_hole";
    case Family::CoredHexagon: return "cored_hexagon";
    case Family::SCoredHexagon: return "s_cored_hexagon";
    case Family::MagnetBar: return "magnet_bar";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  if (name == "hexagon") return Family::Hexagon;
  if (name == "shamrock_hole" || name == "shamrock") return Family::ShamrockHole;
  if (name == "cored_hexagon" || name == "cored") return Family::CoredHexagon;
  if (name == "s_cored_hexagon" || name == "s_cored" || name == "sc") return Family::SCoredHexagon;
  if (name == "magnet_bar" || name == "magnet") return Family::MagnetBar;
  return std::nullopt;
}

std::size_t param_count(Family f) {
  switch (f) {
    case Family::Hexagon: return 6;
    case Family::ShamrockHole: return 4;
    case Family::CoredHexagon: return 4;
    case Family::SCoredHexagon: return 7;
    case Family::MagnetBar: return 6;
  }
  return 0;
}

std::string describe(const RegionSpec& spec) {
  std::ostringstream os;
  os << family_name(spec.family) << '(';
  for (std::size_t k = 0; k < spec.params.size(); ++k) {
    if (k) os << ',';
    os << spec.params[k];
  }
  os << ')';
  return os.str();
}

Region::Region(std::vector<TriRef> cells, std::optional<RegionSpec> spec)
    : cells_(std::move(cells)), spec_(std::move(spec)) {
  std::sort(cells_.begin(), cells_.end());
  if (std::adjacent_find(cells_.begin(), cells_.end()) != cells_.end()) {
    throw GeometryError("region cells must be duplicate-free");
  }
  ups_ = static_cast<std::size_t>(std::count_if(
      cells_.begin(), cells_.end(), [](const TriRef& t) { return t.orient == Orientation::Up; }));
}

bool Region::contains(TriRef t) const {
  return std::binary_search(cells_.begin(), cells_.end(), t);
}

std::optional<std::size_t> Region::index_of(TriRef t) const {
  auto it = std::lower_bound(cells_.begin(), cells_.end(), t);
  if (it == cells_.end() || *it != t) return std::nullopt;
  return static_cast<std::size_t>(it - cells_.begin());
}

bool covers_exactly(const Region& region, const Tiling& tiling) {
  if (2 * tiling.lozenges.size() != region.size()) return false;
  std::vector<char> seen(region.size(), 0);
  for (const auto& l : tiling.lozenges) {
    if (l.up.orient != Orientation::Up || l.down.orient != Orientation::Down) return false;
    if (!adjacent(l.up, l.down)) return false;
    for (const auto& t : {l.up, l.down}) {
      auto idx = region.index_of(t);
      if (!idx || seen[*idx]) return false;
      seen[*idx] = 1;
    }
  }
  return true;
}

RegionStats region_stats(const Region& region) {
  RegionStats s;
  s.up_count = region.up_count();
  s.down_count = region.down_count();
  s.cell_count = region.size();

  std::vector<char> seen(region.size(), 0);
  std::vector<std::size_t> stack;
  for (std::size_t start = 0; start < region.size(); ++start) {
    if (seen[start]) continue;
    ++s.components;
    seen[start] = 1;
    stack.push_back(start);
    while (!stack.empty()) {
      const auto cur = stack.back();
      stack.pop_back();
      for (const auto& n : edge_neighbors(region.cells()[cur])) {
        if (auto idx = region.index_of(n); idx && !seen[*idx]) {
          seen[*idx] = 1;
          stack.push_back(*idx);
        }
      }
    }
  }
  return s;
}

Region build_hexagon(const std::array<int, 6>& s) {
  for (int v : s) {
    if (v < 0) throw GeometryError("hexagon: side lengths must be nonnegative");
  }
  if (s[0] + s[1] != s[3] + s[4] || s[1] + s[2] != s[4] + s[5] || s[2] + s[3] != s[5] + s[0]) {
    throw GeometryError("hexagon: side lengths violate the closure conditions");
  }
  // NW side on X = 0, bottom on Y = 0, SW side on X + Y = s5.
  Box box;
  box.x_lo = 0;
  box.x_hi = s[3] + s[4];
  box.y_lo = 0;
  box.y_hi = s[4] + s[5];
  box.s_lo = s[4];
  box.s_hi = s[2] + s[3] + s[4];
  return finish(hexagon_cells(box), {Family::Hexagon, {s.begin(), s.end()}});
}

Region build_shamrock_hole(int a, int b, int c, int m, TriRef anchor) {
  require_nonnegative({a, b, c, m}, "shamrock hole");
  std::vector<TriRef> cells;
  shamrock_cells(a, b, c, m, anchor.i, anchor.j, cells);
  return Region(std::move(cells), RegionSpec{Family::ShamrockHole, {a, b, c, m}});
}

Region build_cored_hexagon(int x, int y, int z, int m) {
  Region r = build_s_cored_hexagon(x, y, z, 0, 0, 0, m);
  r.set_spec(RegionSpec{Family::CoredHexagon, {x, y, z, m}});
  return r;
}

Region build_s_cored_hexagon(int x, int y, int z, int a, int b, int c, int m) {
  require_nonnegative({x, y, z, a, b, c, m}, "S-cored hexagon");

  // The cored hexagon x, y+m, z, x+m, y, z+m occupies
  //   0 <= X <= x+y+m,  0 <= Y <= y+z+m,  y <= X+Y <= x+y+z+m;
  // each side is then pushed out by its lobe-dependent amount.
  Box box;
  box.x_lo = -(a + b);
  box.x_hi = x + y + m + c;
  box.y_lo = -(b + c);
  box.y_hi = y + z + m + a;
  box.s_lo = y - b;
  box.s_hi = x + y + z + m + a + c;

  // Twice the coordinates of the core's lower-left corner in the centred
  // position; when one of x, y, z has the odd parity, move half a unit
  // parallel to that side, toward the side of the cyclically next length.
  int p2 = x + y;
  int q2 = y + z;
  if (odd(x) != odd(y) && odd(y) == odd(z)) {
    p2 -= 1;
  } else if (odd(y) != odd(x) && odd(x) == odd(z)) {
    p2 += 1;
    q2 -= 1;
  } else if (odd(z) != odd(x) && odd(x) == odd(y)) {
    q2 += 1;
  }

  std::vector<TriRef> hole;
  shamrock_cells(a, b, c, m, p2 / 2, q2 / 2, hole);
  auto cells = subtract_hole(hexagon_cells(box), std::move(hole), "S-cored hexagon");
  return finish(std::move(cells), {Family::SCoredHexagon, {x, y, z, a, b, c, m}});
}

Region build_magnet_bar(int x, int y, int a, int b, int c, int m) {
  require_nonnegative({x, y, a, b, c, m}, "magnet bar");
  // Sides x+c, y+m, a+b+c, x+m, y+c, a+b+m clockwise from the top.
  Box box;
  box.x_lo = 0;
  box.x_hi = x + m + y + c;
  box.y_lo = 0;
  box.y_hi = y + c + a + b + m;
  box.s_lo = y + c;
  box.s_hi = x + y + a + b + 2 * c + m;

  // The m-triangle rests on the NW side with b below it and a above it; the
  // c-triangle hangs from its lower-right corner.
  std::vector<TriRef> hole;
  up_triangle(0, y + c + b, m, hole);
  down_triangle(m + c, y + b, c, hole);
  auto cells = subtract_hole(hexagon_cells(box), std::move(hole), "magnet bar");
  return finish(std::move(cells), {Family::MagnetBar, {x, y, a, b, c, m}});
}

Region build(const RegionSpec& spec) {
  const auto& p = spec.params;
  if (p.size() != param_count(spec.family)) {
    throw GeometryError(std::string(family_name(spec.family)) + ": expected " +
                        std::to_string(param_count(spec.family)) + " parameters, got " +
                        std::to_string(p.size()));
  }
  switch (spec.family) {
    case Family::Hexagon: return build_hexagon({p[0], p[1], p[2], p[3], p[4], p[5]});
    case Family::ShamrockHole: return build_shamrock_hole(p[0], p[1], p[2], p[3]);
    case Family::CoredHexagon: return build_cored_hexagon(p[0], p[1], p[2], p[3]);
    case Family::SCoredHexagon:
      return build_s_cored_hexagon(p[0], p[1], p[2], p[3], p[4], p[5], p[6]);
    case Family::MagnetBar: return build_magnet_bar(p[0], p[1], p[2], p[3], p[4], p[5]);
  }
  throw GeometryError("unknown family");
}

Region translate(const Region& region, int di, int dj) {
  return map_cells(region, [=](TriRef t) { return TriRef{t.i + di, t.j + dj, t.orient}; });
}

Region canonical(const Region& region) {
  if (region.empty()) return region;
  const TriRef first = region.cells().front();
  return translate(region, -first.i, -first.j);
}

Region reflect_vertical(const Region& region) { return canonical(map_cells(region, [](TriRef t) { return reflect_vertical(t); })); }

Region rotate_120(const Region& region) {
  return canonical(map_cells(region, [](TriRef t) { return rotate_60(rotate_60(t)); }));
}

bool congruent(const Region& a, const Region& b) {
  if (a.size() != b.size() || a.up_count() + a.down_count() != b.size()) return false;
  const Region target = canonical(b);
  Region cur = a;
  for (int flip = 0; flip < 2; ++flip) {
    for (int turn = 0; turn < 6; ++turn) {
      if (canonical(cur) == target) return true;
      cur = map_cells(cur, [](TriRef t) { return rotate_60(t); });
    }
    cur = map_cells(cur, [](TriRef t) { return reflect_vertical(t); });
  }
  return false;
}

}  // namespace shamrock
