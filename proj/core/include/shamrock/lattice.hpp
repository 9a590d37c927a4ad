#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace shamrock {

// Oblique coordinates on the triangular lattice: a lattice point (i, j) sits
// at i*(1, 0) + j*(1/2, sqrt(3)/2). The three families of lattice lines are
// i = const, j = const and i + j = const.
enum class Orientation : std::uint8_t { Up, Down };

/// A unit triangle. Up (i,j) has vertices (i,j), (i+1,j), (i,j+1);
/// Down (i,j) has vertices (i+1,j), (i,j+1), (i+1,j+1).
struct TriRef {
  int i = 0;
  int j = 0;
  Orientation orient = Orientation::Up;

  friend constexpr auto operator<=>(const TriRef&, const TriRef&) = default;
};

/// The three triangles of opposite orientation that share an edge with `t`.
std::array<TriRef, 3> edge_neighbors(TriRef t);

bool adjacent(TriRef a, TriRef b);

/// Image of a cell under the counterclockwise 60 degree rotation about the origin.
TriRef rotate_60(TriRef t);
/// Image of a cell under the mirror X -> -X - Y (a vertical line through the origin).
TriRef reflect_vertical(TriRef t);

class GeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Family { Hexagon, ShamrockHole, CoredHexagon, SCoredHexagon, MagnetBar };

/// Parameter order per family:
///   Hexagon       s1..s6 clockwise from the top side
///   ShamrockHole  a, b, c, m
///   CoredHexagon  x, y, z, m
///   SCoredHexagon x, y, z, a, b, c, m
///   MagnetBar     x, y, a, b, c, m
struct RegionSpec {
  Family family = Family::Hexagon;
  std::vector<int> params;

  friend bool operator==(const RegionSpec&, const RegionSpec&) = default;
};

std::string_view family_name(Family f);
/// Accepts the canonical names plus the short CLI aliases (sc, cored, magnet, shamrock).
std::optional<Family> parse_family(std::string_view name);
std::size_t param_count(Family f);
std::string describe(const RegionSpec& spec);

/// A finite, duplicate-free set of unit triangles, kept sorted.
class Region {
 public:
  Region() = default;
  /// Throws GeometryError if `cells` contains duplicates.
  explicit Region(std::vector<TriRef> cells, std::optional<RegionSpec> spec = std::nullopt);

  const std::vector<TriRef>& cells() const noexcept { return cells_; }
  const std::optional<RegionSpec>& spec() const noexcept { return spec_; }
  void set_spec(std::optional<RegionSpec> spec) { spec_ = std::move(spec); }

  std::size_t size() const noexcept { return cells_.size(); }
  bool empty() const noexcept { return cells_.empty(); }
  bool contains(TriRef t) const;
  /// Position of `t` in cells(), if present.
  std::optional<std::size_t> index_of(TriRef t) const;

  std::size_t up_count() const noexcept { return ups_; }
  std::size_t down_count() const noexcept { return cells_.size() - ups_; }
  bool balanced() const noexcept { return 2 * ups_ == cells_.size(); }

  // Provenance is metadata; equality is on cells only.
  friend bool operator==(const Region& a, const Region& b) { return a.cells_ == b.cells_; }

 private:
  std::vector<TriRef> cells_;
  std::optional<RegionSpec> spec_;
  std::size_t ups_ = 0;
};

struct Lozenge {
  TriRef up;
  TriRef down;
  friend constexpr auto operator<=>(const Lozenge&, const Lozenge&) = default;
};

struct Tiling {
  std::vector<Lozenge> lozenges;
};

/// True iff every lozenge joins adjacent cells of `region` and every cell is covered once.
bool covers_exactly(const Region& region, const Tiling& tiling);

struct RegionStats {
  std::size_t up_count = 0;
  std::size_t down_count = 0;
  std::size_t cell_count = 0;
  std::size_t components = 0;

  friend bool operator==(const RegionStats&, const RegionStats&) = default;
};

RegionStats region_stats(const Region& region);

// Builders. Every builder except build_shamrock_hole returns a canonically
// anchored region (smallest cell translated to (0,0)) tagged with its spec.

Region build_hexagon(const std::array<int, 6>& sides);

/// Up core of side m whose lower-left corner is the lattice point
/// (anchor.i, anchor.j), with Down lobes of sides a, b, c at its top, left
/// and right corners. Not re-anchored.
Region build_shamrock_hole(int a, int b, int c, int m, TriRef anchor = {});

Region build_cored_hexagon(int x, int y, int z, int m);
Region build_s_cored_hexagon(int x, int y, int z, int a, int b, int c, int m);
Region build_magnet_bar(int x, int y, int a, int b, int c, int m);

/// Dispatches on spec.family; throws GeometryError on a wrong parameter count.
Region build(const RegionSpec& spec);

Region translate(const Region& region, int di, int dj);
/// Translates so the smallest cell sits at (0, 0); the empty region is unchanged.
Region canonical(const Region& region);
/// Mirror image across a vertical line, canonically anchored.
Region reflect_vertical(const Region& region);
/// Counterclockwise rotation by 120 degrees, canonically anchored.
Region rotate_120(const Region& region);
/// Equal up to translation, rotation by multiples of 60 degrees and reflection.
bool congruent(const Region& a, const Region& b);

}  // namespace shamrock
