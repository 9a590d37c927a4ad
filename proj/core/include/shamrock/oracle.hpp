#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "shamrock/bigint.hpp"
#include "shamrock/lattice.hpp"

namespace shamrock {

class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleOptions {
  std::size_t max_cells = 2000;
  /// Cap on live transfer states in a single row sweep.
  std::size_t max_states = std::size_t{1} << 22;
};

struct DualGraph {
  std::vector<TriRef> up_vertices;
  std::vector<TriRef> down_vertices;
  /// (index into up_vertices, index into down_vertices), sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

DualGraph dual_graph(const Region& region);

/// Number of lozenge tilings (perfect matchings of the dual graph), exact.
/// Row-by-row transfer sweep over the narrowest lattice orientation.
/// Throws ResourceLimitError past the cell or state budget.
BigInt count_tilings(const Region& region, const OracleOptions& options = {});

/// Independent exhaustive recursion; intended for small regions.
BigInt count_tilings_exhaustive(const Region& region, std::size_t max_cells = 40);

/// Some tiling, or nullopt when none exists.
std::optional<Tiling> find_one_tiling(const Region& region, const OracleOptions& options = {});

}  // namespace shamrock
