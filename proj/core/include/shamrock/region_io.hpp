#pragma once

#include <stdexcept>
#include <string>

#include "shamrock/lattice.hpp"

namespace shamrock {

class RegionFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"family": ..., "params": [...], "cells": [[i, j, "U"|"D"], ...]}, cells sorted.
/// Regions without provenance serialize family and params as null.
std::string to_json(const Region& region, int indent = -1);

/// Inverse of to_json. Throws RegionFormatError on malformed input.
Region region_from_json(const std::string& text);

}  // namespace shamrock
