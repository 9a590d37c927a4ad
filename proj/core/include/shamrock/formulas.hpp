#pragma once

#include <optional>
#include <stdexcept>
#include <utility>

#include "shamrock/bigint.hpp"
#include "shamrock/exact.hpp"
#include "shamrock/lattice.hpp"

namespace shamrock {

class FormulaError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Converts an exact value that must be an integer; throws FormulaError otherwise.
BigInt require_integer(const SqrtPiScaled& value, const std::string& what);

/// H(a)H(b)H(c)H(a+b+c) / (H(a+b)H(a+c)H(b+c)): tilings of the hexagon a,b,c,a,b,c.
HyperProduct macmahon_product(int a, int b, int c);
BigInt macmahon_P(int a, int b, int c);

/// The S-cored hexagon product exactly as stated for its two parity cases:
/// x, y, z of one parity, or x of the parity opposite to y and z.
/// Throws FormulaError for any other parity pattern.
HyperProduct s_cored_product(int x, int y, int z, int a, int b, int c, int m);

/// s_cored_product after rotating the parameters so that the odd one out,
/// if any, comes first: (y,z,x,b,c,a) when y is odd one out, (z,x,y,c,a,b) when z is.
HyperProduct s_cored_normalized_product(int x, int y, int z, int a, int b, int c, int m);
SqrtPiScaled sc_value(int x, int y, int z, int a, int b, int c, int m);
BigInt sc_formula(int x, int y, int z, int a, int b, int c, int m);

HyperProduct magnet_bar_product(int x, int y, int a, int b, int c, int m);
BigInt magnet_bar_formula(int x, int y, int a, int b, int c, int m);

/// H(a)H(b)H(c)H(a+b+c+m)H(m)^2 / (H(a+m)H(b+m)H(c+m)H(a+b+c)).
HyperProduct shamrock_ratio_product(int a, int b, int c, int m);
BigRational shamrock_ratio(int a, int b, int c, int m);
/// (P(a,b,m), P(a+b,c,m)), whose product is shamrock_ratio.
std::pair<BigInt, BigInt> shamrock_ratio_factored(int a, int b, int c, int m);
/// (P(a,b,c), P(a+b,b+c,c+a)), defined only when m = a+b+c.
std::optional<std::pair<BigInt, BigInt>> shamrock_ratio_symmetric(int a, int b, int c, int m);

/// Closed-form tiling count for any built family. Hexagons with s1..s3
/// different from s4..s6 are unbalanced and give 0; a nonempty shamrock hole
/// on its own has no tiling.
BigInt formula_value(const RegionSpec& spec);

}  // namespace shamrock
