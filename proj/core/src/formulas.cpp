#include "shamrock/formulas.hpp"

#include <initializer_list>
#include <string>

namespace shamrock {

namespace {

void require_nonnegative(std::initializer_list<int> values, const char* what) {
  for (int v : values) {
    if (v < 0) throw FormulaError(std::string(what) + ": parameters must be nonnegative");
  }
}

HyperProduct ratio_of(std::initializer_list<HalfInt> num, std::initializer_list<HalfInt> den) {
  HyperProduct p;
  for (auto n : num) p.mul(n);
  for (auto n : den) p.div(n);
  return p;
}

bool odd(int v) { return (v & 1) != 0; }

// Halves and the ceiling/floor of halves, on integers.
HalfInt hf(int n) { return halve(n); }
int ce(int n) { return halve(n).ceil(); }
int fl(int n) { return halve(n).floor(); }

HyperProduct same_parity(int x, int y, int z, int a, int b, int c, int m) {
  const int S = m + a + b + c;
  const HalfInt h = hf(S);
  return ratio_of(
      {m, m, m, a, b, c,
       hf(x + y) + (m + a + b), hf(x + z) + (m + a + c), hf(y + z) + (m + b + c),
       hf(x + y) + c, hf(x + z) + b, hf(y + z) + a,
       x + S, y + S, z + S, x + y + z + S,
       ce(x + y + z) + S, fl(x + y + z) + S,
       ce(x), fl(x), ce(y), fl(y), ce(z), fl(z),
       h, h,
       hf(x + y) + h, hf(x + y) + h, hf(x + z) + h, hf(x + z) + h, hf(y + z) + h, hf(y + z) + h},
      {m + a, m + b, m + c,
       hf(x + y) + (m + c), hf(x + z) + (m + b), hf(y + z) + (m + a),
       hf(x + y) + (a + b), hf(x + z) + (a + c), hf(y + z) + (b + c),
       x + y + S, x + z + S, y + z + S,
       hf(x + y) + S, hf(x + z) + S, hf(y + z) + S,
       ce(x) + h, fl(x) + h, ce(y) + h, fl(y) + h, ce(z) + h, fl(z) + h,
       ce(x + y + z) + h, fl(x + y + z) + h,
       hf(x + y), hf(x + z), hf(y + z)});
}

HyperProduct x_odd_one_out(int x, int y, int z, int a, int b, int c, int m) {
  const int S = m + a + b + c;
  const HalfInt h = hf(S);
  return ratio_of(
      {m, m, m, a, b, c,
       fl(x + y) + (m + a + b), ce(x + z) + (m + a + c), hf(y + z) + (m + b + c),
       ce(x + y) + c, fl(x + z) + b, hf(y + z) + a,
       x + S, y + S, z + S, x + y + z + S,
       ce(x + y + z) + S, fl(x + y + z) + S,
       ce(x), fl(x), ce(y), fl(y), ce(z), fl(z),
       h, h,
       ce(x + y) + h, fl(x + y) + h, ce(x + z) + h, fl(x + z) + h, hf(y + z) + h, hf(y + z) + h},
      {m + a, m + b, m + c,
       ce(x + y) + (m + c), fl(x + z) + (m + b), hf(y + z) + (m + a),
       fl(x + y) + (a + b), ce(x + z) + (a + c), hf(y + z) + (b + c),
       x + y + S, x + z + S, y + z + S,
       fl(x + y) + S, ce(x + z) + S, hf(y + z) + S,
       ce(x) + h, fl(x) + h, ce(y) + h, fl(y) + h, ce(z) + h, fl(z) + h,
       ce(x + y + z) + h, fl(x + y + z) + h,
       ce(x + y), fl(x + z), hf(y + z)});
}

}  // namespace

BigInt require_integer(const SqrtPiScaled& value, const std::string& what) {
  if (!value.is_integer()) {
    throw FormulaError(what + " evaluated to the non-integer " + value.to_string());
  }
  return value.q.get_num();
}

HyperProduct macmahon_product(int a, int b, int c) {
  require_nonnegative({a, b, c}, "P");
  return ratio_of({a, b, c, a + b + c}, {a + b, a + c, b + c});
}

BigInt macmahon_P(int a, int b, int c) {
  return require_integer(macmahon_product(a, b, c).evaluate(), "P");
}

HyperProduct s_cored_product(int x, int y, int z, int a, int b, int c, int m) {
  require_nonnegative({x, y, z, a, b, c, m}, "S-cored product");
  if (odd(x) == odd(y) && odd(y) == odd(z)) return same_parity(x, y, z, a, b, c, m);
  if (odd(y) == odd(z)) return x_odd_one_out(x, y, z, a, b, c, m);
  throw FormulaError("S-cored product: x must share the parity of y and z or be the odd one out");
}

HyperProduct s_cored_normalized_product(int x, int y, int z, int a, int b, int c, int m) {
  if (odd(x) == odd(y) || odd(y) == odd(z)) {
    if (odd(y) == odd(z)) return s_cored_product(x, y, z, a, b, c, m);
    return s_cored_product(z, x, y, c, a, b, m);
  }
  return s_cored_product(y, z, x, b, c, a, m);
}

SqrtPiScaled sc_value(int x, int y, int z, int a, int b, int c, int m) {
  return s_cored_normalized_product(x, y, z, a, b, c, m).evaluate();
}

BigInt sc_formula(int x, int y, int z, int a, int b, int c, int m) {
  return require_integer(sc_value(x, y, z, a, b, c, m), "S-cored hexagon formula");
}

HyperProduct magnet_bar_product(int x, int y, int a, int b, int c, int m) {
  require_nonnegative({x, y, a, b, c, m}, "magnet bar");
  return ratio_of({m, m, a, b, c, m + a + b + c, x + m + a + c, y + m + b + c, x + y + c,
                   x + y + m + a + b + c, x, y},
                  {m + a, m + b, m + c, x + y + m + c, x + a + c, y + b + c, x + m + a + b + c,
                   y + m + a + b + c, x + y});
}

BigInt magnet_bar_formula(int x, int y, int a, int b, int c, int m) {
  return require_integer(magnet_bar_product(x, y, a, b, c, m).evaluate(), "magnet bar formula");
}

HyperProduct shamrock_ratio_product(int a, int b, int c, int m) {
  require_nonnegative({a, b, c, m}, "shamrock ratio");
  return ratio_of({a, b, c, a + b + c + m, m, m}, {a + m, b + m, c + m, a + b + c});
}

BigRational shamrock_ratio(int a, int b, int c, int m) {
  const auto v = shamrock_ratio_product(a, b, c, m).evaluate();
  if (v.k != 0) throw FormulaError("shamrock ratio carries a power of sqrt(pi)");
  return v.q;
}

std::pair<BigInt, BigInt> shamrock_ratio_factored(int a, int b, int c, int m) {
  return {macmahon_P(a, b, m), macmahon_P(a + b, c, m)};
}

std::optional<std::pair<BigInt, BigInt>> shamrock_ratio_symmetric(int a, int b, int c, int m) {
  if (m != a + b + c) return std::nullopt;
  return std::pair{macmahon_P(a, b, c), macmahon_P(a + b, b + c, c + a)};
}

BigInt formula_value(const RegionSpec& spec) {
  const auto& p = spec.params;
  if (p.size() != param_count(spec.family)) {
    throw FormulaError(std::string(family_name(spec.family)) + ": expected " +
                       std::to_string(param_count(spec.family)) + " parameters");
  }
  switch (spec.family) {
    case Family::Hexagon:
      require_nonnegative({p[0], p[1], p[2], p[3], p[4], p[5]}, "hexagon");
      if (p[0] + p[1] != p[3] + p[4] || p[1] + p[2] != p[4] + p[5]) {
        throw FormulaError("hexagon: side lengths violate the closure conditions");
      }
      if (p[0] != p[3] || p[1] != p[4] || p[2] != p[5]) return 0;
      return macmahon_P(p[0], p[1], p[2]);
    case Family::ShamrockHole:
      require_nonnegative({p[0], p[1], p[2], p[3]}, "shamrock hole");
      return (p[0] | p[1] | p[2] | p[3]) == 0 ? 1 : 0;
    case Family::CoredHexagon:
      return sc_formula(p[0], p[1], p[2], 0, 0, 0, p[3]);
    case Family::SCoredHexagon:
      return sc_formula(p[0], p[1], p[2], p[3], p[4], p[5], p[6]);
    case Family::MagnetBar:
      return magnet_bar_formula(p[0], p[1], p[2], p[3], p[4], p[5]);
  }
  throw FormulaError("unknown family");
}

}  // namespace shamrock
