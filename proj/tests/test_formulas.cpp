#include <doctest.h>

#include "shamrock/formulas.hpp"
#include "shamrock/lattice.hpp"
#include "shamrock/oracle.hpp"

using namespace shamrock;

TEST_SUITE("formulas") {

TEST_CASE("S-cored formula reduces to MacMahon without a hole") {
  for (int x = 0; x <= 6; ++x) {
    for (int y = 0; y <= 6; ++y) {
      for (int z = 0; z <= 6; ++z) CHECK(sc_formula(x, y, z, 0, 0, 0, 0) == macmahon_P(x, y, z));
    }
  }
}

TEST_CASE("S-cored formula spot values") {
  CHECK(sc_formula(0, 0, 0, 1, 1, 1, 1) == 8);
  CHECK(sc_formula(2, 2, 2, 0, 0, 0, 2) == count_tilings(build_cored_hexagon(2, 2, 2, 2)));
  CHECK(sc_formula(1, 2, 2, 0, 0, 0, 1) == count_tilings(build_cored_hexagon(1, 2, 2, 1)));
  CHECK(sc_formula(0, 4, 4, 3, 1, 2, 2) == count_tilings(build_s_cored_hexagon(0, 4, 4, 3, 1, 2, 2)));
}

TEST_CASE("three disjoint hexagons when x = y = z = 0") {
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; b <= 3; ++b) {
      for (int c = 0; c <= 3; ++c) {
        for (int m = 0; m <= 3; ++m) {
          CHECK(sc_formula(0, 0, 0, a, b, c, m) ==
                macmahon_P(a, b, m) * macmahon_P(a, c, m) * macmahon_P(b, c, m));
        }
      }
    }
  }
}

TEST_CASE("raw product covers only the two stated parity patterns") {
  CHECK_NOTHROW(s_cored_product(1, 1, 1, 0, 0, 0, 1));
  CHECK_NOTHROW(s_cored_product(1, 2, 2, 0, 0, 0, 1));
  CHECK_THROWS_AS(s_cored_product(1, 2, 1, 0, 0, 0, 1), FormulaError);
  CHECK_THROWS_AS(s_cored_product(1, 1, 2, 0, 0, 0, 1), FormulaError);
  CHECK_THROWS_AS(sc_formula(-1, 0, 0, 0, 0, 0, 0), FormulaError);
}

TEST_CASE("cyclic normalization") {
  for (int x = 0; x <= 4; ++x) {
    for (int y = 0; y <= 4; ++y) {
      for (int z = 0; z <= 4; ++z) {
        CHECK(sc_formula(x, y, z, 1, 2, 0, 1) == sc_formula(y, z, x, 2, 0, 1, 1));
        CHECK(sc_formula(x, y, z, 1, 2, 0, 1) == sc_formula(z, x, y, 0, 1, 2, 1));
      }
    }
  }
}

TEST_CASE("magnet bar") {
  for (int y = 0; y <= 3; ++y) {
    for (int a = 0; a <= 3; ++a) {
      for (int b = 0; b <= 3; ++b) {
        for (int c = 0; c <= 3; ++c) {
          for (int m = 0; m <= 3; ++m) {
            CHECK(magnet_bar_formula(0, y, a, b, c, m) ==
                  macmahon_P(a, c, m) * macmahon_P(b, y + c, m));
          }
        }
      }
    }
  }
  CHECK(magnet_bar_formula(0, 1, 1, 1, 1, 1) == 6);
  CHECK(magnet_bar_formula(0, 0, 0, 0, 0, 0) == 1);
  CHECK(magnet_bar_formula(3, 1, 4, 1, 3, 2) == 21235500);
}

TEST_CASE("shamrock ratio") {
  for (int m = 0; m <= 5; ++m) CHECK(shamrock_ratio(0, 0, 0, m) == 1);
  CHECK(shamrock_ratio(1, 1, 0, 1) == 2);
  CHECK(shamrock_ratio_factored(1, 1, 0, 1) == std::pair<BigInt, BigInt>(2, 1));
  CHECK(shamrock_ratio(1, 1, 1, 3) == 40);
  const auto sym = shamrock_ratio_symmetric(1, 1, 1, 3);
  REQUIRE(sym);
  CHECK(sym->first == 2);
  CHECK(sym->second == 20);
  CHECK_FALSE(shamrock_ratio_symmetric(1, 1, 1, 2));
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; b <= 4; ++b) {
      for (int c = 0; c <= 4; ++c) {
        const auto s = shamrock_ratio_symmetric(a, b, c, a + b + c);
        CHECK(s->first * s->second == shamrock_ratio(a, b, c, a + b + c));
      }
    }
  }
}

TEST_CASE("formula_value by family") {
  CHECK(formula_value({Family::Hexagon, {2, 2, 2, 2, 2, 2}}) == 20);
  CHECK(formula_value({Family::Hexagon, {2, 1, 2, 1, 2, 1}}) == 0);
  CHECK_THROWS_AS(formula_value({Family::Hexagon, {1, 2, 3, 1, 2, 4}}), FormulaError);
  CHECK(formula_value({Family::ShamrockHole, {0, 0, 0, 0}}) == 1);
  CHECK(formula_value({Family::ShamrockHole, {1, 0, 0, 2}}) == 0);
  CHECK(formula_value({Family::CoredHexagon, {2, 2, 2, 2}}) == sc_formula(2, 2, 2, 0, 0, 0, 2));
  CHECK(formula_value({Family::MagnetBar, {0, 1, 1, 1, 1, 1}}) == 6);
  CHECK_THROWS_AS(formula_value({Family::MagnetBar, {0, 1}}), FormulaError);
}

TEST_CASE("integrality over a parameter sweep") {
  for (int x = 0; x <= 5; ++x) {
    for (int y = 0; y <= 5; ++y) {
      for (int z = 0; z <= 5; ++z) {
        for (int s = 0; s < 16; ++s) {
          const int a = s & 1, b = (s >> 1) & 1, c = (s >> 2) & 1, m = 1 + ((s >> 3) & 1);
          CHECK(sc_value(x, y, z, a, b, c, m).is_integer());
          CHECK(magnet_bar_product(x, y, a, b, c, m).evaluate().is_integer());
        }
      }
    }
  }
}

}  // TEST_SUITE
