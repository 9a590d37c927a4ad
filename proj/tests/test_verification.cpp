#include <doctest.h>

#include <json.hpp>

#include "shamrock/formulas.hpp"
#include "shamrock/verification.hpp"

using namespace shamrock;

TEST_SUITE("verification") {

TEST_CASE("report lines follow the schema") {
  const auto r = check_kuo_magnet(1, 1, 0, 1, 0, 0);
  const auto j = nlohmann::json::parse(to_json_line(r));
  CHECK(j.at("check") == "kuo_magnet");
  CHECK(j.at("params") == std::vector<int>{1, 1, 0, 1, 0, 0});
  CHECK(j.at("expected").is_string());
  CHECK(j.at("actual").is_string());
  CHECK(j.at("status") == "PASS");
  CHECK_FALSE(j.contains("reason"));
}

TEST_CASE("formula against oracle") {
  for (const auto& spec : hexagon_sweep(3)) {
    CHECK(verify_formula_vs_oracle(spec).status == Status::Pass);
  }
  const auto r = verify_formula_vs_oracle({Family::MagnetBar, {3, 1, 4, 1, 3, 2}});
  CHECK(r.status == Status::Pass);
  CHECK(r.expected == "21235500");
  CHECK(r.actual == "21235500");
}

TEST_CASE("budget overruns are skipped") {
  OracleOptions tight;
  tight.max_cells = 20;
  const auto r = verify_formula_vs_oracle({Family::Hexagon, {3, 3, 3, 3, 3, 3}}, tight);
  CHECK(r.status == Status::Skip);
  CHECK_FALSE(r.reason.empty());
  const auto k = check_kuo_magnet(3, 1, 4, 1, 3, 2, tight);
  CHECK(k.status == Status::Skip);
}

TEST_CASE("a corrupted formula is caught") {
  const FormulaFn off_by_one = [](const RegionSpec& s) { return formula_value(s) + 1; };
  const auto reports = verify_formulas(hexagon_sweep(2), {}, off_by_one);
  const auto sum = summarize(reports);
  CHECK(sum.fail == reports.size());
  CHECK(reports.front().expected != reports.front().actual);
}

TEST_CASE("condensation instances") {
  CHECK(check_kuo_magnet(1, 1, 0, 1, 0, 0).status == Status::Pass);
  CHECK(check_kuo_magnet(1, 1, 1, 1, 1, 1).status == Status::Pass);
  CHECK(check_kuo_magnet(3, 1, 4, 1, 3, 2).status == Status::Pass);
  CHECK(check_kuo_sc_mixed(4, 7, 3, 0, 0, 0, 1).status == Status::Pass);
  CHECK(check_kuo_sc_same(5, 7, 3, 0, 0, 0, 1).status == Status::Pass);
  CHECK(check_kuo_sc_same(1, 1, 1, 1, 1, 1, 1).status == Status::Pass);
  CHECK_THROWS_AS(check_kuo_sc_same(1, 2, 1, 0, 0, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(check_kuo_sc_mixed(1, 1, 1, 0, 0, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(check_kuo_magnet(1, 1, 0, 0, 0, 0), std::invalid_argument);
}

TEST_CASE("closed-form condensation identities") {
  for (int x = 1; x <= 5; ++x) {
    for (int y = 1; y <= 5; ++y) {
      for (int z = 1; z <= 5; ++z) {
        if (!r_identity_admissible(x, y, z)) continue;
        for (int s = 0; s < 16; ++s) {
          const auto r = check_R_identity(x, y, z, s & 1, (s >> 1) & 1, (s >> 2) & 1, 1 + (s >> 3));
          CHECK_MESSAGE(r.status == Status::Pass, to_json_line(r));
        }
      }
    }
  }
  CHECK_FALSE(r_identity_admissible(1, 2, 1));
  CHECK_THROWS_AS(check_R_identity(2, 1, 2, 0, 0, 0, 1), std::invalid_argument);
}

TEST_CASE("mixed-parity identity depends on y and z only through y + z") {
  // The quotient of the two right-hand terms by the left-hand side.
  auto quotient = [](int x, int y, int z, int a, int b, int c, int m) {
    const auto lhs = sc_value(x, y, z, a, b, c, m) * sc_value(x, y - 1, z - 1, a, b, c, m);
    return sc_value(x - 1, y, z, a, b, c, m) * sc_value(x + 1, y - 1, z - 1, a, b, c, m) / lhs;
  };
  for (int x = 1; x <= 4; ++x) {
    for (int total = 2; total <= 8; total += 2) {
      for (int a = 0; a <= 1; ++a) {
        const int y0 = (x % 2 == 0) ? 1 : 2;
        if (y0 >= total) continue;
        const auto ref = quotient(x, y0, total - y0, a, 1, 0, 1);
        for (int y = y0; y < total; y += 2) {
          CHECK(quotient(x, y, total - y, a, 1, 0, 1) == ref);
        }
      }
    }
  }
}

TEST_CASE("base-case factorizations") {
  for (int a = 0; a <= 1; ++a) {
    for (int b = 0; b <= 1; ++b) {
      for (int c = 0; c <= 1; ++c) {
        for (int m = 0; m <= 2; ++m) {
          CHECK(check_base_magnet(2, a, b, c, m).status == Status::Pass);
          CHECK(check_base_sc_even(2, 2, a, b, c, m).status == Status::Pass);
          CHECK(check_base_sc_x_zero(3, 1, a, b, c, m).status == Status::Pass);
          CHECK(check_base_sc_z_zero(1, 2, a, b, c, m).status == Status::Pass);
          CHECK(check_base_three_hexagons(a, b, c, m).status == Status::Pass);
        }
      }
    }
  }
  CHECK_THROWS_AS(check_base_sc_even(1, 2, 0, 0, 0, 1), std::invalid_argument);
}

TEST_CASE("cancellation rule") {
  for (int tx = 0; tx <= 20; ++tx) {
    for (int y = 1; y <= 10; ++y) {
      const auto r = check_cancellation_rule(HalfInt::from_twice(tx), y);
      CHECK_MESSAGE(r.status == Status::Pass, to_json_line(r));
    }
  }
  // Outside integer y, or with H at -1, the two sides are not equal.
  CHECK(check_cancellation_rule(0, halve(1)).status == Status::Fail);
  CHECK(check_cancellation_rule(3, halve(5)).status == Status::Fail);
  const auto origin = check_cancellation_rule(0, 0);
  CHECK(origin.status == Status::Fail);
  CHECK_FALSE(origin.reason.empty());
  CHECK(origin.params == std::vector<int>{0, 0});
}

TEST_CASE("suites are canonically ordered") {
  const auto reports = run_suite(Suite::Bases);
  CHECK(summarize(reports).fail == 0);
  for (std::size_t k = 1; k < reports.size(); ++k) {
    CHECK(std::tie(reports[k - 1].check, reports[k - 1].params) <=
          std::tie(reports[k].check, reports[k].params));
  }
  CHECK(parse_suite("kuo") == Suite::Kuo);
  CHECK_FALSE(parse_suite("everything"));
}

}  // TEST_SUITE
