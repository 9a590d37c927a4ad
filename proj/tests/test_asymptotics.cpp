#include <doctest.h>

#include <cmath>
#include <numbers>

#include "shamrock/asymptotics.hpp"
#include "shamrock/verification.hpp"

using namespace shamrock;

TEST_SUITE("asymptotics") {

TEST_CASE("single shamrock correlation") {
  CHECK(omega_single(0) == 1.0);
  CHECK(omega_single(1) == doctest::Approx(std::sqrt(3.0) / (2 * std::numbers::pi)).epsilon(1e-14));
  CHECK(omega_single(2) > 0);
}

TEST_CASE("finite correlation approaches the limit") {
  const double limit = omega_single(1);
  CHECK(omega_finite(0, 10) == doctest::Approx(1.0));
  CHECK(std::abs(omega_finite(1, 200) / limit - 1) < 0.01);
  double prev = 1e9;
  for (int x : {10, 20, 40, 80, 160}) {
    const double err = std::abs(omega_finite(1, x) / limit - 1);
    CHECK(err < prev);
    prev = err;
  }
}

TEST_CASE("glaisher ratio") {
  for (int N : {1, 5, 50, 500}) CHECK(glaisher_ratio(N, 0, 0, 0) == 1.0);
  // With c = 0 the factors cancel in pairs.
  for (int N : {10, 20, 40, 80, 100}) CHECK(glaisher_ratio(N, 1, 1, 0) == 1.0);
  CHECK(std::abs(glaisher_ratio(100, 1, 1, 1) - 1) < 0.05);
  double prev = 1e9;
  for (int N : {10, 20, 40, 80, 160}) {
    const double err = std::abs(glaisher_ratio(N, 1, 1, 1) - 1);
    CHECK(err < prev);
    prev = err;
  }
}

TEST_CASE("ratio convergence") {
  for (const auto& p : ratio_convergence(0, 0, 0, 3, {1, 10, 100})) CHECK(p.value == 1.0);
  const auto at50 = ratio_convergence(1, 1, 0, 1, {50});
  CHECK(at50[0].limit == 2.0);
  CHECK(at50[0].relative_error < 1e-2);
  const auto big = ratio_convergence(1, 1, 1, 3, {25, 50, 100});
  CHECK(big[0].limit == 40.0);
  CHECK(big[2].relative_error < big[1].relative_error);
  CHECK(big[1].relative_error < big[0].relative_error);
  CHECK(big[2].relative_error < 1e-3);
}

}  // TEST_SUITE
