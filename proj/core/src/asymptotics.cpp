#include "shamrock/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "shamrock/formulas.hpp"

namespace shamrock {

double omega_single(int m) {
  if (m < 0) throw std::domain_error("omega_single: m must be nonnegative");
  HyperProduct p;
  p.mul(m, 4).div(2 * m);
  const double md = m;
  return std::exp(md * md * 0.5 * std::log(3.0) - md * std::log(2.0 * std::numbers::pi) +
                  p.log_value());
}

double omega_finite(int m, int x) {
  if (m < 0 || x < 0) throw std::domain_error("omega_finite: arguments must be nonnegative");
  auto p = s_cored_normalized_product(x, x, x, m, 0, 0, m);
  p /= macmahon_product(x + m, x + m, x + m);
  return std::exp(p.log_value());
}

double glaisher_ratio(int N, int a, int b, int c) {
  if (N < 1 || a < 0 || b < 0 || c < 0) throw std::domain_error("glaisher_ratio: bad arguments");
  HyperProduct p;
  p.mul(N).mul(N + a + b).mul(N + a + c).mul(N + b + c);
  p.div(N + a).div(N + b).div(N + c).div(N + a + b + c);
  return std::exp(p.log_value());
}

double finite_shamrock_ratio(int a, int b, int c, int m, int N) {
  if (N < 0) throw std::domain_error("finite_shamrock_ratio: N must be nonnegative");
  auto p = s_cored_normalized_product(N, N, N, a, b, c, m);
  p /= s_cored_normalized_product(N, N, N, a + b + c, 0, 0, m);
  return std::exp(p.log_value());
}

}  // namespace shamrock
