#include "shamrock/verification.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <json.hpp>
#include <tuple>

#include "shamrock/asymptotics.hpp"
#include "shamrock/formulas.hpp"

namespace shamrock {

namespace {

bool odd(int v) { return (v & 1) != 0; }

VerificationReport compare(std::string check, std::vector<int> params, const std::string& expected,
                           const std::string& actual) {
  VerificationReport r;
  r.check = std::move(check);
  r.params = std::move(params);
  r.expected = expected;
  r.actual = actual;
  r.status = expected == actual ? Status::Pass : Status::Fail;
  return r;
}

VerificationReport skipped(std::string check, std::vector<int> params, std::string reason) {
  VerificationReport r;
  r.check = std::move(check);
  r.params = std::move(params);
  r.status = Status::Skip;
  r.reason = std::move(reason);
  return r;
}

VerificationReport failed(std::string check, std::vector<int> params, std::string reason) {
  VerificationReport r;
  r.check = std::move(check);
  r.params = std::move(params);
  r.status = Status::Fail;
  r.reason = std::move(reason);
  return r;
}

RegionSpec sc(int x, int y, int z, int a, int b, int c, int m) {
  return {Family::SCoredHexagon, {x, y, z, a, b, c, m}};
}
RegionSpec bar(int x, int y, int a, int b, int c, int m) {
  return {Family::MagnetBar, {x, y, a, b, c, m}};
}
RegionSpec hex(int a, int b, int c) { return {Family::Hexagon, {a, b, c, a, b, c}}; }

BigInt oracle(const RegionSpec& spec, const OracleOptions& options) {
  return count_tilings(build(spec), options);
}

// lhs0 * lhs1 == rhs0 * rhs1 + rhs2 * rhs3, every count from the oracle.
VerificationReport six_term(std::string check, std::vector<int> params,
                            const std::array<RegionSpec, 6>& t, const OracleOptions& options) {
  try {
    std::array<BigInt, 6> v;
    for (std::size_t k = 0; k < 6; ++k) v[k] = oracle(t[k], options);
    return compare(std::move(check), std::move(params), to_decimal(BigInt(v[0] * v[1])),
                   to_decimal(BigInt(v[2] * v[3] + v[4] * v[5])));
  } catch (const ResourceLimitError& e) {
    return skipped(std::move(check), std::move(params), e.what());
  } catch (const GeometryError& e) {
    return failed(std::move(check), std::move(params), e.what());
  }
}

// Oracle count of `whole` against the product of oracle counts of `parts`.
VerificationReport factorization(std::string check, std::vector<int> params,
                                 const RegionSpec& whole, const std::vector<RegionSpec>& parts,
                                 const OracleOptions& options) {
  try {
    const BigInt lhs = oracle(whole, options);
    BigInt rhs = 1;
    for (const auto& p : parts) rhs *= oracle(p, options);
    return compare(std::move(check), std::move(params), to_decimal(lhs), to_decimal(rhs));
  } catch (const ResourceLimitError& e) {
    return skipped(std::move(check), std::move(params), e.what());
  } catch (const GeometryError& e) {
    return failed(std::move(check), std::move(params), e.what());
  }
}

template <class F>
void grid(int lo, int hi, int dims, F f) {
  std::vector<int> v(static_cast<std::size_t>(dims), lo);
  while (true) {
    f(v);
    int k = dims - 1;
    while (k >= 0 && v[k] == hi) v[k--] = lo;
    if (k < 0) return;
    ++v[k];
  }
}

void append(std::vector<VerificationReport>& out, std::vector<VerificationReport> more) {
  out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

std::vector<VerificationReport> formulas_suite(const OracleOptions& options, const FormulaFn& f) {
  std::vector<RegionSpec> specs = hexagon_sweep(4);
  for (auto& s : magnet_bar_sweep(2)) specs.push_back(std::move(s));
  specs.push_back(bar(3, 1, 4, 1, 3, 2));
  for (auto& s : s_cored_sweep(4, 2)) specs.push_back(std::move(s));
  return verify_formulas(specs, options, f);
}

std::vector<VerificationReport> kuo_suite(const OracleOptions& options) {
  std::vector<VerificationReport> out;
  grid(0, 1, 4, [&](const std::vector<int>& p) {
    if (p[1] == 0) return;
    for (int x = 1; x <= 3; ++x) {
      for (int y = 1; y <= 3; ++y) out.push_back(check_kuo_magnet(x, y, p[0], p[1], p[2], p[3], options));
    }
  });
  out.push_back(check_kuo_magnet(3, 1, 4, 1, 3, 2, options));
  grid(1, 3, 3, [&](const std::vector<int>& v) {
    const int x = v[0], y = v[1], z = v[2];
    const bool same = odd(x) == odd(y) && odd(y) == odd(z);
    const bool mixed = odd(x) != odd(y) && odd(y) == odd(z);
    if (!same && !mixed) return;
    grid(0, 1, 4, [&](const std::vector<int>& p) {
      out.push_back(same ? check_kuo_sc_same(x, y, z, p[0], p[1], p[2], p[3], options)
                         : check_kuo_sc_mixed(x, y, z, p[0], p[1], p[2], p[3], options));
    });
  });
  out.push_back(check_kuo_sc_mixed(4, 7, 3, 0, 0, 0, 1, options));
  out.push_back(check_kuo_sc_same(5, 7, 3, 0, 0, 0, 1, options));
  return out;
}

std::vector<VerificationReport> identities_suite() {
  std::vector<VerificationReport> out;
  grid(1, 6, 3, [&](const std::vector<int>& v) {
    if (!r_identity_admissible(v[0], v[1], v[2])) return;
    grid(0, 3, 4, [&](const std::vector<int>& p) {
      out.push_back(check_R_identity(v[0], v[1], v[2], p[0], p[1], p[2], p[3]));
    });
  });
  // The cancellation rule is an identity for integer y with every
  // hyperfactorial argument nonnegative; other grid points are reported as skipped.
  for (int tx = 0; tx <= 20; ++tx) {
    for (int ty = 0; ty <= 20; ++ty) {
      const HalfInt x = HalfInt::from_twice(tx), y = HalfInt::from_twice(ty);
      if (!y.is_integer()) {
        out.push_back(skipped("cancellation_rule", {tx, ty}, "the rule requires integer y"));
      } else if ((x - HalfInt::half(1)).floor() + y.floor() < 0) {
        out.push_back(skipped("cancellation_rule", {tx, ty}, "H at a negative argument"));
      } else {
        out.push_back(check_cancellation_rule(x, y));
      }
    }
  }
  return out;
}

std::vector<VerificationReport> bases_suite(const OracleOptions& options) {
  std::vector<VerificationReport> out;
  grid(0, 2, 4, [&](const std::vector<int>& p) {
    const int a = p[0], b = p[1], c = p[2], m = p[3];
    for (int y = 0; y <= 2; ++y) out.push_back(check_base_magnet(y, a, b, c, m, options));
    for (int x = 0; x <= 2; x += 2) {
      for (int y = 0; y <= 2; y += 2) out.push_back(check_base_sc_even(x, y, a, b, c, m, options));
    }
    for (int y = 1; y <= 3; y += 2) {
      for (int z = 1; z <= 3; z += 2) out.push_back(check_base_sc_x_zero(y, z, a, b, c, m, options));
    }
    for (int x = 1; x <= 3; x += 2) {
      for (int y = 0; y <= 2; y += 2) out.push_back(check_base_sc_z_zero(x, y, a, b, c, m, options));
    }
    out.push_back(check_base_three_hexagons(a, b, c, m, options));
  });
  return out;
}

}  // namespace

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Skip: return "SKIP";
  }
  return "UNKNOWN";
}

std::string to_json_line(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["check"] = report.check;
  j["params"] = report.params;
  j["expected"] = report.expected;
  j["actual"] = report.actual;
  j["status"] = std::string(status_name(report.status));
  if (!report.reason.empty()) j["reason"] = report.reason;
  return j.dump();
}

void canonicalize(std::vector<VerificationReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(), [](const auto& a, const auto& b) {
    return std::tie(a.check, a.params) < std::tie(b.check, b.params);
  });
}

ReportSummary summarize(const std::vector<VerificationReport>& reports) {
  ReportSummary s;
  for (const auto& r : reports) {
    switch (r.status) {
      case Status::Pass: ++s.pass; break;
      case Status::Fail: ++s.fail; break;
      case Status::Skip: ++s.skip; break;
    }
  }
  return s;
}

VerificationReport verify_formula_vs_oracle(const RegionSpec& spec, const OracleOptions& options,
                                            const FormulaFn& formula) {
  const std::string check = std::string(family_name(spec.family)) + "_formula";
  try {
    const Region region = build(spec);
    if (region.size() > options.max_cells) {
      return skipped(check, spec.params,
                     std::to_string(region.size()) + " cells exceed the budget of " +
                         std::to_string(options.max_cells));
    }
    const BigInt expected = formula(spec);
    const BigInt actual = count_tilings(region, options);
    return compare(check, spec.params, to_decimal(expected), to_decimal(actual));
  } catch (const ResourceLimitError& e) {
    return skipped(check, spec.params, e.what());
  } catch (const std::exception& e) {
    return failed(check, spec.params, e.what());
  }
}

VerificationReport verify_formula_vs_oracle(const RegionSpec& spec, const OracleOptions& options) {
  return verify_formula_vs_oracle(spec, options, formula_value);
}

std::vector<VerificationReport> verify_formulas(const std::vector<RegionSpec>& specs,
                                                const OracleOptions& options,
                                                const FormulaFn& formula) {
  std::vector<VerificationReport> out;
  out.reserve(specs.size());
  for (const auto& s : specs) out.push_back(verify_formula_vs_oracle(s, options, formula));
  return out;
}

std::vector<RegionSpec> hexagon_sweep(int n) {
  std::vector<RegionSpec> out;
  grid(0, n, 3, [&](const std::vector<int>& p) { out.push_back(hex(p[0], p[1], p[2])); });
  return out;
}

std::vector<RegionSpec> magnet_bar_sweep(int n) {
  std::vector<RegionSpec> out;
  grid(0, n, 6, [&](const std::vector<int>& p) { out.push_back({Family::MagnetBar, p}); });
  return out;
}

std::vector<RegionSpec> s_cored_sweep(int n_xyz, int n_abcm) {
  std::vector<RegionSpec> out;
  grid(0, n_xyz, 3, [&](const std::vector<int>& v) {
    grid(0, n_abcm, 4, [&](const std::vector<int>& p) {
      out.push_back(sc(v[0], v[1], v[2], p[0], p[1], p[2], p[3]));
    });
  });
  return out;
}

VerificationReport check_kuo_magnet(int x, int y, int a, int b, int c, int m,
                                    const OracleOptions& options) {
  if (x < 1 || y < 1 || b < 1) throw std::invalid_argument("check_kuo_magnet: needs x, y, b >= 1");
  return six_term("kuo_magnet", {x, y, a, b, c, m},
                  {bar(x, y, a, b, c, m), bar(x - 1, y, a, b - 1, c, m), bar(x, y, a, b - 1, c, m),
                   bar(x - 1, y, a, b, c, m), bar(x - 1, y + 1, a, b - 1, c, m),
                   bar(x, y - 1, a, b, c, m)},
                  options);
}

VerificationReport check_kuo_sc_mixed(int x, int y, int z, int a, int b, int c, int m,
                                      const OracleOptions& options) {
  if (x < 1 || y < 1 || z < 1 || odd(x) == odd(y) || odd(y) != odd(z)) {
    throw std::invalid_argument("check_kuo_sc_mixed: needs x, y, z >= 1 with x the odd one out");
  }
  return six_term("kuo_sc_mixed", {x, y, z, a, b, c, m},
                  {sc(x, y, z, a, b, c, m), sc(x, y - 1, z - 1, a, b, c, m),
                   sc(y, x, z - 1, b, a, c, m), sc(z, y - 1, x, c, b, a, m),
                   sc(x - 1, y, z, a, b, c, m), sc(x + 1, y - 1, z - 1, a, b, c, m)},
                  options);
}

VerificationReport check_kuo_sc_same(int x, int y, int z, int a, int b, int c, int m,
                                     const OracleOptions& options) {
  if (x < 1 || y < 1 || z < 1 || odd(x) != odd(y) || odd(y) != odd(z)) {
    throw std::invalid_argument("check_kuo_sc_same: needs x, y, z >= 1 of one parity");
  }
  return six_term("kuo_sc_same", {x, y, z, a, b, c, m},
                  {sc(x, y, z, a, b, c, m), sc(x, z - 1, y - 1, a, c, b, m),
                   sc(z - 1, x, y, c, a, b, m), sc(y - 1, z, x, b, c, a, m),
                   sc(x - 1, z, y, a, c, b, m), sc(x + 1, y - 1, z - 1, a, b, c, m)},
                  options);
}

bool r_identity_admissible(int x, int y, int z) {
  return x >= 1 && y >= 1 && z >= 1 && odd(y) == odd(z);
}

VerificationReport check_R_identity(int x, int y, int z, int a, int b, int c, int m) {
  if (!r_identity_admissible(x, y, z)) {
    throw std::invalid_argument("check_R_identity: needs x, y, z >= 1 with y, z of one parity");
  }
  const bool same = odd(x) == odd(y);
  std::vector<int> params{x, y, z, a, b, c, m};
  const std::string check = same ? "r_identity_same" : "r_identity_mixed";
  try {
    SqrtPiScaled lhs, rhs;
    if (same) {
      lhs = sc_value(x, y, z, a, b, c, m) * sc_value(x, z - 1, y - 1, a, c, b, m);
      rhs = sc_value(z - 1, x, y, c, a, b, m) * sc_value(y - 1, z, x, b, c, a, m) +
            sc_value(x - 1, z, y, a, c, b, m) * sc_value(x + 1, y - 1, z - 1, a, b, c, m);
    } else {
      lhs = sc_value(x, y, z, a, b, c, m) * sc_value(x, y - 1, z - 1, a, b, c, m);
      rhs = sc_value(y, x, z - 1, b, a, c, m) * sc_value(z, y - 1, x, c, b, a, m) +
            sc_value(x - 1, y, z, a, b, c, m) * sc_value(x + 1, y - 1, z - 1, a, b, c, m);
    }
    return compare(check, std::move(params), lhs.to_string(), rhs.to_string());
  } catch (const std::exception& e) {
    return failed(check, std::move(params), e.what());
  }
}

VerificationReport check_base_magnet(int y, int a, int b, int c, int m,
                                     const OracleOptions& options) {
  return factorization("base_magnet_x0", {y, a, b, c, m}, bar(0, y, a, b, c, m),
                       {hex(a, c, m), hex(b, y + c, m)}, options);
}

VerificationReport check_base_sc_even(int x, int y, int a, int b, int c, int m,
                                      const OracleOptions& options) {
  if (odd(x) || odd(y)) throw std::invalid_argument("check_base_sc_even: x and y must be even");
  return factorization("base_sc_z0_even", {x, y, a, b, c, m}, sc(x, y, 0, a, b, c, m),
                       {hex(m, x / 2 + b, y / 2 + a), bar(x / 2, y / 2, a, b, c, m)}, options);
}

VerificationReport check_base_sc_x_zero(int y, int z, int a, int b, int c, int m,
                                        const OracleOptions& options) {
  if (!odd(y) || !odd(z)) throw std::invalid_argument("check_base_sc_x_zero: y and z must be odd");
  return factorization("base_sc_x0", {y, z, a, b, c, m}, sc(0, y, z, a, b, c, m),
                       {hex(m, (y + 1) / 2 + c, (z - 1) / 2 + b),
                        bar((y - 1) / 2, (z + 1) / 2, b, c, a, m)},
                       options);
}

VerificationReport check_base_sc_z_zero(int x, int y, int a, int b, int c, int m,
                                        const OracleOptions& options) {
  if (!odd(x) || odd(y)) {
    throw std::invalid_argument("check_base_sc_z_zero: x must be odd and y even");
  }
  return factorization("base_sc_z0_odd", {x, y, a, b, c, m}, sc(x, y, 0, a, b, c, m),
                       {hex(m, (x - 1) / 2 + b, y / 2 + a), bar((x + 1) / 2, y / 2, a, b, c, m)},
                       options);
}

VerificationReport check_base_three_hexagons(int a, int b, int c, int m,
                                             const OracleOptions& options) {
  return factorization("base_three_hexagons", {a, b, c, m}, sc(0, 0, 0, a, b, c, m),
                       {hex(a, b, m), hex(a, c, m), hex(b, c, m)}, options);
}

VerificationReport check_cancellation_rule(HalfInt x, HalfInt y) {
  std::vector<int> params{static_cast<int>(x.twice()), static_cast<int>(y.twice())};
  const HalfInt s = x + y;
  const HalfInt w = x - HalfInt::half(1);
  try {
    HyperProduct p;
    p.mul(s.ceil()).mul(s.floor()).div(w.ceil() + y).div(w.floor() + y);
    const SqrtPiScaled lhs = p.evaluate();
    const SqrtPiScaled rhs = gamma_value(s.ceil());
    return compare("cancellation_rule", std::move(params), rhs.to_string(), lhs.to_string());
  } catch (const ArithmeticError& e) {
    return failed("cancellation_rule", std::move(params), e.what());
  }
}

std::vector<RatioPoint> ratio_convergence(int a, int b, int c, int m, const std::vector<int>& Ns) {
  const double limit = shamrock_ratio(a, b, c, m).get_d();
  std::vector<RatioPoint> out;
  for (int N : Ns) {
    RatioPoint p;
    p.N = N;
    p.value = finite_shamrock_ratio(a, b, c, m, N);
    p.limit = limit;
    p.relative_error = std::abs(p.value - limit) / limit;
    out.push_back(p);
  }
  return out;
}

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "formulas") return Suite::Formulas;
  if (name == "kuo") return Suite::Kuo;
  if (name == "identities") return Suite::Identities;
  if (name == "bases") return Suite::Bases;
  if (name == "all") return Suite::All;
  return std::nullopt;
}

std::vector<VerificationReport> run_suite(Suite suite, const OracleOptions& options,
                                          const FormulaFn& formula) {
  std::vector<VerificationReport> out;
  if (suite == Suite::Formulas || suite == Suite::All) append(out, formulas_suite(options, formula));
  if (suite == Suite::Kuo || suite == Suite::All) append(out, kuo_suite(options));
  if (suite == Suite::Identities || suite == Suite::All) append(out, identities_suite());
  if (suite == Suite::Bases || suite == Suite::All) append(out, bases_suite(options));
  canonicalize(out);
  return out;
}

std::vector<VerificationReport> run_suite(Suite suite, const OracleOptions& options) {
  return run_suite(suite, options, formula_value);
}

}  // namespace shamrock
