#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shamrock/bigint.hpp"
#include "shamrock/exact.hpp"
#include "shamrock/lattice.hpp"
#include "shamrock/oracle.hpp"

namespace shamrock {

enum class Status { Pass, Fail, Skip };

std::string_view status_name(Status s);

struct VerificationReport {
  std::string check;
  std::vector<int> params;
  std::string expected;
  std::string actual;
  Status status = Status::Pass;
  /// Why a check was skipped or could not be evaluated.
  std::string reason;
};

/// One line of {"check", "params", "expected", "actual", "status"[, "reason"]}.
std::string to_json_line(const VerificationReport& report);

/// Orders reports by check name, then parameter tuple.
void canonicalize(std::vector<VerificationReport>& reports);

struct ReportSummary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skip = 0;
};
ReportSummary summarize(const std::vector<VerificationReport>& reports);

using FormulaFn = std::function<BigInt(const RegionSpec&)>;

/// Closed form against the oracle; SKIP when the region exceeds the budget.
VerificationReport verify_formula_vs_oracle(const RegionSpec& spec, const OracleOptions& options,
                                            const FormulaFn& formula);
VerificationReport verify_formula_vs_oracle(const RegionSpec& spec,
                                            const OracleOptions& options = {});
std::vector<VerificationReport> verify_formulas(const std::vector<RegionSpec>& specs,
                                                const OracleOptions& options,
                                                const FormulaFn& formula);

/// hexagon(a,b,c,a,b,c) for a,b,c <= n.
std::vector<RegionSpec> hexagon_sweep(int n);
/// magnet_bar with every parameter <= n.
std::vector<RegionSpec> magnet_bar_sweep(int n);
/// s_cored_hexagon with x,y,z <= n_xyz and a,b,c,m <= n_abcm.
std::vector<RegionSpec> s_cored_sweep(int n_xyz, int n_abcm);

/// M(B_{x,y}) M(B_{x-1,y}(a,b-1)) = M(B_{x,y}(a,b-1)) M(B_{x-1,y})
///   + M(B_{x-1,y+1}(a,b-1)) M(B_{x,y-1}); requires x, y, b >= 1.
VerificationReport check_kuo_magnet(int x, int y, int a, int b, int c, int m,
                                    const OracleOptions& options = {});
/// Six-term condensation identity for x of parity opposite to y and z.
VerificationReport check_kuo_sc_mixed(int x, int y, int z, int a, int b, int c, int m,
                                      const OracleOptions& options = {});
/// Six-term condensation identity for x, y, z of one parity.
VerificationReport check_kuo_sc_same(int x, int y, int z, int a, int b, int c, int m,
                                     const OracleOptions& options = {});

/// The condensation identity of the matching parity case with every tiling
/// count replaced by the exact closed form. No regions are built.
VerificationReport check_R_identity(int x, int y, int z, int a, int b, int c, int m);
/// x, y, z >= 1 and either one parity or x the odd one out.
bool r_identity_admissible(int x, int y, int z);

// Factorizations checked with oracle counts on both sides.
/// M(B_{0,y}(a,b,c,m)) = P(a,c,m) P(b,y+c,m).
VerificationReport check_base_magnet(int y, int a, int b, int c, int m,
                                     const OracleOptions& options = {});
/// M(SC_{x,y,0}) = P(m, x/2+b, y/2+a) M(B_{x/2,y/2}(a,b,c,m)); x, y even.
VerificationReport check_base_sc_even(int x, int y, int a, int b, int c, int m,
                                      const OracleOptions& options = {});
/// M(SC_{0,y,z}) = P(m, (y+1)/2+c, (z-1)/2+b) M(B_{(y-1)/2,(z+1)/2}(b,c,a,m)); y, z odd.
VerificationReport check_base_sc_x_zero(int y, int z, int a, int b, int c, int m,
                                        const OracleOptions& options = {});
/// M(SC_{x,y,0}) = P(m, (x-1)/2+b, y/2+a) M(B_{(x+1)/2,y/2}(a,b,c,m)); x odd, y even.
VerificationReport check_base_sc_z_zero(int x, int y, int a, int b, int c, int m,
                                        const OracleOptions& options = {});
/// M(SC_{0,0,0}(a,b,c,m)) = P(a,b,m) P(a,c,m) P(b,c,m).
VerificationReport check_base_three_hexagons(int a, int b, int c, int m,
                                             const OracleOptions& options = {});

/// H(ceil(x+y)) H(floor(x+y)) / (H(ceil(x-1/2)+y) H(floor(x-1/2)+y)) == Gamma(ceil(x+y)).
/// Report params are 2x and 2y. FAIL when the sides differ or are undefined.
VerificationReport check_cancellation_rule(HalfInt x, HalfInt y);

struct RatioPoint {
  int N = 0;
  double value = 0;
  double limit = 0;
  double relative_error = 0;
};
/// Finite-N shamrock ratio against its exact limit, for each N.
std::vector<RatioPoint> ratio_convergence(int a, int b, int c, int m, const std::vector<int>& Ns);

enum class Suite { Formulas, Kuo, Identities, Bases, All };
std::optional<Suite> parse_suite(std::string_view name);

/// Runs a suite over its default parameter ranges; reports come back canonicalized.
std::vector<VerificationReport> run_suite(Suite suite, const OracleOptions& options,
                                          const FormulaFn& formula);
std::vector<VerificationReport> run_suite(Suite suite, const OracleOptions& options = {});

}  // namespace shamrock
