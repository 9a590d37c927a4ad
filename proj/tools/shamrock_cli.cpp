#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "shamrock/asymptotics.hpp"
#include "shamrock/formulas.hpp"
#include "shamrock/lattice.hpp"
#include "shamrock/oracle.hpp"
#include "shamrock/render.hpp"
#include "shamrock/verification.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct RegionArgs {
  std::string family;
  std::vector<int> params;
  bool json = false;
};

void add_region_options(CLI::App* cmd, RegionArgs& args) {
  cmd->add_option("--family", args.family,
                  "hexagon | shamrock | cored | sc | magnet (long names also accepted)")
      ->required();
  cmd->add_option("--params", args.params, "comma-separated parameters in the family's order")
      ->delimiter(',')
      ->required();
}

std::size_t budget(std::optional<std::size_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("SHAMROCK_MAX_CELLS")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      std::cerr << "ignoring malformed SHAMROCK_MAX_CELLS=" << env << '\n';
    }
  }
  return shamrock::OracleOptions{}.max_cells;
}

// Throws std::invalid_argument with a usage message on a bad family or arity.
shamrock::RegionSpec to_spec(const RegionArgs& args) {
  const auto family = shamrock::parse_family(args.family);
  if (!family) throw std::invalid_argument("unknown family '" + args.family + "'");
  if (args.params.size() != shamrock::param_count(*family)) {
    throw std::invalid_argument(std::string(shamrock::family_name(*family)) + " takes " +
                                std::to_string(shamrock::param_count(*family)) +
                                " parameters, got " + std::to_string(args.params.size()));
  }
  for (int p : args.params) {
    if (p < 0) throw std::invalid_argument("parameters must be nonnegative");
  }
  return {*family, args.params};
}

void print_count(const shamrock::RegionSpec& spec, const shamrock::BigInt& value, bool json) {
  if (!json) {
    std::cout << shamrock::to_decimal(value) << '\n';
    return;
  }
  nlohmann::ordered_json j;
  j["family"] = std::string(shamrock::family_name(spec.family));
  j["params"] = spec.params;
  j["count"] = shamrock::to_decimal(value);
  std::cout << j.dump() << '\n';
}

std::string format_float(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  std::string s = buf;
  if (s.find_first_of(".eEni") == std::string::npos) s += ".0";
  return s;
}

template <class F>
int guarded(F body) {
  try {
    return body();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const shamrock::ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lozenge tilings of hexagons with shamrock-shaped holes"};
  app.require_subcommand(1);

  RegionArgs count_args;
  std::optional<std::size_t> count_budget;
  auto* count = app.add_subcommand("count", "count tilings with the exact oracle");
  add_region_options(count, count_args);
  count->add_flag("--json", count_args.json, "print {family, params, count}");
  count->add_option("--max-cells", count_budget, "oracle cell budget");

  RegionArgs formula_args;
  auto* formula = app.add_subcommand("formula", "evaluate the closed-form product formula");
  add_region_options(formula, formula_args);
  formula->add_flag("--json", formula_args.json, "print {family, params, count}");

  std::string suite_name = "all";
  std::optional<std::size_t> verify_budget;
  bool inject_fault = false;
  auto* verify = app.add_subcommand("verify", "run a verification suite, one JSON line per check");
  verify->add_option("--suite", suite_name, "formulas | kuo | identities | bases | all")
      ->check(CLI::IsMember({"formulas", "kuo", "identities", "bases", "all"}));
  verify->add_option("--max-cells", verify_budget, "oracle cell budget");
  verify->add_flag("--inject-fault", inject_fault)->group("");

  int ra = 0, rb = 0, rc = 0, rm = 0;
  std::optional<int> rN;
  auto* ratio = app.add_subcommand("ratio", "limit ratio of the shamrock correlation, factored");
  ratio->add_option("--a", ra)->required()->check(CLI::NonNegativeNumber);
  ratio->add_option("--b", rb)->required()->check(CLI::NonNegativeNumber);
  ratio->add_option("--c", rc)->required()->check(CLI::NonNegativeNumber);
  ratio->add_option("--m", rm)->required()->check(CLI::NonNegativeNumber);
  ratio->add_option("--N", rN, "also evaluate the finite-size ratio at this N")
      ->check(CLI::NonNegativeNumber);

  int om = 0;
  std::optional<int> ox;
  auto* omega = app.add_subcommand("omega", "correlation of a single shamrock");
  omega->add_option("--m", om)->required()->check(CLI::NonNegativeNumber);
  omega->add_option("--x", ox, "finite hexagon parameter")->check(CLI::NonNegativeNumber);

  RegionArgs render_args;
  std::string out_path;
  bool with_tiling = false;
  auto* render = app.add_subcommand("render", "write an SVG picture of a region");
  add_region_options(render, render_args);
  render->add_option("--out", out_path, "output file (stdout when omitted)");
  render->add_flag("--tiling", with_tiling, "overlay one lozenge tiling");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (*count) {
    return guarded([&] {
      const auto spec = to_spec(count_args);
      const auto region = shamrock::build(spec);
      shamrock::OracleOptions opt;
      opt.max_cells = budget(count_budget);
      print_count(spec, shamrock::count_tilings(region, opt), count_args.json);
      return kOk;
    });
  }

  if (*formula) {
    return guarded([&] {
      const auto spec = to_spec(formula_args);
      shamrock::build(spec);  // same geometric validity as count
      print_count(spec, shamrock::formula_value(spec), formula_args.json);
      return kOk;
    });
  }

  if (*verify) {
    return guarded([&] {
      shamrock::OracleOptions opt;
      opt.max_cells = budget(verify_budget);
      shamrock::FormulaFn fn = shamrock::formula_value;
      if (inject_fault) {
        fn = [](const shamrock::RegionSpec& s) { return shamrock::formula_value(s) + 1; };
      }
      const auto reports = shamrock::run_suite(*shamrock::parse_suite(suite_name), opt, fn);
      for (const auto& r : reports) std::cout << shamrock::to_json_line(r) << '\n';
      const auto sum = shamrock::summarize(reports);
      std::cerr << sum.pass << " passed, " << sum.fail << " failed, " << sum.skip << " skipped\n";
      return sum.fail == 0 ? kOk : kFailure;
    });
  }

  if (*ratio) {
    return guarded([&] {
      const auto value = shamrock::shamrock_ratio(ra, rb, rc, rm);
      const auto sym = shamrock::shamrock_ratio_symmetric(ra, rb, rc, rm);
      std::cout << shamrock::to_decimal(value) << " = ";
      if (sym) {
        std::cout << "P(" << ra << ',' << rb << ',' << rc << ")*P(" << ra + rb << ',' << rb + rc
                  << ',' << rc + ra << ")\n";
      } else {
        std::cout << "P(" << ra << ',' << rb << ',' << rm << ")*P(" << ra + rb << ',' << rc << ','
                  << rm << ")\n";
      }
      if (rN) {
        const auto pts = shamrock::ratio_convergence(ra, rb, rc, rm, {*rN});
        std::cout << "N=" << *rN << " finite=" << format_float(pts[0].value)
                  << " relative_error=" << format_float(pts[0].relative_error) << '\n';
      }
      return kOk;
    });
  }

  if (*omega) {
    return guarded([&] {
      const double v = ox ? shamrock::omega_finite(om, *ox) : shamrock::omega_single(om);
      std::cout << format_float(v) << '\n';
      return kOk;
    });
  }

  if (*render) {
    return guarded([&] {
      const auto spec = to_spec(render_args);
      const auto region = shamrock::build(spec);
      std::optional<shamrock::Tiling> tiling;
      if (with_tiling) {
        shamrock::OracleOptions opt;
        opt.max_cells = budget(std::nullopt);
        tiling = shamrock::find_one_tiling(region, opt);
        if (!tiling) {
          std::cerr << "error: region has no lozenge tiling\n";
          return kFailure;
        }
      }
      const auto svg = shamrock::render_svg(region, tiling);
      if (out_path.empty()) {
        std::cout << svg;
      } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        out << svg;
      }
      return kOk;
    });
  }
  return kUsage;
}
