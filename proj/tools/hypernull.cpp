// Command-line front end: component listings, gm/am tables, the gm <= am
// verification report, oracle cross-checks and series export.

#include <hypernull/io.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <map>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct RangeArgs
{
  int n = 0;
  int n_max = 0;

  // --n N selects the single row N; --n-max N selects 1..N.
  std::pair<int, int> resolve(int default_max) const
  {
    if (n > 0)
      return {n, n};
    return {1, n_max > 0 ? n_max : default_max};
  }
};

void add_format(CLI::App* cmd, std::string& format, const std::string& def)
{
  format = def;
  cmd->add_option("--format", format, "Output format")
    ->check(CLI::IsMember({"text", "json", "csv"}))
    ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv)
{
  using namespace hypernull;

  CLI::App app{"Nullvariety components, gm(0) and am(0) for loose 3-uniform hyperpaths"};
  app.require_subcommand(1);

  unsigned threads = 1;
  int enum_bound = kDefaultEnumerationBound;
  std::map<const CLI::App*, std::string> formats;

  auto* components_cmd = app.add_subcommand("components", "List irreducible components of the nullvariety of P_n^3");
  int comp_n = 0;
  components_cmd->add_option("--n", comp_n, "Number of edges")->required()->check(CLI::PositiveNumber);
  add_format(components_cmd, formats[components_cmd], "text");

  auto* gm_cmd = app.add_subcommand("gm", "Geometric multiplicity gm(0) of P_n^3");
  RangeArgs gm_range;
  auto* gm_n = gm_cmd->add_option("--n", gm_range.n, "Single n")->check(CLI::PositiveNumber);
  gm_cmd->add_option("--n-max", gm_range.n_max, "Rows 1..n-max")->check(CLI::PositiveNumber)->excludes(gm_n);
  gm_cmd->add_option("--enum-bound", enum_bound, "Largest n computed by enumeration")->check(CLI::NonNegativeNumber);
  gm_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  add_format(gm_cmd, formats[gm_cmd], "text");

  auto* am_cmd = app.add_subcommand("am", "Algebraic multiplicity D_{n,k} of zero for P_n^k");
  RangeArgs am_range;
  int am_k = 3;
  auto* am_n = am_cmd->add_option("--n", am_range.n, "Single n")->check(CLI::PositiveNumber);
  am_cmd->add_option("--n-max", am_range.n_max, "Rows 1..n-max")->check(CLI::PositiveNumber)->excludes(am_n);
  am_cmd->add_option("--k", am_k, "Uniformity")->check(CLI::Range(3, 64))->capture_default_str();
  am_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  add_format(am_cmd, formats[am_cmd], "csv");

  auto* verify_cmd = app.add_subcommand("verify", "Check gm(0) <= am(0) for n = 1..n-max");
  int verify_max = 11;
  verify_cmd->add_option("--n-max", verify_max, "Largest n")->check(CLI::PositiveNumber)->capture_default_str();
  verify_cmd->add_option("--enum-bound", enum_bound, "Largest n computed by enumeration")
    ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  add_format(verify_cmd, formats[verify_cmd], "text");

  auto* oracle_cmd = app.add_subcommand("oracle-check", "Compare brute-force and structured decompositions");
  int oracle_max = 5;
  oracle_cmd->add_option("--n-max", oracle_max, "Check n = 3..n-max")
    ->check(CLI::Range(3, oracle::kDefaultBound))
    ->capture_default_str();

  auto* series_cmd = app.add_subcommand("series", "Coefficients of H(z) and H'(z) with gm(0) cross-check");
  int series_max = 30;
  series_cmd->add_option("--n-max", series_max, "Largest n")->check(CLI::PositiveNumber)->capture_default_str();
  series_cmd->add_option("--enum-bound", enum_bound, "Largest n computed by enumeration")
    ->check(CLI::NonNegativeNumber);
  series_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  add_format(series_cmd, formats[series_cmd], "csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const VerifyOptions opt{enum_bound, threads};

  try {
    const auto chosen = formats.find(app.get_subcommands().front());
    const io::Format fmt = io::parse_format(chosen == formats.end() ? "text" : chosen->second);

    if (*components_cmd) {
      io::write_components(std::cout, comp_n, components(comp_n), fmt);
      return kExitOk;
    }

    if (*gm_cmd) {
      const auto [lo, hi] = gm_range.resolve(11);
      auto rows = series_rows(hi, opt);
      rows.erase(rows.begin(), rows.begin() + (lo - 1));
      if (fmt == io::Format::Json) {
        io::json arr = io::json::array();
        for (const auto& r : rows)
          arr.push_back({{"n", r.n}, {"gm", r.gm_zero.str()}, {"provenance", to_string(r.source)}});
        std::cout << io::json{{"rows", arr}}.dump(2) << '\n';
      } else if (fmt == io::Format::Csv) {
        io::csv_preamble(std::cout, "gm");
        std::cout << "n,gm,provenance\n";
        for (const auto& r : rows)
          std::cout << r.n << ',' << r.gm_zero << ',' << to_string(r.source) << '\n';
      } else {
        for (const auto& r : rows)
          std::cout << "n=" << r.n << " gm(0)=" << r.gm_zero << '\n';
      }
      return kExitOk;
    }

    if (*am_cmd) {
      const auto [lo, hi] = am_range.resolve(11);
      auto rows = nullity_rows(hi, am_k, threads);
      rows.erase(rows.begin(), rows.begin() + (lo - 1));
      io::write_nullity(std::cout, rows, fmt);
      const bool ok = std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.match(); });
      return ok ? kExitOk : kExitVerifyFailed;
    }

    if (*verify_cmd) {
      const auto rows = verify_rows(verify_max, opt);
      io::write_rows(std::cout, rows, fmt);
      return all_hold(rows) ? kExitOk : kExitVerifyFailed;
    }

    if (*oracle_cmd) {
      bool ok = true;
      for (int n = 3; n <= oracle_max; ++n) {
        const auto r = oracle::check(n);
        io::write_oracle_result(std::cout, r);
        ok = ok && r.ok();
      }
      return ok ? kExitOk : kExitVerifyFailed;
    }

    if (*series_cmd) {
      io::write_series(std::cout, series_rows(series_max, opt), fmt);
      return kExitOk;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "verification error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  return kExitUsage;
}
