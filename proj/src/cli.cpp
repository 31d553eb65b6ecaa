#include "freemoments/cli.hpp"

#include "freemoments/density.hpp"
#include "freemoments/errors.hpp"
#include "freemoments/measure_expr.hpp"
#include "freemoments/rmt.hpp"
#include "freemoments/transforms.hpp"
#include "freemoments/verify.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

namespace freemoments {

namespace {

std::string fmt17(double v)
{
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void print_rationals(std::ostream &out, std::span<Rational const> values, bool json)
{
  if (json) {
    auto arr = nlohmann::json::array();
    for (auto const &v : values) { arr.push_back(v.str()); }
    out << arr.dump() << '\n';
    return;
  }
  for (std::size_t i = 0; i < values.size(); ++i) { out << (i ? ", " : "") << values[i].str(); }
  out << '\n';
}

std::ofstream open_output(std::filesystem::path const &path)
{
  std::ofstream f(path, std::ios::binary);
  if (!f) { throw InvalidParameter("cannot open '" + path.string() + "' for writing"); }
  return f;
}

std::filesystem::path sibling(std::filesystem::path path, std::string const &suffix)
{
  return path.replace_extension(suffix);
}

DensityFn density_for(MeasureSpec const &spec)
{
  if (auto const *n = std::get_if<measure::Named>(&spec.node)) {
    switch (*n) {
    case measure::Named::mu0: return DensityFn::v_mu0();
    case measure::Named::mu1: return DensityFn::mu1();
    case measure::Named::mu2: return DensityFn::mu2();
    case measure::Named::arcsine: return DensityFn::arcsine();
    case measure::Named::bernoulli_half: break;
    }
  }
  if (auto const *m = std::get_if<measure::MarchenkoPastur>(&spec.node)) {
    return DensityFn::marchenko_pastur(m->rate.to_double());
  }
  if (auto const *b = std::get_if<measure::Beta>(&spec.node)) {
    return DensityFn::beta(b->alpha.to_double(), b->beta.to_double());
  }
  throw UnsupportedSpec("no density available for '" + to_string(spec) + "'");
}

RmtExperiment experiment_for(std::string const &text)
{
  if (text == "mu0") { return {RmtTarget::mu0_free_sum}; }
  auto const spec = parse_measure(text);
  if (auto const *n = std::get_if<measure::Named>(&spec.node)) {
    if (*n == measure::Named::mu1) { return {RmtTarget::mu1}; }
    if (*n == measure::Named::mu2) { return {RmtTarget::mu2}; }
  }
  if (auto const *m = std::get_if<measure::MarchenkoPastur>(&spec.node)) { return {RmtTarget::marchenko_pastur, m->rate}; }
  throw UnsupportedSpec("rmt supports mu0, mu1, mu2 and mp:<t>");
}

} // namespace

int run_cli(std::vector<std::string> const &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Exact moment calculus and free convolution for the C(3n,n)/(n+1) measure"};
  app.require_subcommand(1);

  std::string measure_text, lhs_text, rhs_text;
  std::size_t n = 16;
  bool json = false;

  auto *moments_cmd = app.add_subcommand("moments", "Exact moments s_0..s_N");
  auto *cumulants_cmd = app.add_subcommand("cumulants", "Free cumulants k_1..k_N");
  auto *stransform_cmd = app.add_subcommand("stransform", "S-transform coefficients S_0..S_N");
  for (auto *cmd : {moments_cmd, cumulants_cmd, stransform_cmd}) {
    cmd->add_option("--measure", measure_text, "Measure expression")->required();
    cmd->add_option("--n", n, "Truncation order")->capture_default_str();
    cmd->add_flag("--json", json, "Print a JSON array of \"p/q\" strings");
  }

  auto *boxplus_cmd = app.add_subcommand("boxplus", "Moments of A ⊞ B");
  auto *boxtimes_cmd = app.add_subcommand("boxtimes", "Moments of A ⊠ B");
  auto *mellin_cmd = app.add_subcommand("mellin", "Moments of the Mellin convolution A ∘ B");
  for (auto *cmd : {boxplus_cmd, boxtimes_cmd, mellin_cmd}) {
    cmd->add_option("a", lhs_text, "First measure expression")->required();
    cmd->add_option("b", rhs_text, "Second measure expression")->required();
    cmd->add_option("--n", n, "Truncation order")->capture_default_str();
    cmd->add_flag("--json", json, "Print a JSON array of \"p/q\" strings");
  }

  std::size_t points = 512;
  std::string out_path;
  auto *density_cmd = app.add_subcommand("density", "Sample a density on a grid (CSV) plus its atoms");
  density_cmd->add_option("--measure", measure_text, "mu0, mu1, mu2, arcsine, mp:<t> or beta:<a>,<b>")->required();
  density_cmd->add_option("--points", points, "Grid points")->capture_default_str()->check(CLI::PositiveNumber);
  density_cmd->add_option("--out", out_path, "Output CSV (atoms go to <stem>.atoms.csv)")->required();

  std::string suite = "all";
  std::size_t order = 40;
  double tol = 1e-8;
  auto *verify_cmd = app.add_subcommand("verify", "Run the identity verification suite");
  verify_cmd->add_option("--suite", suite, "gf, mellin, freeconv, density, psd or all")->capture_default_str();
  verify_cmd->add_option("--order", order, "Truncation order (>= 4)")->capture_default_str();
  verify_cmd->add_option("--tol", tol, "Tolerance for numeric checks")->capture_default_str();
  verify_cmd->add_flag("--json", json, "Print the JSON report");

  std::size_t size = 1024, trials = 5;
  std::uint64_t seed = 1;
  auto *rmt_cmd = app.add_subcommand("rmt", "Random-matrix spectra compared with the limit density");
  rmt_cmd->add_option("--measure", measure_text, "mu0, mu1, mu2 or mp:<t>")->required();
  rmt_cmd->add_option("--size", size, "Matrix size")->capture_default_str();
  rmt_cmd->add_option("--trials", trials, "Independent trials")->capture_default_str()->check(CLI::PositiveNumber);
  rmt_cmd->add_option("--seed", seed, "Base seed")->capture_default_str();
  rmt_cmd->add_option("--out", out_path, "Eigenvalue CSV (summary goes to <stem>.summary.json)")->required();

  std::vector<char const *> argv;
  for (auto const &a : args) { argv.push_back(a.c_str()); }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (CLI::ParseError const &e) {
    int const code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (moments_cmd->parsed()) {
      print_rationals(out, moments(parse_measure(measure_text), n).values, json);
    } else if (cumulants_cmd->parsed()) {
      print_rationals(out, moments_to_cumulants(moments(parse_measure(measure_text), n)).values, json);
    } else if (stransform_cmd->parsed()) {
      auto const s = s_transform(moments(parse_measure(measure_text), n + 1), n);
      print_rationals(out, s.coefficients(), json);
    } else if (boxplus_cmd->parsed() || boxtimes_cmd->parsed() || mellin_cmd->parsed()) {
      auto const a = moments(parse_measure(lhs_text), n);
      auto const b = moments(parse_measure(rhs_text), n);
      auto const r = boxplus_cmd->parsed() ? free_add_convolve(a, b)
                     : boxtimes_cmd->parsed() ? free_mult_convolve(a, b)
                                              : mellin_convolve(a, b);
      print_rationals(out, r.values, json);
    } else if (density_cmd->parsed()) {
      auto const f = density_for(parse_measure(measure_text));
      std::filesystem::path const path(out_path);
      auto csv = open_output(path);
      csv << "x,density\n";
      for (double x : density_grid(f, points)) { csv << fmt17(x) << ',' << fmt17(f(x)) << '\n'; }
      auto atoms = open_output(sibling(path, ".atoms.csv"));
      atoms << "location,mass\n";
      for (auto const &a : f.atoms) { atoms << fmt17(a.location) << ',' << fmt17(a.mass) << '\n'; }
      out << "wrote " << points << " points to " << path.string() << " and " << f.atoms.size() << " atoms to "
          << sibling(path, ".atoms.csv").string() << '\n';
    } else if (verify_cmd->parsed()) {
      auto const report = run_suite(parse_suite(suite), order, tol);
      if (json) {
        out << report.to_json() << '\n';
      } else {
        std::size_t width = 0;
        for (auto const &c : report.checks) { width = std::max(width, c.id.size()); }
        for (auto const &c : report.checks) {
          out << std::left << std::setw(static_cast<int>(width) + 2) << c.id << std::setw(7) << to_string(c.status)
              << c.deviation << '\n';
        }
        out << "overall: " << to_string(report.overall) << '\n';
      }
      return report.passed() ? 0 : 1;
    } else if (rmt_cmd->parsed()) {
      auto const experiment = experiment_for(measure_text);
      auto const summary = run_experiment(experiment, size, trials, seed);
      std::filesystem::path const path(out_path);
      auto csv = open_output(path);
      csv << "trial,index,eigenvalue\n";
      for (std::size_t t = 0; t < summary.samples.size(); ++t) {
        auto const &ev = summary.samples[t].eigenvalues;
        for (std::size_t i = 0; i < ev.size(); ++i) { csv << t << ',' << i << ',' << fmt17(ev[i]) << '\n'; }
      }
      auto const json_text = summary.to_json();
      open_output(sibling(path, ".summary.json")) << json_text << '\n';
      out << json_text << '\n';
    }
  } catch (Error const &e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

} // namespace freemoments
