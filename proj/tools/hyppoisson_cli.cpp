// Command-line front end: tabulates the spherical functions, runs the Hardy
// norm / inversion diagnostics, and executes the verification suite.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hyppoisson/run_config.hpp"

namespace {

void add_common(CLI::App* cmd, hyppoisson::RunConfig& cfg) {
  cmd->add_option("--n", cfg.n, "Quaternionic dimension n >= 2");
  cmd->add_option("--twice-l", cfg.twice_l,
                  "Doubled K-type parameter 2l (integer >= 0)");
  cmd->add_option("--lambda-re", cfg.lambda_re, "Re(lambda)");
  cmd->add_option("--lambda-im", cfg.lambda_im,
                  "Im(lambda); Re(i*lambda) = -lambda_im, so the decaying "
                  "regime needs lambda-im < 0");
  cmd->add_option("--grid-size", cfg.grid_size,
                  "Quadrature nodes per dimension (env HYPPOISSON_GRID "
                  "overrides)");
  cmd->add_option("--output,-o", cfg.output_path, "Output file path");
  cmd->add_option("--format", cfg.format, "Output format: csv or json");
}

void add_rgrid(CLI::App* cmd, hyppoisson::RunConfig& cfg) {
  cmd->add_option("--r-min", cfg.r_min, "Smallest radial sample");
  cmd->add_option("--r-max", cfg.r_max, "Largest radial sample (< 1)");
  cmd->add_option("--r-steps", cfg.r_steps, "Number of radial samples");
}

void add_ktype(CLI::App* cmd, hyppoisson::RunConfig& cfg) {
  cmd->add_option("--p", cfg.p, "K-type index p");
  cmd->add_option("--q", cfg.q, "K-type index q (q - p even, q >= p)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "hyppoisson: spherical functions and Poisson-transform checks on the "
      "quaternionic hyperbolic ball.\n"
      "CSV schemas: spherical/gen-spherical -> r,re,im; "
      "limit -> r,scaled_re,scaled_im,extrapolated_re,extrapolated_im,"
      "closed_re,closed_im; hardy -> r,scaled_norm; "
      "invert -> r,coeff_ratio,l2_error; verify(csv) -> "
      "check,residual,tolerance,pass."};
  app.require_subcommand(1);

  hyppoisson::RunConfig cfg;
  std::vector<std::string> tol_args;

  auto* spherical = app.add_subcommand(
      "spherical", "Tabulate the elementary spherical function");
  add_common(spherical, cfg);
  add_rgrid(spherical, cfg);

  auto* gen = app.add_subcommand(
      "gen-spherical", "Tabulate the generalized spherical function for (p,q)");
  add_common(gen, cfg);
  add_rgrid(gen, cfg);
  add_ktype(gen, cfg);

  auto* limit = app.add_subcommand(
      "limit",
      "Extrapolate the scaled generalized spherical function along "
      "r = 0.9, 0.99, 0.999 and compare with C_l(lambda)");
  add_common(limit, cfg);
  add_ktype(limit, cfg);

  auto* hardy = app.add_subcommand(
      "hardy", "Scaled L^p boundary-norm profile of the transform of phi_{p,q}");
  add_common(hardy, cfg);
  add_rgrid(hardy, cfg);
  add_ktype(hardy, cfg);
  hardy->add_option("--p-exp", cfg.p_exp, "Norm exponent p >= 2");

  auto* invert = app.add_subcommand(
      "invert", "Inversion approximant coefficients and L2 error for phi_{p,q}");
  add_common(invert, cfg);
  add_rgrid(invert, cfg);
  add_ktype(invert, cfg);

  auto* verify = app.add_subcommand(
      "verify", "Run the full identity suite and write a pass/fail report "
                "(JSON by default)");
  add_common(verify, cfg);
  verify->add_option("--tol", tol_args,
                     "Tolerance override(s) as name=value, e.g. "
                     "--tol takahashi=1e-7");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (spherical->parsed()) cfg.command = hyppoisson::RunConfig::Command::spherical;
  if (gen->parsed()) cfg.command = hyppoisson::RunConfig::Command::gen_spherical;
  if (limit->parsed()) cfg.command = hyppoisson::RunConfig::Command::limit;
  if (hardy->parsed()) cfg.command = hyppoisson::RunConfig::Command::hardy;
  if (invert->parsed()) cfg.command = hyppoisson::RunConfig::Command::invert;
  if (verify->parsed()) {
    cfg.command = hyppoisson::RunConfig::Command::verify;
    // The machine-readable report is JSON unless a format was asked for.
    if (verify->count("--format") == 0) cfg.format = "json";
  }

  for (const auto& kv : tol_args) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == kv.size()) {
      std::cerr << "invalid --tol argument (want name=value): " << kv << "\n";
      return 2;
    }
    try {
      cfg.tolerances[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
    } catch (const std::exception&) {
      std::cerr << "invalid --tol value: " << kv << "\n";
      return 2;
    }
  }

  if (const char* env = std::getenv("HYPPOISSON_GRID")) {
    try {
      cfg.grid_size = std::stoi(env);
    } catch (const std::exception&) {
      std::cerr << "invalid HYPPOISSON_GRID value: " << env << "\n";
      return 2;
    }
  }

  try {
    return hyppoisson::run_command(cfg);
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 3;
  }
}
