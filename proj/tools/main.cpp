#include <exception>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "emit.hpp"
#include "run_config.hpp"

using namespace jacspec;
using namespace jacspec::cli;

int main(int argc, char** argv) {
  CLI::App app{"spectral analysis of two-parameter Jacobi matrices "
               "b_n = n^a c_n, q_n = n^a on the critical coupling boundary"};
  app.require_subcommand(1);
  app.set_config("--config", "", "flat key=value config file");

  RunConfig cfg;
  app.add_option("--c1", cfg.c1, "off-diagonal modulation, odd indices")
      ->capture_default_str();
  app.add_option("--c2", cfg.c2, "off-diagonal modulation, even indices")
      ->capture_default_str();
  app.add_option("--alpha", cfg.alpha, "entry growth exponent, in (1/3, 1/2)")
      ->capture_default_str();
  app.add_option("--lo", cfg.lo, "window lower edge")->capture_default_str();
  app.add_option("--hi", cfg.hi, "window upper edge")->capture_default_str();
  app.add_option("--grid", cfg.grid, "lambda grid points in the window")
      ->capture_default_str();
  app.add_option("--a-plus", cfg.a_plus, "minorant offset, plus branch")
      ->capture_default_str();
  app.add_option("--a-minus", cfg.a_minus, "minorant offset, minus branch")
      ->capture_default_str();
  app.add_option("--b-minus", cfg.b_minus, "majorant offset, minus branch")
      ->capture_default_str();
  app.add_option("--b-plus", cfg.b_plus, "majorant offset, plus branch")
      ->capture_default_str();
  app.add_option("--n-start", cfg.n_start,
                 "construction start index override (0 = envelope scan)")
      ->capture_default_str();
  app.add_option("--s-cap", cfg.s_cap, "backward seed depth cap")
      ->capture_default_str();
  app.add_option("--K", cfg.K, "finite-section size")->capture_default_str();
  app.add_option("--n-max", cfg.n_max, "solution depth")->capture_default_str();
  app.add_option("--lambda", cfg.lambda, "spectral parameter for solve")
      ->capture_default_str();
  app.add_option("--kind", cfg.kind, "solve kind: first|forward|backward")
      ->check(CLI::IsMember({"first", "forward", "backward"}))
      ->capture_default_str();
  app.add_option("--f1", cfg.f1, "seed value (lower index)")->capture_default_str();
  app.add_option("--f2", cfg.f2, "seed value (upper index)")->capture_default_str();
  app.add_option("--m", cfg.m, "backward seed index (0 = n-max)")
      ->capture_default_str();
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", cfg.out, "output path (empty = stdout)")
      ->capture_default_str();

  auto* classify =
      app.add_subcommand("classify", "place (c1, c2) in the phase plane");
  double pc1 = 0.0, pc2 = 0.0;
  classify->add_option("c1", pc1, "first modulation parameter")->required();
  classify->add_option("c2", pc2, "second modulation parameter")->required();

  auto* expand = app.add_subcommand(
      "expand", "exact Poincare coefficients vs their large-n series");
  auto* kelley = app.add_subcommand(
      "kelley", "envelope validity, trapping and backward-limit certificates");
  auto* spectrum = app.add_subcommand(
      "spectrum", "eigenvalues by finite section and by shooting");
  auto* solve = app.add_subcommand("solve", "dump a recurrence solution");
  auto* defaults =
      app.add_subcommand("defaults", "print all defaults as key=value");

  // global flags may follow the subcommand name
  for (auto* sc : {classify, expand, kelley, spectrum, solve, defaults}) {
    sc->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    RunReport rep;
    if (classify->parsed()) {
      rep = run_classify(pc1, pc2);
    } else if (expand->parsed()) {
      rep = run_expand(cfg);
    } else if (kelley->parsed()) {
      rep = run_kelley(cfg);
    } else if (spectrum->parsed()) {
      rep = run_spectrum(cfg);
    } else if (solve->parsed()) {
      rep = run_solve(cfg);
    } else if (defaults->parsed()) {
      std::cout << app.config_to_str(true, false);
      return 0;
    }
    return write_report(rep, cfg);
  } catch (const validation_error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 1;
  } catch (const numeric_error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
