#include <CLI11.hpp>

#include <iostream>

#include "holocert/pipeline.hpp"

int main(int argc, char** argv) {
  holocert::RunConfig cfg;
  CLI::App app{"Exact and numeric certification of holonomy rigidity for quadratic foliations"};
  app.require_subcommand(1, 1);

  const std::vector<std::pair<std::string, std::string>> commands{
      {"expand", "print the c_d, S_d table"},
      {"conditions", "print the obstruction polynomials F_3..F_dmax"},
      {"eliminate", "resultant chain and certificate, no numerics"},
      {"verify-numeric", "numeric holonomy checks"},
      {"certify", "exact certificate plus numeric checks"}};
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--params", cfg.params_path, "parameter file (JSON)")->required();
    sub->add_option("--out", cfg.out_path, "output file; standard output if omitted");
    sub->add_option("--dmax", cfg.dmax, "highest degree, at most 6");
    sub->add_option("--radius", cfg.radius, "loop radius around the punctures");
    sub->add_option("--rtol", cfg.rtol, "integrator relative tolerance");
    sub->add_option("--seed", cfg.seed, "seed for random samples");
    sub->add_flag("--skip-numeric", cfg.skip_numeric, "certify without the numeric section");
    sub->callback([&cfg, name = name] { cfg.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  return holocert::run(cfg, std::cerr);
}
