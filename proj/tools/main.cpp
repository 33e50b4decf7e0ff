// Command-line front end: every experiment of the circuit suite behind one
// binary with reproducible, seedable data output.

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>

#include "dqca/cli.hpp"

namespace {

using dqca::cli::Command;
using dqca::cli::OutputFormat;
using dqca::cli::RunConfig;

void add_format_flag(CLI::App* cmd, RunConfig& cfg) {
  static const std::map<std::string, OutputFormat> map{
      {"csv", OutputFormat::csv}, {"json", OutputFormat::json}};
  cmd->add_option("--format", cfg.format, "Output format (csv or json)")
      ->transform(CLI::CheckedTransformer(map, CLI::ignore_case));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Homogeneous two-gate quantum circuit of the Dirac field: gate "
      "solving, dispersion, wavepacket evolution, and the path-sum and "
      "many-body verification oracles."};
  app.require_subcommand(1);

  RunConfig cfg;

  CLI::App* gates =
      app.add_subcommand("gates", "Solve the A/B gate pair and verify every "
                                  "algebraic identity on it");
  gates->add_option("--mu", cfg.mu, "Mass ratio in [0,1]")->required();
  gates->add_option("--out", cfg.out_path, "Residual table file");
  gates->add_option("--tolerance", cfg.tolerance, "Residual tolerance");
  add_format_flag(gates, cfg);

  CLI::App* zeta = app.add_subcommand(
      "zeta-curve", "Tabulate the vacuum refraction index zeta(mu)");
  zeta->add_option("--samples", cfg.samples, "Number of mu samples (>= 2)");
  zeta->add_option("--out", cfg.out_path, "Data file (default: stdout)");
  add_format_flag(zeta, cfg);

  CLI::App* disp = app.add_subcommand(
      "dispersion", "Sweep the Brillouin window: E(k), group velocity, "
                    "||H(k)||");
  disp->add_option("--mu", cfg.mu, "Mass ratio in [0,1]")->required();
  disp->add_option("--k-points", cfg.k_points, "Grid size (>= 2)");
  disp->add_option("--out", cfg.out_path, "Data file (default: stdout)");
  add_format_flag(disp, cfg);

  CLI::App* evolve = app.add_subcommand(
      "evolve", "Evolve a Gaussian wavepacket and record the trajectory");
  evolve->add_option("--mu", cfg.mu, "Mass ratio in [0,1]")->required();
  evolve->add_option("--cells", cfg.cells, "Ring size in cells");
  evolve->add_option("--two-steps", cfg.two_steps, "Number of two-steps");
  evolve->add_option("--center", cfg.packet_center, "Packet center cell");
  evolve->add_option("--sigma", cfg.packet_sigma,
                     "Packet width in cells (< cells/8)");
  evolve->add_option("--k0", cfg.packet_k0, "Packet carrier wavenumber");
  evolve->add_option("--mix-plus", cfg.mix_plus, "Right-mover weight");
  evolve->add_option("--mix-minus", cfg.mix_minus, "Left-mover weight");
  evolve->add_option("--out", cfg.out_path, "Data file (default: stdout)");
  add_format_flag(evolve, cfg);

  CLI::App* pathsum = app.add_subcommand(
      "pathsum-check",
      "Exhaustive path-sum evolution against the stepping kernel");
  pathsum->add_option("--mu", cfg.mu, "Mass ratio in [0,1]")->required();
  pathsum->add_option("--cells", cfg.cells, "Ring size (<= 32)");
  pathsum->add_option("--depth", cfg.depth, "Circuit rows (even, <= 16)");
  pathsum->add_option("--draws", cfg.draws, "Random states to compare");
  pathsum->add_option("--seed", cfg.seed, "RNG seed");
  pathsum->add_option("--tolerance", cfg.tolerance, "Residual tolerance");
  pathsum->add_option("--dump-paths", cfg.dump_paths_path,
                      "Write a JSON audit dump of all enumerated paths");

  CLI::App* manybody = app.add_subcommand(
      "manybody-check",
      "Dense Jordan-Wigner oracle: anticommutators, gate exponentials, "
      "conservation laws, single-excitation sector");
  manybody->add_option("--mu", cfg.mu, "Mass ratio in [0,1]")->required();
  manybody->add_option("--q-cells", cfg.q_cells, "Ring size in cells (<= 5)");
  manybody->add_option("--seed", cfg.seed, "RNG seed");
  manybody->add_option("--tolerance", cfg.tolerance,
                       "Override every per-check tolerance");
  manybody->add_option("--out", cfg.out_path, "JSON report file");

  CLI::App* bound = app.add_subcommand(
      "bound-check", "Simulability bound ||H|| <= 1/(n tau) over the grid");
  bound->add_option("--mu", cfg.mu, "Mass ratio in [0,1]")->required();
  bound->add_option("--k-points", cfg.k_points, "Grid size for the sweep");
  bound->add_option("--n", cfg.bound_n, "Time steps n in the bound");
  bound->add_option("--tolerance", cfg.tolerance, "Saturation tolerance");
  bound->add_option("--out", cfg.out_path, "Result file");
  add_format_flag(bound, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help() << std::flush;
    return dqca::cli::kExitUsage;
  }

  if (gates->parsed()) cfg.command = Command::gates;
  if (zeta->parsed()) cfg.command = Command::zeta_curve;
  if (disp->parsed()) cfg.command = Command::dispersion;
  if (evolve->parsed()) cfg.command = Command::evolve;
  if (pathsum->parsed()) cfg.command = Command::pathsum_check;
  if (manybody->parsed()) cfg.command = Command::manybody_check;
  if (bound->parsed()) cfg.command = Command::bound_check;

  return dqca::cli::run(cfg, std::cout, std::cerr);
}
