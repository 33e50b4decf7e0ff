#ifndef DQCA_CLI_HPP
#define DQCA_CLI_HPP

#include <iosfwd>
#include <string>

namespace dqca::cli {

enum class Command {
  gates,
  zeta_curve,
  dispersion,
  evolve,
  pathsum_check,
  manybody_check,
  bound_check,
};

enum class OutputFormat { csv, json };

/// Exit statuses shared by run() and the binary.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParameter = 2;
inline constexpr int kExitCheckFailed = 3;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitIo = 74;

/// Everything a single invocation needs. Fields are validated against the
/// library domains before dispatch; violations exit with kExitParameter.
struct RunConfig {
  Command command = Command::gates;
  double mu = 0.0;
  int cells = 64;
  int two_steps = 100;
  double packet_center = -1.0;  // < 0: default cells/2
  double packet_sigma = -1.0;   // < 0: default cells/10
  double packet_k0 = 0.0;
  double mix_plus = 1.0;
  double mix_minus = 0.0;
  int k_points = 1024;
  int samples = 101;      // zeta-curve
  int depth = 8;          // pathsum-check, in rows
  int draws = 20;         // pathsum-check random states
  int q_cells = 3;        // manybody-check ring size
  int bound_n = 2;        // bound-check time steps n
  unsigned long seed = 0;
  double tolerance = -1.0;  // < 0: per-command default
  std::string out_path;     // empty: write data to stdout
  std::string dump_paths_path;  // pathsum-check audit dump
  OutputFormat format = OutputFormat::csv;
};

/// Execute one command. Data files go to `config.out_path` (or stdout when
/// empty), human-readable summaries to `out`, diagnostics to `err`.
/// Deterministic for fixed flags and seed.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace dqca::cli

#endif
