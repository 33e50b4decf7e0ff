#include <doctest.h>

#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "dqca/cli.hpp"
#include "dqca/errors.hpp"
#include "dqca/io.hpp"
#include "dqca/spectral.hpp"

using namespace dqca;
namespace cli = dqca::cli;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string temp_path(const std::string& name) {
  return std::string("dqca_test_") + name;
}

int run_quiet(const cli::RunConfig& cfg, std::string* out_text = nullptr) {
  std::ostringstream out, err;
  const int code = cli::run(cfg, out, err);
  if (out_text) *out_text = out.str() + err.str();
  return code;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("seventeen digit floats round-trip") {
  std::mt19937_64 rng(113);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const double x = uni(rng) * std::pow(10.0, int(uni(rng) * 12));
    CHECK(std::strtod(format_float17(x).c_str(), nullptr) == x);
  }
  CHECK(format_float17(0.5) == "0.5");
}

TEST_CASE("csv schemas") {
  const auto curve = zeta_curve({0.0, 0.6, 1.0});
  const std::string csv = zeta_csv(curve);
  CHECK(csv.substr(0, 8) == "mu,zeta\n");
  // Row values survive the 17-digit round trip.
  const size_t line = csv.find('\n', csv.find('\n') + 1) + 1;
  const size_t comma = csv.find(',', line);
  CHECK(std::strtod(csv.c_str() + line, nullptr) == 0.6);
  CHECK(std::abs(std::strtod(csv.c_str() + comma + 1, nullptr) - 0.8) <=
        1e-12);
  CHECK(csv.find('\r') == std::string::npos);

  const auto params = params_from_mass_ratio(0.5, 8);
  const auto pts =
      dispersion(solve_gates(params), params, momentum_grid(params));
  CHECK(dispersion_csv(pts).substr(0, 15) == "k,E,vg,hnorm\n-1");

  std::vector<TrajectorySample> samples = {{0, 1.0, 1.0, 0.25}};
  CHECK(trajectory_csv(samples) ==
        "step,mean_x,norm,sigma3\n0,1,1,0.25\n");
}

TEST_CASE("json schemas parse and mirror the csv fields") {
  const auto curve = zeta_curve({0.0, 1.0});
  const auto parsed = nlohmann::json::parse(zeta_json(curve));
  CHECK(parsed["schema"] == "zeta_curve");
  REQUIRE(parsed["rows"].size() == 2);
  CHECK(parsed["rows"][0]["mu"] == 0.0);
  CHECK(parsed["rows"][0]["zeta"] == 1.0);
  CHECK(parsed["rows"][1]["zeta"] == 0.0);

  const auto params = params_from_mass_ratio(0.3, 4);
  const auto pts =
      dispersion(solve_gates(params), params, momentum_grid(params));
  const auto dj = nlohmann::json::parse(dispersion_json(pts));
  CHECK(dj["schema"] == "dispersion");
  CHECK(dj["rows"][0].contains("k"));
  CHECK(dj["rows"][0].contains("E"));
  CHECK(dj["rows"][0].contains("vg"));
  CHECK(dj["rows"][0].contains("hnorm"));

  std::vector<TrajectorySample> samples = {{2, 33.5, 1.0, -0.25}};
  const auto tj = nlohmann::json::parse(trajectory_json(samples));
  CHECK(tj["schema"] == "trajectory");
  CHECK(tj["rows"][0]["step"] == 2);
  CHECK(tj["rows"][0]["mean_x"] == 33.5);
  CHECK(tj["rows"][0]["sigma3"] == -0.25);
}

TEST_CASE("write failures carry the path") {
  CHECK_THROWS_WITH_AS(
      write_text_file("/nonexistent_dir_zz/x.csv", "data"),
      doctest::Contains("/nonexistent_dir_zz/x.csv"), IoError);
}

}  // TEST_SUITE

TEST_SUITE("cli") {

TEST_CASE("zeta-curve writes the documented file") {
  const std::string path = temp_path("zeta.csv");
  cli::RunConfig cfg;
  cfg.command = cli::Command::zeta_curve;
  cfg.samples = 101;
  cfg.out_path = path;
  CHECK(run_quiet(cfg) == cli::kExitOk);
  const std::string text = slurp(path);
  CHECK(text.substr(0, 8) == "mu,zeta\n");
  CHECK(text.find("\n0,1\n") != std::string::npos);
  CHECK(text.find("\n1,0\n") != std::string::npos);
  // 101 rows + header + trailing newline.
  CHECK(std::count(text.begin(), text.end(), '\n') == 102);
  std::remove(path.c_str());
}

TEST_CASE("identical flags produce identical bytes") {
  const std::string p1 = temp_path("d1.json"), p2 = temp_path("d2.json");
  cli::RunConfig cfg;
  cfg.command = cli::Command::dispersion;
  cfg.mu = 0.37;
  cfg.k_points = 64;
  cfg.format = cli::OutputFormat::json;
  cfg.out_path = p1;
  CHECK(run_quiet(cfg) == cli::kExitOk);
  cfg.out_path = p2;
  CHECK(run_quiet(cfg) == cli::kExitOk);
  CHECK(slurp(p1) == slurp(p2));
  std::remove(p1.c_str());
  std::remove(p2.c_str());
}

TEST_CASE("gates command status reflects the residuals") {
  cli::RunConfig cfg;
  cfg.command = cli::Command::gates;
  cfg.mu = 0.0;
  std::string text;
  CHECK(run_quiet(cfg, &text) == cli::kExitOk);
  CHECK(text.find("OK") != std::string::npos);
  // An impossible tolerance flips the exit code, not the output data
  // (mu = 0.5 leaves one-ulp unitarity residuals, nonzero by inspection).
  cfg.tolerance = 1e-30;
  cfg.mu = 0.5;
  CHECK(run_quiet(cfg) == cli::kExitCheckFailed);
}

TEST_CASE("parameter domain violations exit 2") {
  cli::RunConfig cfg;
  cfg.command = cli::Command::gates;
  cfg.mu = 1.5;
  CHECK(run_quiet(cfg) == cli::kExitParameter);
  cfg.command = cli::Command::evolve;
  cfg.mu = 0.5;
  cfg.cells = 1;
  CHECK(run_quiet(cfg) == cli::kExitParameter);
  cfg.command = cli::Command::pathsum_check;
  cfg.cells = 8;
  cfg.depth = 3;  // odd
  CHECK(run_quiet(cfg) == cli::kExitParameter);
  cfg.depth = 18;  // over budget
  CHECK(run_quiet(cfg) == cli::kExitParameter);
}

TEST_CASE("unwritable output exits 74") {
  cli::RunConfig cfg;
  cfg.command = cli::Command::zeta_curve;
  cfg.out_path = "/nonexistent_dir_zz/zeta.csv";
  CHECK(run_quiet(cfg) == cli::kExitIo);
}

TEST_CASE("pathsum check passes at documented sizes") {
  cli::RunConfig cfg;
  cfg.command = cli::Command::pathsum_check;
  cfg.mu = 0.37;
  cfg.cells = 8;
  cfg.depth = 4;
  cfg.draws = 5;
  std::string text;
  CHECK(run_quiet(cfg, &text) == cli::kExitOk);
  CHECK(text.find("path_vs_two_step") != std::string::npos);
}

TEST_CASE("manybody check emits the residual report") {
  const std::string path = temp_path("mb.json");
  cli::RunConfig cfg;
  cfg.command = cli::Command::manybody_check;
  cfg.mu = 0.5;
  cfg.q_cells = 2;
  cfg.out_path = path;
  CHECK(run_quiet(cfg) == cli::kExitOk);
  const auto parsed = nlohmann::json::parse(slurp(path));
  CHECK(parsed["schema"] == "manybody_report");
  CHECK(parsed["all_pass"] == true);
  CHECK(parsed["residuals"].contains("car"));
  CHECK(parsed["residuals"].contains("single_excitation_sector"));
  CHECK(parsed["pass"]["displacement_bose"] == true);
  for (auto& [name, value] : parsed["residuals"].items()) {
    CHECK(value.get<double>() <= parsed["tolerances"][name].get<double>());
  }
  std::remove(path.c_str());
}

TEST_CASE("pathsum audit dump is written and parseable") {
  const std::string path = temp_path("paths.json");
  cli::RunConfig cfg;
  cfg.command = cli::Command::pathsum_check;
  cfg.mu = 0.5;
  cfg.cells = 4;
  cfg.depth = 2;
  cfg.draws = 1;
  cfg.dump_paths_path = path;
  CHECK(run_quiet(cfg) == cli::kExitOk);
  const auto parsed = nlohmann::json::parse(slurp(path));
  REQUIRE(parsed.is_array());
  // 8 wires, 2^2 paths each.
  CHECK(parsed.size() == 32);
  CHECK(parsed[0].contains("wires"));
  CHECK(parsed[0].contains("re"));
  CHECK(parsed[0].contains("im"));
  std::remove(path.c_str());
}

TEST_CASE("manybody check fails loudly under an impossible tolerance") {
  cli::RunConfig cfg;
  cfg.command = cli::Command::manybody_check;
  cfg.mu = 0.5;
  cfg.q_cells = 2;
  cfg.tolerance = 1e-30;
  std::string text;
  CHECK(run_quiet(cfg, &text) == cli::kExitCheckFailed);
  CHECK(text.find("[FAIL]") != std::string::npos);
  cfg.q_cells = 7;  // over the dense budget
  CHECK(run_quiet(cfg) == cli::kExitParameter);
}

TEST_CASE("bound check detects a violated bound") {
  cli::RunConfig cfg;
  cfg.command = cli::Command::bound_check;
  cfg.mu = 0.3;
  cfg.k_points = 64;
  cfg.bound_n = 3;  // 1/(3 tau) sits below the saturated norm 1/(2 tau)
  CHECK(run_quiet(cfg) == cli::kExitCheckFailed);
}

TEST_CASE("bound check saturates with zero margin") {
  cli::RunConfig cfg;
  cfg.command = cli::Command::bound_check;
  cfg.mu = 0.3;
  cfg.k_points = 256;
  std::string text;
  CHECK(run_quiet(cfg, &text) == cli::kExitOk);
  CHECK(text.find("margin = 0\n") != std::string::npos);
}

TEST_CASE("evolve writes a trajectory and reports the drift") {
  const std::string path = temp_path("traj.csv");
  cli::RunConfig cfg;
  cfg.command = cli::Command::evolve;
  cfg.mu = 0.0;
  cfg.cells = 128;
  cfg.two_steps = 16;
  cfg.packet_sigma = 6.0;  // tails die well before the seam
  cfg.out_path = path;
  std::string text;
  CHECK(run_quiet(cfg, &text) == cli::kExitOk);
  CHECK(slurp(path).substr(0, 24) == "step,mean_x,norm,sigma3\n");
  const size_t at = text.find("drift speed = ");
  REQUIRE(at != std::string::npos);
  const double speed = std::strtod(text.c_str() + at + 14, nullptr);
  CHECK(std::abs(speed - 1.0) <= 1e-9);
  std::remove(path.c_str());
}

#ifdef DQCA_CLI_PATH
TEST_CASE("binary end to end") {
  const std::string bin = DQCA_CLI_PATH;
  CHECK(std::system((bin + " --help > /dev/null").c_str()) == 0);
  // Unknown subcommand: usage error 64.
  int status =
      std::system((bin + " frobnicate > /dev/null 2>&1").c_str());
  CHECK(WEXITSTATUS(status) == cli::kExitUsage);
  // Missing required flag: usage error 64.
  status = std::system((bin + " gates > /dev/null 2>&1").c_str());
  CHECK(WEXITSTATUS(status) == cli::kExitUsage);
  // Out-of-domain value: parameter error 2.
  status = std::system((bin + " gates --mu 2 > /dev/null 2>&1").c_str());
  CHECK(WEXITSTATUS(status) == cli::kExitParameter);
  const std::string path = temp_path("e2e.csv");
  status = std::system(
      (bin + " zeta-curve --samples 11 --out " + path + " > /dev/null")
          .c_str());
  CHECK(WEXITSTATUS(status) == cli::kExitOk);
  CHECK(slurp(path).substr(0, 8) == "mu,zeta\n");
  std::remove(path.c_str());
}
#endif

}  // TEST_SUITE
