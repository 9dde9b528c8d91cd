#pragma once

// Runs the cmarr executable through the shell and captures stdout and the
// exit status. Commands run inside the sample configuration directory so the
// echoed file names in reports stay relative and the goldens stay portable.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cmarr::cli {

struct RunResult {
  std::string output;
  int exit_code = -1;
};

inline RunResult run(const std::string& args) {
  const std::string command = std::string("cd '") + CMARR_SAMPLES_DIR + "' && '" + CMARR_CLI_PATH +
                              "' " + args + " 2>/dev/null";
  FILE* pipe = ::popen(command.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed for: " + command);
  RunResult result;
  std::array<char, 4096> buffer{};
  std::size_t n;
  while ((n = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) result.output.append(buffer.data(), n);
  const int status = ::pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

struct GoldenCase {
  std::string name;
  std::string args;
  int exit_code;
};

inline const std::vector<GoldenCase>& golden_cases() {
  static const std::vector<GoldenCase> cases{
      {"build_t2_k4", "build --t 2 --k 4", 0},
      {"build_t2_k3", "build --t 2 --k 3", 0},
      {"invariants_t2_k4_oracle", "invariants --t 2 --k 4 --oracle", 0},
      {"invariants_t2_k5_modified", "invariants --t 2 --k 5 --modified", 0},
      {"lattice_t1_k3", "lattice --t 1 --k 3", 0},
      {"check_unit_square_t2", "check unit_square.json --t 2", 0},
      {"check_arithmetic_line_t2", "check arithmetic_line.json --t 2", 0},
      {"check_sidon_line_t2", "check sidon_line.json --t 2", 0},
      {"check_triple_collision_t3_modified", "check triple_collision.json --t 3 --modified", 0},
      {"check_single_point_t1", "check single_point.json --t 1", 0},
      {"stabilize_sidon_line_t2", "stabilize sidon_line.json --t 2", 0},
      {"stabilize_rational_triangle_t2", "stabilize rational_triangle.json --t 2", 0},
      {"theta_unit_square_t2", "theta unit_square.json --t 2", 0},
      {"verify_t2_k4", "verify --t 2 --k 4 --count 50 --seed 7", 0},
      {"sample_t2_k4_M", "sample --t 2 --k 4 --mode M --count 3 --seed 5", 0},
      {"census_grid_small_t2_k4", "census grid_small.json --t 2 --k 4", 0},
      {"error_missing_file", "check missing.json --t 2", 2},
      {"error_bad_k", "build --t 2 --k 0", 2},
      {"error_lattice_cap", "invariants --t 2 --k 5 --max-flats 10", 3},
  };
  return cases;
}

inline std::string golden_path(const std::string& name) {
  return std::string(CMARR_GOLDEN_DIR) + "/" + name + ".json";
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace cmarr::cli
