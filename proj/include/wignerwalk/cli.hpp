#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "wignerwalk/model.hpp"

namespace wignerwalk {

enum class Subcommand { Evolve, Longtime, Ensemble, Render, Verify };

struct RunConfig {
  Subcommand sub = Subcommand::Evolve;
  int n = 101;
  int source = -1;        // -1 resolves to n / 2
  DisorderKind kind = DisorderKind::None;
  double delta = 0.0;
  int realizations = -1;  // -1 resolves to 1000 (disordered) or 1 (clean)
  std::uint64_t seed = 1;
  std::vector<double> times;
  double eps_deg = 0.0;
  std::filesystem::path out_dir = ".";
  bool images = false;
  int zoom = 4;
  int threads = 0;
  bool force_delta = false;
  bool progress = false;
  // verify
  double t_max = 100.0;
  int samples = 200;
  // render
  std::filesystem::path input;
  std::filesystem::path output;
};

// Bad command line: caller should print the message and exit 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --help and friends: caller should print text and exit 0.
struct HelpRequested {
  std::string text;
};

RunConfig parse_args(const std::vector<std::string>& args);
RunConfig parse_args(int argc, const char* const* argv);

// Executes a parsed configuration. Returns 0 on success, 2 on runtime
// failure (after printing the reason to stderr). The verify subcommand
// returns 0 only if the interchange deviation is within tolerance.
int run(const RunConfig& config);

}  // namespace wignerwalk
