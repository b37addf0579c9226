#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ocucb/datafile.hpp"
#include "ocucb/policies.hpp"
#include "ocucb/simulation.hpp"

namespace ocucb {

std::string_view version();

/// Names accepted by --exp.
const std::vector<std::string>& experiment_names();

/// One benchmark invocation. Unset optionals fall back to the per-experiment
/// defaults listed in usage().
struct ExperimentSpec {
  std::string name;
  std::optional<std::uint64_t> horizon;
  std::optional<std::size_t> arms;
  std::vector<double> delta_grid;
  std::vector<std::uint64_t> horizon_grid;
  std::vector<std::size_t> arm_grid;
  std::vector<double> alphas;
  std::optional<double> psi;
  std::optional<std::size_t> runs;
  std::optional<double> epsilon_scale;
  std::uint64_t seed = 1;
  std::size_t threads = 1;
  std::vector<Algorithm> policies;
  Scheduler scheduler = Scheduler::Lazy;
  std::string out;      // empty: <name>.txt; "-": standard output
  std::string raw_out;  // optional per-episode regrets
};

/// Thrown by parse_flags for --help; what() is the help text.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string usage();

/// Parses argv (argv[0] is the program name). Throws UsageError for unknown
/// flags, malformed or out-of-range values and an empty command line.
ExperimentSpec parse_flags(int argc, const char* const* argv);

/// Fills every unset field with the experiment's default and checks the
/// result. Throws UsageError for inconsistent specs.
ExperimentSpec resolve_defaults(const ExperimentSpec& spec);

struct ExperimentOutput {
  DataTable table;
  std::optional<DataTable> raw;
  std::vector<std::string> warnings;
};

/// Runs the experiment; a human-readable summary goes to `summary` if given.
ExperimentOutput run_experiment(const ExperimentSpec& spec, std::ostream* summary = nullptr);

}  // namespace ocucb
