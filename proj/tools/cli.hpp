#pragma once

#include <exception>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace salpeter::cli {

enum class Command { one_body, pfunction, bounds, figure1, figure2, figure3, verify };

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNumerical = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  Command command = Command::one_body;
  std::vector<double> mass_grid;  ///< empty selects the command default
  int n_min = 2;
  int n_max = 8;
  double gamma = 1.0;
  double tol = 1e-8;
  std::string output_path;  ///< empty writes to stdout
  bool subtract_rest_mass = false;

  void validate() const;
};

Command parse_command(const std::string& name);
std::string command_name(Command command);

/// "5", "0,0.5,1" or "start:stop:count:spacing" with spacing linear|log.
std::vector<double> parse_mass_grid(const std::string& text);
/// "3" or "2:8".
std::pair<int, int> parse_n_range(const std::string& text);

/// Default figure grid: 101 linear points on [0, 10].
std::vector<double> default_mass_grid();

/// %.9g
std::string format_number(double value);

/// Maps a failure raised while computing to an exit status: solver
/// non-convergence and internal inconsistencies give kExitNumerical, bad
/// arguments give kExitUsage. Writes a one-line diagnostic to err.
int exit_status_for(std::exception_ptr failure, std::ostream& err);

/// Executes the command, writing its report or CSV to out. Returns the exit
/// status; diagnostics go to err.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command line: subcommand plus flags, with an optional JSON config
/// (--config PATH) whose keys mirror RunConfig; flags take precedence.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace salpeter::cli
