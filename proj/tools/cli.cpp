#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "salpeter/bounds.hpp"
#include "salpeter/oracle.hpp"
#include "salpeter/pfunction.hpp"
#include "salpeter/radial_eigensolver.hpp"
#include "verify.hpp"

namespace salpeter::cli {

namespace {

constexpr const char* kCommandNames[] = {"one-body", "pfunction", "bounds", "figure1", "figure2", "figure3", "verify"};

double parse_double(const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw UsageError("not a number: '" + text + "'");
  }
  if (used != text.size()) throw UsageError("not a number: '" + text + "'");
  return v;
}

int parse_int(const std::string& text) {
  const double v = parse_double(text);
  if (v != std::floor(v) || std::abs(v) > 1e6) throw UsageError("not an integer: '" + text + "'");
  return static_cast<int>(v);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) parts.push_back(part);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

// Evaluates f(i) for i in [0, count) on worker threads; results land in index
// order, so output does not depend on scheduling.
template <class T>
std::vector<T> parallel_map(std::size_t count, const std::function<T(std::size_t)>& f) {
  std::vector<T> results(count);
  const std::size_t workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 16);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        results[i] = f(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

struct BoundRow {
  double lower = 0.0;
  double upper = 0.0;
};

void write_one_body(const RunConfig& c, std::ostream& out) {
  const std::vector<double> masses = c.mass_grid.empty() ? std::vector<double>{0.0} : c.mass_grid;
  for (double m : masses) {
    const double e = e_of_m(m, c.tol);
    const double p = p_of_m(m, c.tol);
    out << "e(" << format_number(m) << ")=" << format_number(e) << '\n';
    out << "P(" << format_number(m) << ")=" << format_number(p) << '\n';
  }
}

void write_pfunction(const RunConfig& c, std::ostream& out) {
  const std::vector<double> masses = c.mass_grid.empty() ? default_mass_grid() : c.mass_grid;
  const auto excess = parallel_map<double>(masses.size(), [&](std::size_t i) {
    return default_energy_table().excess(masses[i], c.tol);
  });
  out << "m,e,e_minus_m,P\n";
  for (std::size_t i = 0; i < masses.size(); ++i) {
    out << format_number(masses[i]) << ',' << format_number(masses[i] + excess[i]) << ',' << format_number(excess[i])
        << ',' << format_number(p_from_excess(masses[i], excess[i])) << '\n';
  }
}

void write_bounds(const RunConfig& c, std::ostream& out) {
  const std::vector<double> masses = c.mass_grid.empty() ? std::vector<double>{0.0} : c.mass_grid;
  for (int n = c.n_min; n <= c.n_max; ++n) {
    for (double m : masses) {
      const SystemSpec sys{n, m, c.gamma};
      const EnergyBounds b = bounds_pair(sys, c.tol);
      const double shift = c.subtract_rest_mass ? n * m : 0.0;
      out << "N=" << n << " m=" << format_number(m) << " gamma=" << format_number(c.gamma)
          << " mu=" << format_number(b.mu) << " P_lower=" << format_number(b.p_lower)
          << " lower=" << format_number(b.lower - shift) << " upper=" << format_number(b.upper - shift) << '\n';
    }
  }
}

void write_figure1(const RunConfig& c, std::ostream& out) {
  const std::vector<double> masses = c.mass_grid.empty() ? default_mass_grid() : c.mass_grid;
  const auto excess = parallel_map<double>(masses.size(), [&](std::size_t i) {
    return default_energy_table().excess(masses[i], c.tol);
  });
  out << "m,e_minus_m,P\n";
  for (std::size_t i = 0; i < masses.size(); ++i) {
    out << format_number(masses[i]) << ',' << format_number(excess[i]) << ','
        << format_number(p_from_excess(masses[i], excess[i])) << '\n';
  }
}

// Rows run over N (outer) and m (inner).
void write_bound_figure(const RunConfig& c, bool running, std::ostream& out) {
  const std::vector<double> masses = c.mass_grid.empty() ? default_mass_grid() : c.mass_grid;
  const auto curves = static_cast<std::size_t>(c.n_max - c.n_min + 1);
  const double p_const = running ? 0.0 : p_of_m(0.0, c.tol);

  const auto rows = parallel_map<BoundRow>(curves * masses.size(), [&](std::size_t i) {
    const SystemSpec sys{c.n_min + static_cast<int>(i / masses.size()), masses[i % masses.size()], c.gamma};
    BoundRow row;
    row.upper = upper_bound(sys);
    if (running) {
      row.lower = bounds_pair(sys, c.tol).lower;
    } else {
      row.lower = bound_formula(sys, p_const);
      if (row.lower > row.upper) throw InternalConsistencyError("constant-P lower bound exceeds upper bound");
    }
    return row;
  });

  out << (running ? "m,N,E_lower_running,E_upper\n" : "m,N,E_lower_const,E_upper\n");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const int n = c.n_min + static_cast<int>(i / masses.size());
    const double m = masses[i % masses.size()];
    const double shift = c.subtract_rest_mass ? n * m : 0.0;
    out << format_number(m) << ',' << n << ',' << format_number(rows[i].lower - shift) << ','
        << format_number(rows[i].upper - shift) << '\n';
  }
}

int write_verification(const RunConfig& c, std::ostream& out) {
  const std::vector<CheckResult> checks = run_verification(c.tol);
  bool all = true;
  for (const auto& check : checks) {
    all = all && check.passed;
    out << (check.passed ? "PASS " : "FAIL ") << check.name << "  observed=" << format_number(check.observed)
        << " tolerance=" << format_number(check.tolerance);
    if (!check.detail.empty()) out << "  (" << check.detail << ')';
    out << '\n';
  }
  out << (all ? "all checks passed" : "verification FAILED") << '\n';
  return all ? kExitSuccess : kExitNumerical;
}

void apply_json(const nlohmann::json& j, RunConfig& c) {
  if (!j.is_object()) throw UsageError("config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    try {
      if (key == "command") {
        c.command = parse_command(value.get<std::string>());
      } else if (key == "mass_grid") {
        if (value.is_array()) {
          c.mass_grid = value.get<std::vector<double>>();
        } else if (value.is_number()) {
          c.mass_grid = {value.get<double>()};
        } else {
          c.mass_grid = parse_mass_grid(value.get<std::string>());
        }
      } else if (key == "N_range") {
        if (value.is_array() && value.size() == 2) {
          c.n_min = value[0].get<int>();
          c.n_max = value[1].get<int>();
        } else if (value.is_number_integer()) {
          c.n_min = c.n_max = value.get<int>();
        } else {
          std::tie(c.n_min, c.n_max) = parse_n_range(value.get<std::string>());
        }
      } else if (key == "gamma") {
        c.gamma = value.get<double>();
      } else if (key == "tol") {
        c.tol = value.get<double>();
      } else if (key == "output_path") {
        c.output_path = value.get<std::string>();
      } else if (key == "subtract_rest_mass") {
        c.subtract_rest_mass = value.get<bool>();
      } else {
        throw UsageError("unknown config key '" + key + "'");
      }
    } catch (const nlohmann::json::exception& e) {
      throw UsageError("config key '" + key + "': " + e.what());
    }
  }
}

}  // namespace

void RunConfig::validate() const {
  if (n_min < 2 || n_max < n_min) throw UsageError("N range must satisfy 2 <= N_min <= N_max");
  if (!(gamma > 0.0) || !std::isfinite(gamma)) throw UsageError("gamma must be positive");
  if (!(tol >= 1e-12)) throw UsageError("tol must be >= 1e-12");
  for (double m : mass_grid)
    if (!(m >= 0.0) || !std::isfinite(m)) throw UsageError("masses must be finite and non-negative");
}

Command parse_command(const std::string& name) {
  for (std::size_t i = 0; i < std::size(kCommandNames); ++i)
    if (name == kCommandNames[i]) return static_cast<Command>(i);
  throw UsageError("unknown command '" + name + "'");
}

std::string command_name(Command command) { return kCommandNames[static_cast<std::size_t>(command)]; }

std::vector<double> parse_mass_grid(const std::string& text) {
  if (text.empty()) throw UsageError("empty mass grid");
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 4) throw UsageError("mass grid must be start:stop:count:spacing");
    const double start = parse_double(parts[0]);
    const double stop = parse_double(parts[1]);
    const int count = parse_int(parts[2]);
    if (count < 1) throw UsageError("mass grid count must be >= 1");
    if (count == 1) return {start};
    std::vector<double> grid(count);
    if (parts[3] == "linear") {
      for (int i = 0; i < count; ++i) grid[i] = start + (stop - start) * i / (count - 1);
    } else if (parts[3] == "log") {
      if (!(start > 0.0) || !(stop > 0.0)) throw UsageError("log mass grid needs positive endpoints");
      const double a = std::log(start);
      const double b = std::log(stop);
      for (int i = 0; i < count; ++i) grid[i] = std::exp(a + (b - a) * i / (count - 1));
      grid.front() = start;
      grid.back() = stop;
    } else {
      throw UsageError("mass grid spacing must be 'linear' or 'log'");
    }
    return grid;
  }
  std::vector<double> grid;
  for (const auto& part : split(text, ',')) grid.push_back(parse_double(part));
  return grid;
}

std::pair<int, int> parse_n_range(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() == 1) {
    const int n = parse_int(parts[0]);
    return {n, n};
  }
  if (parts.size() != 2) throw UsageError("N range must be 'N' or 'Nmin:Nmax'");
  return {parse_int(parts[0]), parse_int(parts[1])};
}

std::vector<double> default_mass_grid() { return parse_mass_grid("0:10:101:linear"); }

std::string format_number(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.9g", value);
  return buffer;
}

int exit_status_for(std::exception_ptr failure, std::ostream& err) {
  try {
    std::rethrow_exception(failure);
  } catch (const ConvergenceError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (...) {
    err << "numerical failure: unknown exception\n";
    return kExitNumerical;
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    config.validate();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::ofstream file;
  if (!config.output_path.empty()) {
    file.open(config.output_path, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "error: cannot write to '" << config.output_path << "'\n";
      return kExitUsage;
    }
  }
  std::ostream& sink = config.output_path.empty() ? out : file;

  int status = kExitSuccess;
  std::ostringstream buffer;
  try {
    switch (config.command) {
      case Command::one_body: write_one_body(config, buffer); break;
      case Command::pfunction: write_pfunction(config, buffer); break;
      case Command::bounds: write_bounds(config, buffer); break;
      case Command::figure1: write_figure1(config, buffer); break;
      case Command::figure2: write_bound_figure(config, false, buffer); break;
      case Command::figure3: write_bound_figure(config, true, buffer); break;
      case Command::verify: status = write_verification(config, buffer); break;
    }
  } catch (...) {
    return exit_status_for(std::current_exception(), err);
  }

  sink << buffer.str();
  sink.flush();
  if (!sink) {
    err << "error: failed writing output\n";
    return kExitUsage;
  }
  return status;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Energy bounds for N relativistic bosons with oscillator pair potentials"};
  app.require_subcommand(0, 1);

  std::string config_path;
  std::string mass;
  std::string mass_grid;
  std::string n_range;
  double gamma = 1.0;
  double tol = 1e-8;
  std::string output_path;
  bool subtract = false;

  app.add_option("--config", config_path, "JSON config file (keys mirror the flag names)");
  auto* mass_opt = app.add_option("--mass", mass, "Mass value or comma-separated list");
  auto* grid_opt = app.add_option("--mass-grid", mass_grid, "Mass grid start:stop:count:linear|log");
  auto* n_opt = app.add_option("-N,--N", n_range, "Particle number N or range Nmin:Nmax (default 2:8)");
  auto* gamma_opt = app.add_option("--gamma", gamma, "Pair coupling gamma (default 1)");
  auto* tol_opt = app.add_option("--tol", tol, "Relative tolerance for e(m) (default 1e-8)");
  auto* out_opt = app.add_option("-o,--out", output_path, "Output file (default stdout)");
  auto* sub_opt = app.add_flag("--subtract-rest-mass", subtract, "Report E - N m");
  mass_opt->excludes(grid_opt);

  const char* descriptions[] = {
      "One-body energy e(m) and P(m)",
      "CSV of e(m) and P(m) over a mass grid",
      "Lower and upper N-body bounds",
      "CSV m,e_minus_m,P over the mass grid",
      "CSV of bounds with constant P(0) and P = 3/2",
      "CSV of bounds with running P(mu) and P = 3/2",
      "Run the cross-validation suite",
  };
  for (std::size_t i = 0; i < std::size(kCommandNames); ++i)
    app.add_subcommand(kCommandNames[i], descriptions[i])->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitSuccess : kExitUsage;
  }

  RunConfig config;
  bool have_command = false;
  try {
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw UsageError("cannot read config '" + config_path + "'");
      nlohmann::json j;
      try {
        in >> j;
      } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("invalid JSON config: ") + e.what());
      }
      apply_json(j, config);
      have_command = j.contains("command");
    }
    if (!app.get_subcommands().empty()) {
      config.command = parse_command(app.get_subcommands().front()->get_name());
      have_command = true;
    }
    if (!have_command) throw UsageError("no command given");
    if (mass_opt->count() > 0) config.mass_grid = parse_mass_grid(mass);
    if (grid_opt->count() > 0) config.mass_grid = parse_mass_grid(mass_grid);
    if (n_opt->count() > 0) std::tie(config.n_min, config.n_max) = parse_n_range(n_range);
    if (gamma_opt->count() > 0) config.gamma = gamma;
    if (tol_opt->count() > 0) config.tol = tol;
    if (out_opt->count() > 0) config.output_path = output_path;
    if (sub_opt->count() > 0) config.subtract_rest_mass = subtract;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }
  return run(config, out, err);
}

}  // namespace salpeter::cli
