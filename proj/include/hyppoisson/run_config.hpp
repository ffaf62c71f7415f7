#pragma once

#include <map>
#include <optional>
#include <string>

namespace hyppoisson {

// Parsed command-line request.  Round-trips through JSON so runs are
// reproducible from the config echoed into reports.
struct RunConfig {
  enum class Command { spherical, gen_spherical, limit, hardy, invert, verify };

  Command command = Command::spherical;
  int n = 2;
  int twice_l = 0;
  double lambda_re = 0.0;
  double lambda_im = -2.0;  // i*lambda = -lambda_im + i lambda_re
  int p = 0;
  int q = 0;
  double r_min = 0.0;
  double r_max = 0.9;
  int r_steps = 10;
  double p_exp = 2.0;
  int grid_size = 256;
  std::map<std::string, double> tolerances;
  std::string output_path;  // empty: derived from the command name
  std::string format = "csv";

  static const char* command_name(Command c);
  static std::optional<Command> parse_command(const std::string& name);

  // Human-readable reason the config is invalid, or nullopt when fine.
  std::optional<std::string> validate() const;

  std::string to_json_string() const;
  static RunConfig from_json_string(const std::string& text);

  std::string default_output_path() const;
};

// Executes the request, writing the output file.  Returns the process exit
// code: 0 success / all checks pass, 1 verification failure, 2 invalid
// config, 3 numerical non-convergence.
int run_command(const RunConfig& config);

}  // namespace hyppoisson
