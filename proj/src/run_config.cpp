#include "hyppoisson/run_config.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <vector>

#include <json.hpp>

#include "hyppoisson/transform.hpp"
#include "hyppoisson/verify.hpp"

namespace hyppoisson {

namespace {

// Locale-independent shortest-faithful decimal with 17 significant digits.
std::string fmt17(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v,
                                 std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::vector<double> linspace(double lo, double hi, int steps) {
  std::vector<double> out;
  out.reserve(steps);
  if (steps == 1) {
    out.push_back(lo);
    return out;
  }
  const double step = (hi - lo) / (steps - 1);
  for (int i = 0; i < steps; ++i) out.push_back(lo + step * i);
  return out;
}

struct CsvWriter {
  std::ofstream out;
  explicit CsvWriter(const std::string& path) : out(path, std::ios::binary) {
    if (!out) throw Error("cannot open output file: " + path);
  }
  void header(const std::string& h) { out << h << "\n"; }
  void row(std::initializer_list<double> vals) {
    bool first = true;
    for (const double v : vals) {
      if (!first) out << ",";
      out << fmt17(v);
      first = false;
    }
    out << "\n";
  }
};

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open output file: " + path);
  out << text;
}

Complex lambda_of(const RunConfig& cfg) {
  return Complex(cfg.lambda_re, cfg.lambda_im);
}

nlohmann::ordered_json config_json(const RunConfig& cfg);

int run_spherical(const RunConfig& cfg, const std::string& path) {
  const SpectralParams params(cfg.n, cfg.twice_l, lambda_of(cfg));
  const auto rs = linspace(cfg.r_min, cfg.r_max, cfg.r_steps);
  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["command"] = "spherical";
    j["config"] = config_json(cfg);
    auto rows = nlohmann::ordered_json::array();
    for (const double r : rs) {
      const Complex v = elementary_spherical(params, r);
      rows.push_back({{"r", r}, {"re", v.real()}, {"im", v.imag()}});
    }
    j["rows"] = rows;
    write_text(path, j.dump(2) + "\n");
  } else {
    CsvWriter csv(path);
    csv.header("r,re,im");
    for (const double r : rs) {
      const Complex v = elementary_spherical(params, r);
      csv.row({r, v.real(), v.imag()});
    }
  }
  return 0;
}

int run_gen_spherical(const RunConfig& cfg, const std::string& path) {
  const SpectralParams params(cfg.n, cfg.twice_l, lambda_of(cfg));
  const KTypeIndex kt{cfg.p, cfg.q};
  const auto rs = linspace(cfg.r_min, cfg.r_max, cfg.r_steps);
  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["command"] = "gen-spherical";
    j["config"] = config_json(cfg);
    j["radial_exponent"] = kt.q;
    auto rows = nlohmann::ordered_json::array();
    for (const double r : rs) {
      const Complex v = generalized_spherical(params, kt, r);
      rows.push_back({{"r", r}, {"re", v.real()}, {"im", v.imag()}});
    }
    j["rows"] = rows;
    write_text(path, j.dump(2) + "\n");
  } else {
    CsvWriter csv(path);
    csv.header("r,re,im");
    for (const double r : rs) {
      const Complex v = generalized_spherical(params, kt, r);
      csv.row({r, v.real(), v.imag()});
    }
  }
  return 0;
}

int run_limit(const RunConfig& cfg, const std::string& path) {
  const SpectralParams params(cfg.n, cfg.twice_l, lambda_of(cfg));
  params.require_decay("limit");
  const KTypeIndex kt{cfg.p, cfg.q};
  kt.require_valid();
  const Complex ilam = params.i_lambda();
  const Complex scale_exp = -(2.0 * cfg.n + 1.0 - ilam) / 2.0;
  const double rs[] = {0.9, 0.99, 0.999};
  std::vector<std::pair<double, Complex>> samples;
  for (const double r : rs) {
    const double h = 1.0 - r * r;
    samples.emplace_back(h, std::exp(scale_exp * std::log(h)) *
                                generalized_spherical(params, kt, r));
  }
  const Complex extrapolated = extrapolate_to_limit(samples, ilam);
  const Complex closed = c_constant(params);
  const double residual =
      std::abs(extrapolated - closed) / std::max(1e-300, std::abs(closed));
  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["command"] = "limit";
    j["config"] = config_json(cfg);
    auto rows = nlohmann::ordered_json::array();
    for (const auto& [h, v] : samples) {
      rows.push_back({{"one_minus_r2", h},
                      {"scaled_re", v.real()},
                      {"scaled_im", v.imag()}});
    }
    j["rows"] = rows;
    j["extrapolated"] = {{"re", extrapolated.real()}, {"im", extrapolated.imag()}};
    j["closed_form"] = {{"re", closed.real()}, {"im", closed.imag()}};
    j["rel_residual"] = residual;
    write_text(path, j.dump(2) + "\n");
  } else {
    CsvWriter csv(path);
    csv.header("r,scaled_re,scaled_im,extrapolated_re,extrapolated_im,closed_re,closed_im");
    for (std::size_t i = 0; i < samples.size(); ++i) {
      csv.row({rs[i], samples[i].second.real(), samples[i].second.imag(),
               extrapolated.real(), extrapolated.imag(), closed.real(),
               closed.imag()});
    }
  }
  std::cout << "limit: |extrapolated - C_l|/|C_l| = " << fmt17(residual)
            << "\n";
  return 0;
}

int run_hardy(const RunConfig& cfg, const std::string& path) {
  const SpectralParams params(cfg.n, cfg.twice_l, lambda_of(cfg));
  const KTypeIndex kt{cfg.p, cfg.q};
  kt.require_valid();
  ZonalGrid grid = ZonalGrid::build(cfg.n, cfg.grid_size);
  normalize_measure(grid);
  const KFiniteFunction f = KFiniteFunction::single(kt);
  const auto rs = linspace(cfg.r_min, cfg.r_max, cfg.r_steps);
  const HardyNormResult result = hardy_norm(params, f, cfg.p_exp, rs, grid);
  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["command"] = "hardy";
    j["config"] = config_json(cfg);
    j["c_n"] = grid.c_n();
    auto rows = nlohmann::ordered_json::array();
    for (const auto& [r, v] : result.samples) {
      rows.push_back({{"r", r}, {"scaled_norm", v}});
    }
    j["rows"] = rows;
    j["value"] = result.value;
    j["argmax_r"] = result.argmax_r;
    write_text(path, j.dump(2) + "\n");
  } else {
    CsvWriter csv(path);
    csv.header("r,scaled_norm");
    for (const auto& [r, v] : result.samples) csv.row({r, v});
  }
  std::cout << "hardy: sup = " << fmt17(result.value)
            << " at r = " << fmt17(result.argmax_r) << "\n";
  return 0;
}

int run_invert(const RunConfig& cfg, const std::string& path) {
  const SpectralParams params(cfg.n, cfg.twice_l, lambda_of(cfg));
  const KTypeIndex kt{cfg.p, cfg.q};
  kt.require_valid();
  ZonalGrid grid = ZonalGrid::build(cfg.n, cfg.grid_size);
  normalize_measure(grid);
  const KFiniteFunction f = KFiniteFunction::single(kt);
  const double inv_c2 = 1.0 / std::norm(c_constant(params));
  const auto rs = linspace(cfg.r_min, cfg.r_max, cfg.r_steps);
  std::vector<std::array<double, 3>> rows;
  for (const double r : rs) {
    const KFiniteFunction gr = inversion_approx(params, f, r).scaled(inv_c2);
    const double ratio = gr.terms[0].second.real();
    rows.push_back({r, ratio, kfinite_l2_distance(gr, f, cfg.n, grid)});
  }
  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["command"] = "invert";
    j["config"] = config_json(cfg);
    j["c_n"] = grid.c_n();
    auto jr = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
      jr.push_back({{"r", row[0]}, {"coeff_ratio", row[1]}, {"l2_error", row[2]}});
    }
    j["rows"] = jr;
    write_text(path, j.dump(2) + "\n");
  } else {
    CsvWriter csv(path);
    csv.header("r,coeff_ratio,l2_error");
    for (const auto& row : rows) csv.row({row[0], row[1], row[2]});
  }
  return 0;
}

int run_verify(const RunConfig& cfg, const std::string& path) {
  VerifySettings settings;
  settings.n = cfg.n;
  settings.grid_points = cfg.grid_size;
  settings.tol_overrides = cfg.tolerances;
  const VerifyReport report = run_verification(settings);
  if (cfg.format == "csv") {
    CsvWriter csv(path);
    csv.header("check,residual,tolerance,pass");
    for (const auto& c : report.checks) {
      csv.out << c.name << "," << fmt17(c.residual) << ","
              << fmt17(c.tolerance) << "," << (c.pass ? 1 : 0) << "\n";
    }
  } else {
    write_text(path, render_verify_report(report, settings));
  }
  for (const auto& c : report.checks) {
    std::printf("%-12s %-4s residual=%-12.4g tol=%-8.2g (%.0f ms)\n",
                c.name.c_str(), c.pass ? "PASS" : "FAIL", c.residual,
                c.tolerance, c.runtime_ms);
  }
  std::cout << (report.all_pass() ? "verify: all checks passed"
                                  : "verify: FAILURES present")
            << "\n";
  return report.all_pass() ? 0 : 1;
}

nlohmann::ordered_json config_json(const RunConfig& cfg) {
  nlohmann::ordered_json j;
  j["command"] = RunConfig::command_name(cfg.command);
  j["n"] = cfg.n;
  j["twice_l"] = cfg.twice_l;
  j["lambda_re"] = cfg.lambda_re;
  j["lambda_im"] = cfg.lambda_im;
  j["p"] = cfg.p;
  j["q"] = cfg.q;
  j["r_min"] = cfg.r_min;
  j["r_max"] = cfg.r_max;
  j["r_steps"] = cfg.r_steps;
  j["p_exp"] = cfg.p_exp;
  j["grid_size"] = cfg.grid_size;
  j["tolerances"] = cfg.tolerances;
  j["output_path"] = cfg.output_path;
  j["format"] = cfg.format;
  return j;
}

}  // namespace

const char* RunConfig::command_name(Command c) {
  switch (c) {
    case Command::spherical: return "spherical";
    case Command::gen_spherical: return "gen-spherical";
    case Command::limit: return "limit";
    case Command::hardy: return "hardy";
    case Command::invert: return "invert";
    case Command::verify: return "verify";
  }
  return "unknown";
}

std::optional<RunConfig::Command> RunConfig::parse_command(
    const std::string& name) {
  for (const Command c :
       {Command::spherical, Command::gen_spherical, Command::limit,
        Command::hardy, Command::invert, Command::verify}) {
    if (name == command_name(c)) return c;
  }
  return std::nullopt;
}

std::optional<std::string> RunConfig::validate() const {
  if (n < 2) return "n must be >= 2";
  if (twice_l < 0) return "twice-l must be >= 0";
  if (!(r_min >= 0.0 && r_min <= r_max && r_max < 1.0)) {
    return "r grid must satisfy 0 <= r_min <= r_max < 1";
  }
  if (r_steps < 1) return "r-steps must be >= 1";
  if (grid_size < 2 || grid_size > 2048) return "grid-size must be in [2, 2048]";
  if (format != "csv" && format != "json") return "format must be csv or json";
  const bool needs_ktype = command == Command::gen_spherical ||
                           command == Command::limit ||
                           command == Command::hardy ||
                           command == Command::invert;
  if (needs_ktype && !KTypeIndex{p, q}.valid()) {
    return "(p, q) must satisfy q - p in 2N";
  }
  const bool needs_decay = command == Command::limit ||
                           command == Command::hardy ||
                           command == Command::invert;
  if (needs_decay && !(-lambda_im > 0.0)) {
    return "command requires Re(i*lambda) = -lambda_im > 0";
  }
  if (command == Command::hardy && p_exp < 2.0) return "p-exp must be >= 2";
  return std::nullopt;
}

std::string RunConfig::to_json_string() const {
  return config_json(*this).dump(2) + "\n";
}

RunConfig RunConfig::from_json_string(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  RunConfig cfg;
  const auto cmd = parse_command(j.at("command").get<std::string>());
  if (!cmd) throw DomainError("RunConfig: unknown command in JSON");
  cfg.command = *cmd;
  cfg.n = j.at("n").get<int>();
  cfg.twice_l = j.at("twice_l").get<int>();
  cfg.lambda_re = j.at("lambda_re").get<double>();
  cfg.lambda_im = j.at("lambda_im").get<double>();
  cfg.p = j.at("p").get<int>();
  cfg.q = j.at("q").get<int>();
  cfg.r_min = j.at("r_min").get<double>();
  cfg.r_max = j.at("r_max").get<double>();
  cfg.r_steps = j.at("r_steps").get<int>();
  cfg.p_exp = j.at("p_exp").get<double>();
  cfg.grid_size = j.at("grid_size").get<int>();
  cfg.tolerances = j.at("tolerances").get<std::map<std::string, double>>();
  cfg.output_path = j.at("output_path").get<std::string>();
  cfg.format = j.at("format").get<std::string>();
  return cfg;
}

std::string RunConfig::default_output_path() const {
  std::string stem = command_name(command);
  for (auto& ch : stem) {
    if (ch == '-') ch = '_';
  }
  return stem + "_out." + (format == "json" ? "json" : "csv");
}

int run_command(const RunConfig& config) {
  if (const auto problem = config.validate()) {
    std::cerr << "invalid config: " << *problem << "\n";
    return 2;
  }
  const std::string path =
      config.output_path.empty() ? config.default_output_path()
                                 : config.output_path;
  // The canonical regime has lambda_im < 0; echo the derived quantity so the
  // sign convention cannot be misread.
  std::cout << "Re(i*lambda) = " << fmt17(-config.lambda_im) << "\n";
  try {
    switch (config.command) {
      case RunConfig::Command::spherical: return run_spherical(config, path);
      case RunConfig::Command::gen_spherical:
        return run_gen_spherical(config, path);
      case RunConfig::Command::limit: return run_limit(config, path);
      case RunConfig::Command::hardy: return run_hardy(config, path);
      case RunConfig::Command::invert: return run_invert(config, path);
      case RunConfig::Command::verify: return run_verify(config, path);
    }
  } catch (const NoConvergence& e) {
    std::cerr << "non-convergence: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace hyppoisson
