#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hyppoisson {

// One named identity check.  pass <=> residual < tolerance (plus any
// boolean sub-assertions folded into pass; the note says which).
struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  double runtime_ms = 0.0;  // console diagnostics only, never in the report file
  std::string note;
};

struct VerifySettings {
  int n = 2;
  int grid_points = 256;
  std::map<std::string, double> tol_overrides;
  std::uint64_t seed = 0x9e3779b97f4a7c15ull;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  double c_n = 0.0;
  // Scalarity proportionality constants, keyed "twice_l=<2l>/kt=(p,q)".
  std::map<std::string, double> fitted_constants;
  std::map<std::string, std::string> adjudications;

  bool all_pass() const;
};

// Runs the full identity suite: takahashi, bateman, contiguous, rodrigues,
// kinvariance, elementary, scalarity, limit, remark, sandwich, inversion.
VerifyReport run_verification(const VerifySettings& settings);

// Deterministic JSON rendering of the report (fixed key order, no
// wall-clock fields), so identical configs produce byte-identical files.
std::string render_verify_report(const VerifyReport& report,
                                 const VerifySettings& settings);

}  // namespace hyppoisson
