#pragma once

#include <string>

#include <json.hpp>

#include "holocert/elimination.hpp"
#include "holocert/holonomy.hpp"

namespace holocert {

/// Invalid command-line or configuration value.
class ConfigError : public Error {
 public:
  using Error::Error;
};

struct RunConfig {
  std::string command;
  std::string params_path;
  std::string out_path;  ///< empty: standard output
  int dmax = kMaxDegree;
  double radius = 0.5;
  double rtol = 1e-10;
  unsigned seed = 1;
  bool skip_numeric = false;

  /// Throws ConfigError for out-of-range knobs or an unknown command.
  void validate() const;
  NumericConfig numeric() const;
};

/// Reads a parameter file; ParseError messages carry the path.
FoliationParams load_params(const std::string& path);

/// c_d and S_d for d = 1..dmax.
nlohmann::json expand_report(const FoliationParams& p, int dmax);
/// F_3..F_dmax in canonical text, symbolic in beta.
nlohmann::json conditions_report(const FoliationParams& p, int dmax);

/// Nearby alpha drawn from `seed`, used as the non-conjugacy probe.
FoliationParams alternative_point(const FoliationParams& p, unsigned seed);

/// Exact certificate, plus the numeric section unless skipped.
Certificate run_certify(const FoliationParams& p, const RunConfig& cfg, bool numeric);

/// 0 iff the verdict is UNIQUE and every recorded numeric check passed, else 1.
int exit_status(const Certificate& c);
int exit_status(const NumericReport& r);

/// Sorted keys, two-space indent, trailing newline.
std::string canonical_dump(const nlohmann::json& j);
/// Writes to `path`, or standard output when empty; Error with path context on failure.
void emit(const nlohmann::json& j, const std::string& path);

/// Runs one command; diagnostics go to `err`.  Returns the process exit status.
int run(const RunConfig& cfg, std::ostream& err);

}  // namespace holocert
