#pragma once

#include <map>
#include <string>
#include <vector>

#include "wirebarrier/errors.hpp"

namespace wirebarrier {

inline constexpr const char* kSolverVersion = "wirebarrier 1.0.0";

/// One [scenario] section of a config file: flat typed key-value pairs.
struct Scenario {
  std::string kind;
  std::map<std::string, std::string> keys;  // normalized key -> value text
  int line = 0;                             // section start, for diagnostics

  double get_double(const std::string& k, double def) const;
  double require_double(const std::string& k) const;
  int get_int(const std::string& k, int def) const;
  bool get_bool(const std::string& k, bool def) const;
  std::string get_string(const std::string& k, const std::string& def) const;
};

struct Config {
  std::vector<Scenario> scenarios;
};

struct RunOptions {
  std::string out_dir = ".";
  double seed_tolerance = 1e-9;
  int jobs = 1;
};

/// Parses a config file; throws ConfigError with line/field diagnostics.
Config parse_config(const std::string& path);
Config parse_config_text(const std::string& text, const std::string& name = "<string>");

/// Runs every scenario in order; one output file per scenario; returns the
/// list of files written. Output is byte-identical for identical inputs.
std::vector<std::string> run_config(const Config& cfg, const RunOptions& opt);

/// Bundled golden scenario configs, one per figure-level claim.
const std::map<std::string, std::string>& golden_configs();

/// Writes and runs every golden config under out_dir/<name>/.
std::vector<std::string> run_goldens(const std::string& out_dir, int jobs = 1);

}  // namespace wirebarrier
