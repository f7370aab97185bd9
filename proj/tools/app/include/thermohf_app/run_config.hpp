#pragma once

#include <cstddef>
#include <istream>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "thermohf/ising.hpp"
#include "thermohf/numdiff.hpp"
#include "thermohf/sweep.hpp"

namespace thermohf::app {

/// Bad flags, config-file entries or parameter values (exit code 2).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ModelKind { ho, ising, lipkin };
enum class OutputFormat { csv, json };

std::string_view to_string(ModelKind kind);
std::string_view to_string(OutputFormat format);
ModelKind parse_model(std::string_view text);

/// Keys shared by command-line flags (with a leading "--") and config files.
inline constexpr std::string_view kConfigKeys[] = {
    "model", "t-min", "t-max", "t-steps", "grid", "J", "h", "N", "epsilon", "V",
    "lambda-step", "richardson", "format", "out", "coupling"};

using KeyValues = std::map<std::string, std::string, std::less<>>;

/// Flat `key = value` text; blank lines and lines starting with '#' are ignored.
KeyValues parse_config_text(std::istream& in);
KeyValues read_config_file(const std::string& path);

struct RunConfig {
  ModelKind model = ModelKind::ho;
  double t_min = 0.05;
  double t_max = 20.0;
  std::size_t t_steps = 200;
  GridKind grid = GridKind::linear;
  DiffConfig diff;
  OutputFormat format = OutputFormat::csv;
  /// Empty or "-" writes to standard output.
  std::string out;

  // Ising
  double coupling_j = 2.0;
  double field_h = 1.0;
  ising::Coupling coupling = ising::Coupling::bond;
  // Ising spin count or Lipkin particle count.
  int n = 10;
  // Lipkin
  double epsilon = 1.0;
  double v_coupling = 3.0;
};

/// Per-model defaults (figure parameters and grids).
RunConfig defaults_for(ModelKind model);

/// Merges `flags` over `file` over the model defaults and validates the
/// result. Throws UsageError on unknown keys, unparsable or invalid values.
RunConfig resolve_run_config(const KeyValues& flags, const KeyValues& file);

}  // namespace thermohf::app
