#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace thermohf::app {

enum class VerifyScope { all, ho, ising, lipkin };

VerifyScope parse_scope(std::string_view text);

struct VerifySettings {
  VerifyScope scope = VerifyScope::all;
  /// Multiplies every tolerance.
  double tolerance_scale = 1.0;
  /// Largest chain enumerated in the Ising oracle sweep.
  int ising_max_spins = 12;
  /// Particle number of the Lipkin Fock-space cross-check.
  int lipkin_fock_particles = 8;
};

struct CheckResult {
  std::string name;
  double deviation = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

std::vector<CheckResult> run_verify(const VerifySettings& settings);

/// One line per check; returns true iff every check passed.
bool print_report(std::ostream& out, const std::vector<CheckResult>& results, bool color);

}  // namespace thermohf::app
