#pragma once

#include <ostream>
#include <vector>

#include "thermohf/sweep.hpp"
#include "thermohf_app/run_config.hpp"
#include "thermohf_app/verify.hpp"

namespace thermohf::app {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int verification_failed = 1;
inline constexpr int usage = 2;
inline constexpr int numerical = 3;
}  // namespace exit_code

/// Rows of the configured sweep, ascending in T.
std::vector<SweepRow> run_sweep(const RunConfig& config);

/// Runs the sweep and writes it to config.out (or `stdout_stream`).
int cmd_sweep(const RunConfig& config, std::ostream& stdout_stream, std::ostream& err);

int cmd_verify(const VerifySettings& settings, std::ostream& out, std::ostream& err, bool color);

/// Entry point shared by the executable and the tests.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace thermohf::app
