#pragma once

#include <ostream>
#include <span>
#include <string>

#include "thermohf/sweep.hpp"
#include "thermohf_app/run_config.hpp"

namespace thermohf::app {

inline constexpr std::string_view kCsvHeader = "T,E,F,S,dF_dlambda,dE_dlambda,dS_dlambda,H1_direct";

/// Shortest-independent, round-trippable form: 17 significant digits.
std::string format_double(double value);

void write_csv(std::ostream& out, std::span<const SweepRow> rows);

/// {"config": {...}, "rows": [{"T": ..., ...}, ...]}; a missing H1_direct is null.
void write_json(std::ostream& out, std::span<const SweepRow> rows, const RunConfig& config);

}  // namespace thermohf::app
