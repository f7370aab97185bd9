#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "thermohf/model.hpp"

namespace thermohf {

/// Thermodynamics of one model at one temperature.
struct SweepRow {
  double temperature = 0.0;
  double energy = 0.0;
  double free_energy = 0.0;
  double entropy = 0.0;
  double df_dlambda = 0.0;
  double de_dlambda = 0.0;
  double ds_dlambda = 0.0;
  double df_dlambda_error = 0.0;
  double de_dlambda_error = 0.0;
  double ds_dlambda_error = 0.0;
  /// ⟨H₁⟩_T from the model's direct route, if it has one.
  std::optional<double> h1_direct;
  /// ∂⟨H₁⟩_T/∂T of the direct route, when requested.
  std::optional<double> dh1_dtemperature;
  std::optional<double> dh1_dtemperature_error;
};

enum class GridKind { linear, geometric };

std::optional<GridKind> parse_grid_kind(std::string_view text);
std::string_view to_string(GridKind kind);

/// `steps` temperatures from t_min to t_max inclusive. Throws DomainError
/// unless 0 < t_min < t_max and steps ≥ 2.
std::vector<double> temperature_grid(double t_min, double t_max, std::size_t steps, GridKind kind);

struct SweepOptions {
  DiffConfig diff;
  /// Also differentiate the direct ⟨H₁⟩_T in T (needs a model with h1_direct).
  bool h1_temperature_derivative = false;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// One row per temperature, in grid order. All λ-derivatives are taken at λ = 1.
/// Rows are computed in parallel; the output does not depend on the thread count.
std::vector<SweepRow> hf_sweep(const ParametricModel& model, std::span<const double> temperatures,
                               const SweepOptions& options = {});

}  // namespace thermohf
