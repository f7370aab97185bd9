#include "thermohf/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>

#include "thermohf/errors.hpp"

namespace thermohf {

std::optional<GridKind> parse_grid_kind(std::string_view text) {
  if (text == "linear") return GridKind::linear;
  if (text == "geometric") return GridKind::geometric;
  return std::nullopt;
}

std::string_view to_string(GridKind kind) { return kind == GridKind::linear ? "linear" : "geometric"; }

std::vector<double> temperature_grid(double t_min, double t_max, std::size_t steps, GridKind kind) {
  if (!(t_min > 0.0) || !(t_max > t_min) || !std::isfinite(t_max)) {
    throw DomainError("temperature grid: need 0 < t_min < t_max");
  }
  if (steps < 2) throw DomainError("temperature grid: need at least two points");
  std::vector<double> grid(steps);
  const double last = static_cast<double>(steps - 1);
  for (std::size_t i = 0; i < steps; ++i) {
    const double f = static_cast<double>(i) / last;
    grid[i] = kind == GridKind::linear ? t_min + (t_max - t_min) * f : t_min * std::pow(t_max / t_min, f);
  }
  grid.back() = t_max;
  return grid;
}

namespace {

SweepRow evaluate_row(const ParametricModel& model, double temperature, const SweepOptions& options) {
  const auto point = EnsemblePoint::from_temperature(temperature);
  const auto pot = model.potentials(1.0, point);

  SweepRow row;
  row.temperature = temperature;
  row.energy = pot.energy;
  row.free_energy = pot.free_energy;
  row.entropy = pot.entropy;

  const auto df = lambda_derivative_of(PotentialSelector::free_energy, model, point, options.diff);
  const auto de = lambda_derivative_of(PotentialSelector::energy, model, point, options.diff);
  const auto ds = lambda_derivative_of(PotentialSelector::entropy, model, point, options.diff);
  row.df_dlambda = df.derivative;
  row.de_dlambda = de.derivative;
  row.ds_dlambda = ds.derivative;
  row.df_dlambda_error = df.error_estimate;
  row.de_dlambda_error = de.error_estimate;
  row.ds_dlambda_error = ds.error_estimate;

  row.h1_direct = model.h1_direct(1.0, point);
  if (options.h1_temperature_derivative && row.h1_direct) {
    const auto dt = central_diff(
        [&](double t) { return model.h1_direct(1.0, EnsemblePoint::from_temperature(t)).value(); },
        temperature, options.diff);
    row.dh1_dtemperature = dt.derivative;
    row.dh1_dtemperature_error = dt.error_estimate;
  }
  return row;
}

}  // namespace

std::vector<SweepRow> hf_sweep(const ParametricModel& model, std::span<const double> temperatures,
                               const SweepOptions& options) {
  options.diff.validate();
  const std::size_t count = temperatures.size();
  std::vector<SweepRow> rows(count);
  std::vector<std::exception_ptr> errors(count);

  unsigned threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  threads = static_cast<unsigned>(std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(count, 1)));

  auto work = [&](unsigned worker) {
    for (std::size_t i = worker; i < count; i += threads) {
      try {
        rows[i] = evaluate_row(model, temperatures[i], options);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < threads; ++w) pool.emplace_back(work, w);
    work(0);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

}  // namespace thermohf
