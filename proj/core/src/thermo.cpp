#include "thermohf/thermo.hpp"

#include <cmath>

#include "thermohf/errors.hpp"

namespace thermohf {

EnsemblePoint EnsemblePoint::from_beta(double beta) {
  if (!(beta > 0.0) || !std::isfinite(beta)) throw DomainError("ensemble point: beta must be finite and > 0");
  return EnsemblePoint(beta);
}

EnsemblePoint EnsemblePoint::from_temperature(double temperature) {
  if (!(temperature > 0.0) || !std::isfinite(temperature)) {
    throw DomainError("ensemble point: temperature must be finite and > 0");
  }
  return EnsemblePoint(1.0 / temperature);
}

namespace {

// Anchored Boltzmann sums shared by every routine below. w_n = g_n e^{−β(E_n − E_0)} ≤ g_n.
struct AnchoredSums {
  double ground = 0.0;
  double weight_total = 0.0;   // W = Σ w_n
  double excitation = 0.0;     // Σ w_n (E_n − E_0) / W
};

AnchoredSums anchored_sums(const Spectrum& spectrum, double beta) {
  AnchoredSums sums;
  sums.ground = spectrum.ground_energy();
  double weighted_excitation = 0.0;
  for (const auto& level : spectrum.levels()) {
    const double delta = level.energy - sums.ground;
    const double w = static_cast<double>(level.degeneracy) * std::exp(-beta * delta);
    sums.weight_total += w;
    weighted_excitation += w * delta;
  }
  sums.excitation = weighted_excitation / sums.weight_total;
  return sums;
}

}  // namespace

double log_partition(const Spectrum& spectrum, EnsemblePoint point) {
  const double beta = point.beta();
  const double ground = spectrum.ground_energy();
  double total = 0.0;
  for (const auto& level : spectrum.levels()) {
    total += static_cast<double>(level.degeneracy) * std::exp(-beta * (level.energy - ground));
  }
  return -beta * ground + std::log(total);
}

ThermoPotentials potentials(const Spectrum& spectrum, EnsemblePoint point) {
  const double beta = point.beta();
  const auto sums = anchored_sums(spectrum, beta);
  const double log_w = std::log(sums.weight_total);

  ThermoPotentials out;
  out.ln_z = -beta * sums.ground + log_w;
  out.free_energy = -out.ln_z / beta;
  out.energy = sums.ground + sums.excitation;
  out.entropy = log_w + beta * sums.excitation;
  return out;
}

double thermal_average(std::span<const double> per_level_values, const Spectrum& spectrum,
                       EnsemblePoint point) {
  if (per_level_values.size() != spectrum.size()) {
    throw ContractError("thermal_average: value count does not match level count");
  }
  const double beta = point.beta();
  const double ground = spectrum.ground_energy();
  const auto levels = spectrum.levels();
  double weight_total = 0.0;
  double weighted = 0.0;
  for (std::size_t n = 0; n < levels.size(); ++n) {
    const double w = static_cast<double>(levels[n].degeneracy) * std::exp(-beta * (levels[n].energy - ground));
    weight_total += w;
    weighted += w * per_level_values[n];
  }
  return weighted / weight_total;
}

std::vector<double> occupations(const Spectrum& spectrum, EnsemblePoint point) {
  const double beta = point.beta();
  const double ground = spectrum.ground_energy();
  std::vector<double> p;
  p.reserve(spectrum.size());
  double total = 0.0;
  for (const auto& level : spectrum.levels()) {
    p.push_back(static_cast<double>(level.degeneracy) * std::exp(-beta * (level.energy - ground)));
    total += p.back();
  }
  for (double& x : p) x /= total;
  return p;
}

}  // namespace thermohf
