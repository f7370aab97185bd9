#pragma once

#include <cstddef>

#include "thermohf/model.hpp"

namespace thermohf::ho {

// One-dimensional oscillator in oscillator units, H^λ = −½ d²/dx² + (λ/2) x²,
// so H₁ = x²/2 and E_n^λ = (n + ½)√λ.

/// Levels (n + ½)√λ for n = 0..n_max, each non-degenerate. Throws DomainError for λ ≤ 0.
Spectrum spectrum(double lambda, std::size_t n_max);

/// Smallest n_max making the dropped Boltzmann tail negligible at double
/// precision for every T ≤ t_max and λ ≥ lambda_min:
/// max(64, ceil(40 · t_max / √λ_min)).
std::size_t truncation_for(double t_max, double lambda_min);

/// Exact potentials of the untruncated oscillator:
/// F = √λ/2 + T ln(1 − e^{−β√λ}), E = √λ/2 + √λ e^{−β√λ}/(1 − e^{−β√λ}).
ThermoPotentials closed_potentials(double lambda, EnsemblePoint point);

/// ⟨x²/2⟩_T in the ensemble of H^λ; at λ = 1 this is ¼ + ½ e^{−β}/(1 − e^{−β}).
double potential_average(EnsemblePoint point, double lambda = 1.0);

/// ∂S^λ/∂λ at λ = 1: −(β²/2) e^{−β}/(1 − e^{−β})².
double entropy_lambda_derivative(EnsemblePoint point);

/// ∂⟨x²/2⟩_T/∂T = (β²/2) e^{−β}/(1 − e^{−β})².
double potential_average_temperature_derivative(EnsemblePoint point);

class Model final : public SpectralModel {
 public:
  /// n_max must be ≥ 64.
  explicit Model(std::size_t n_max);

  std::size_t n_max() const noexcept { return n_max_; }

  std::string name() const override { return "ho"; }
  Spectrum spectrum(double lambda) const override;
  std::optional<double> h1_direct(double lambda, EnsemblePoint point) const override;

 private:
  std::size_t n_max_;
};

}  // namespace thermohf::ho
