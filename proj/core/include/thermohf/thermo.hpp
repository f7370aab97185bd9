#pragma once

#include <span>
#include <vector>

#include "thermohf/spectrum.hpp"

namespace thermohf {

/// Point of the canonical ensemble. β is the stored variable; T = 1/β.
class EnsemblePoint {
 public:
  static EnsemblePoint from_beta(double beta);
  static EnsemblePoint from_temperature(double temperature);

  double beta() const noexcept { return beta_; }
  double temperature() const noexcept { return 1.0 / beta_; }

 private:
  explicit EnsemblePoint(double beta) : beta_(beta) {}
  double beta_;
};

struct ThermoPotentials {
  double ln_z = 0.0;
  double free_energy = 0.0;
  double energy = 0.0;
  double entropy = 0.0;
};

/// ln Σ g_n exp(−βE_n), anchored at the ground level so every exponential is ≤ 1.
double log_partition(const Spectrum& spectrum, EnsemblePoint point);

/// lnZ, F = −lnZ/β, E = Σ p_n E_n and S = β(E − F).
///
/// E and S are evaluated from the anchored Boltzmann weights directly, with no
/// differentiation in β: with W = Σ g_n exp(−β(E_n − E_0)) one has
/// S = ln W + β⟨E − E_0⟩, which is a sum of non-negative terms.
ThermoPotentials potentials(const Spectrum& spectrum, EnsemblePoint point);

/// Σ p_n v_n. `per_level_values[n]` is the expectation of the observable in
/// level n, averaged over the level's degenerate subspace.
double thermal_average(std::span<const double> per_level_values, const Spectrum& spectrum,
                       EnsemblePoint point);

/// p_n = g_n exp(−βE_n) / Z for every level (occupation of the whole
/// degenerate level, not of a single state).
std::vector<double> occupations(const Spectrum& spectrum, EnsemblePoint point);

}  // namespace thermohf
