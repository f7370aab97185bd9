#pragma once

#include <optional>
#include <string>

#include "thermohf/numdiff.hpp"
#include "thermohf/spectrum.hpp"
#include "thermohf/thermo.hpp"

namespace thermohf {

/// Parametric Hamiltonian H^λ = H₀ + λH₁ seen through its thermodynamics.
///
/// Implementations must be safe to evaluate concurrently at different λ.
class ParametricModel {
 public:
  virtual ~ParametricModel() = default;

  virtual std::string name() const = 0;

  /// Canonical potentials of H^λ at the given ensemble point.
  virtual ThermoPotentials potentials(double lambda, EnsemblePoint point) const = 0;

  /// ⟨H₁⟩_T at λ computed without differentiating F, when the model has
  /// such a route (per-eigenstate expectations, a closed form, enumeration).
  virtual std::optional<double> h1_direct(double /*lambda*/, EnsemblePoint /*point*/) const {
    return std::nullopt;
  }
};

/// A model whose potentials come from an explicit spectrum through thermo-core.
class SpectralModel : public ParametricModel {
 public:
  virtual Spectrum spectrum(double lambda) const = 0;

  ThermoPotentials potentials(double lambda, EnsemblePoint point) const override {
    return thermohf::potentials(spectrum(lambda), point);
  }
};

enum class PotentialSelector { free_energy, energy, entropy };

double select(const ThermoPotentials& p, PotentialSelector which);

/// ∂X^λ/∂λ at `lambda` (λ = 1 for all Hellmann–Feynman checks) of the selected
/// potential by central differences through the model's potentials().
DiffResult lambda_derivative_of(PotentialSelector which, const ParametricModel& model,
                                EnsemblePoint point, const DiffConfig& config = {},
                                double lambda = 1.0);

}  // namespace thermohf
