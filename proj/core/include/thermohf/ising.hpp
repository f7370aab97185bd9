#pragma once

#include <cstddef>

#include "thermohf/model.hpp"

namespace thermohf::ising {

/// Periodic chain H = −λ₁J Σ_i s_i s_{i+1} − λ₂h Σ_i s_i with s_{N+1} ≡ s_1.
///
/// Every one of the N bonds is counted once, so for N = 2 the bond (1,2)
/// appears twice. Energies and temperatures are in units of h.
struct Params {
  double coupling_j = 2.0;
  double field_h = 1.0;
  std::size_t n_spins = 10;
  double lambda1 = 1.0;
  double lambda2 = 1.0;

  double effective_j() const noexcept { return lambda1 * coupling_j; }
  double effective_h() const noexcept { return lambda2 * field_h; }

  /// Throws DomainError unless n_spins ≥ 2 and every parameter is finite.
  void validate() const;
};

/// ln Z from the transfer-matrix eigenvalues, evaluated in the log domain
/// (finite for any finite couplings, N and β).
double log_z(const Params& params, EnsemblePoint point);

/// E = −∂lnZ/∂β from the analytic β-derivative of the transfer-matrix form.
double total_energy(const Params& params, EnsemblePoint point);

ThermoPotentials potentials(const Params& params, EnsemblePoint point);

/// ⟨H_J⟩_T = ∂F/∂λ₁ at the params' λ₁ (central differences).
DiffResult hj_average(const Params& params, EnsemblePoint point, const DiffConfig& config = {});

/// ⟨H_h⟩_T = ∂F/∂λ₂ at the params' λ₂ (central differences).
DiffResult hh_average(const Params& params, EnsemblePoint point, const DiffConfig& config = {});

enum class Coupling { bond, field };

/// The chain as a one-parameter family: λ scales the bond term (H₁ = H_J)
/// or the field term (H₁ = H_h); the other multiplier is taken from `base`.
class Model final : public ParametricModel {
 public:
  Model(Params base, Coupling coupling);

  const Params& base() const noexcept { return base_; }
  Coupling coupling() const noexcept { return coupling_; }
  Params at(double lambda) const;

  std::string name() const override { return "ising"; }
  ThermoPotentials potentials(double lambda, EnsemblePoint point) const override;

  /// Exhaustive-enumeration average of the selected term for N ≤ 20, nullopt above.
  std::optional<double> h1_direct(double lambda, EnsemblePoint point) const override;

 private:
  Params base_;
  Coupling coupling_;
};

}  // namespace thermohf::ising
