#pragma once

#include <cstdint>
#include <vector>

#include "thermohf/model.hpp"
#include "thermohf/sweep.hpp"
#include "thermohf/symmetric_eigen.hpp"

namespace thermohf::lipkin {

// Quasi-spin Lipkin model without the W term,
//   H^λ = ε J₀ − λ (V/2)(J₊² + J₋²),
// so H₁ = −(V/2)(J₊² + J₋²) is the full signed interaction. The Hamiltonian
// is block diagonal in the total quasi-spin j; each j block occurs α^N_j
// times. Half-integer j and m are carried as twice-j / twice-m integers.

struct Params {
  int n_particles = 10;
  double epsilon = 1.0;
  double v_coupling = 3.0;
  double lambda = 1.0;

  /// Throws DomainError unless n_particles ≥ 1, ε > 0 and all values finite.
  void validate() const;
};

/// Largest N for which multiplicities fit in 64 bits.
inline constexpr int kMaxParticlesForMultiplicity = 64;

/// Number of times the SU(2) irrep j = twice_j/2 appears when coupling N
/// spin-½ objects: (1 + 2j)/(1 + j + N/2) · C(N, N/2 − j), exact integer
/// arithmetic. Throws DomainError if j is not an allowed value for N or N
/// exceeds kMaxParticlesForMultiplicity.
std::uint64_t multiplicity(int n_particles, int twice_j);

/// Allowed twice-j values for N, ascending (j_min = 0 or ½ up to N/2).
std::vector<int> twice_j_values(int n_particles);

struct JBlock {
  int twice_j = 0;
  std::uint64_t multiplicity = 1;
  /// ⟨j,m|H^λ|j,m'⟩ in the basis m = −j, −j+1, ..., j.
  linalg::SymmetricMatrix hamiltonian{1};

  std::size_t dimension() const noexcept { return hamiltonian.order(); }
};

/// Block of H^λ for one j: εm on the diagonal and
/// −(λV/2)·√(j(j+1) − m(m+1))·√(j(j+1) − (m+1)(m+2)) between m and m+2.
JBlock build_block(int twice_j, const Params& params);

/// The H₁ part of the same block (coefficient of λ).
linalg::SymmetricMatrix interaction_block(int twice_j, const Params& params);

/// One eigenstate of H^λ restricted to a j block, with ⟨H₁⟩ in that state.
struct BlockState {
  double energy = 0.0;
  double h1_expectation = 0.0;
  int twice_j = 0;
  std::uint64_t multiplicity = 1;
};

/// Diagonalizes every block (split by m parity) and returns all states sorted
/// ascending by energy; ties keep block order.
std::vector<BlockState> block_states(const Params& params);

/// Block eigenvalues with degeneracy α^N_j; total weight 2^N.
Spectrum spectrum(const Params& params);

/// ⟨H₁⟩_T from per-eigenstate expectations, Boltzmann averaged with weights
/// α^N_j exp(−βE_k^{(j)}) / Z. No derivative of F is taken.
double h1_average_direct(const Params& params, EnsemblePoint point);

class Model final : public SpectralModel {
 public:
  explicit Model(Params base);

  const Params& base() const noexcept { return base_; }
  Params at(double lambda) const;

  std::string name() const override { return "lipkin"; }
  Spectrum spectrum(double lambda) const override;
  std::optional<double> h1_direct(double lambda, EnsemblePoint point) const override;

 private:
  Params base_;
};

/// Temperature sweep at λ = 1 with E, F, S, their λ-derivatives, the direct
/// ⟨H₁⟩_T and its T-derivative. `temperatures` must be strictly increasing and positive.
std::vector<SweepRow> hf_suite(const Params& params, std::span<const double> temperatures,
                               const DiffConfig& config = {});

}  // namespace thermohf::lipkin
