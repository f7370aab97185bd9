#pragma once

#include "thermohf/ising.hpp"
#include "thermohf/lipkin.hpp"

namespace thermohf::oracles {

// Brute-force reference implementations. They share no code path with the
// transfer-matrix and j-block routes they check.

struct EnumerationResult {
  double ln_z = 0.0;
  double h_j_average = 0.0;
  double h_h_average = 0.0;
  double energy = 0.0;
  /// ⟨Σ_i s_i s_{i+1}⟩ and ⟨Σ_i s_i⟩, independent of the coupling values.
  double bond_correlation = 0.0;
  double magnetization = 0.0;
};

inline constexpr std::size_t kMaxEnumeratedSpins = 20;
inline constexpr int kMaxFockParticles = 12;

/// Sums over all 2^N spin configurations with the same periodic bond
/// convention as ising::log_z. Weights are anchored at the minimum
/// configuration energy and reduced pairwise, so the result is bit-stable.
/// Throws CapacityError for N > 20.
EnumerationResult ising_enumerate(const ising::Params& params, EnsemblePoint point);

/// Full 2^N-dimensional Fock-space Hamiltonian built from site operators
/// (J₀, J₊, J₋ as sums of per-site two-level operators), diagonalized
/// densely. Every eigenvalue is returned with degeneracy 1.
/// Throws CapacityError for N > 12.
Spectrum lipkin_fock(const lipkin::Params& params);

/// The dense Fock-space matrix used by lipkin_fock.
linalg::SymmetricMatrix lipkin_fock_hamiltonian(const lipkin::Params& params);

}  // namespace thermohf::oracles
