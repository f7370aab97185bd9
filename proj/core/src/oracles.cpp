#include "thermohf/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "thermohf/errors.hpp"

namespace thermohf::oracles {

namespace {

struct Sums {
  double weight = 0.0;
  double bond = 0.0;
  double magnetization = 0.0;

  Sums& operator+=(const Sums& o) {
    weight += o.weight;
    bond += o.bond;
    magnetization += o.magnetization;
    return *this;
  }
};

Sums pairwise_sum(std::span<const Sums> parts) {
  if (parts.size() == 1) return parts.front();
  const std::size_t half = parts.size() / 2;
  Sums left = pairwise_sum(parts.first(half));
  left += pairwise_sum(parts.subspan(half));
  return left;
}

struct SpinTerms {
  int bond = 0;           // Σ_i s_i s_{i+1}, periodic
  int magnetization = 0;  // Σ_i s_i
};

SpinTerms spin_terms(std::uint32_t config, std::size_t n) {
  SpinTerms t;
  for (std::size_t i = 0; i < n; ++i) {
    const int si = (config >> i) & 1u ? 1 : -1;
    const int sj = (config >> ((i + 1) % n)) & 1u ? 1 : -1;
    t.bond += si * sj;
    t.magnetization += si;
  }
  return t;
}

}  // namespace

EnumerationResult ising_enumerate(const ising::Params& params, EnsemblePoint point) {
  params.validate();
  const std::size_t n = params.n_spins;
  if (n > kMaxEnumeratedSpins) {
    throw CapacityError("ising_enumerate: N = " + std::to_string(n) + " exceeds the 20-spin cap");
  }
  const double j = params.effective_j();
  const double h = params.effective_h();
  const double beta = point.beta();
  const std::uint32_t count = std::uint32_t{1} << n;

  auto energy_of = [&](const SpinTerms& t) { return -j * t.bond - h * t.magnetization; };

  double min_energy = std::numeric_limits<double>::infinity();
  for (std::uint32_t c = 0; c < count; ++c) min_energy = std::min(min_energy, energy_of(spin_terms(c, n)));

  constexpr std::uint32_t kChunk = 256;
  std::vector<Sums> chunks;
  chunks.reserve(count / kChunk + 1);
  for (std::uint32_t start = 0; start < count; start += kChunk) {
    Sums s;
    const std::uint32_t stop = std::min(count, start + kChunk);
    for (std::uint32_t c = start; c < stop; ++c) {
      const auto t = spin_terms(c, n);
      const double w = std::exp(-beta * (energy_of(t) - min_energy));
      s.weight += w;
      s.bond += w * t.bond;
      s.magnetization += w * t.magnetization;
    }
    chunks.push_back(s);
  }
  const Sums total = pairwise_sum(chunks);

  EnumerationResult out;
  out.ln_z = -beta * min_energy + std::log(total.weight);
  out.bond_correlation = total.bond / total.weight;
  out.magnetization = total.magnetization / total.weight;
  out.h_j_average = -j * out.bond_correlation;
  out.h_h_average = -h * out.magnetization;
  out.energy = out.h_j_average + out.h_h_average;
  return out;
}

namespace {

// Sparse superposition of product states. Bit p set means the particle of
// site p sits on the upper level. Each site holds exactly one particle, so
// a†_{p,+1} a_{p,−1} only flips bit p and carries no fermionic sign.
using Ket = std::vector<std::pair<std::uint32_t, double>>;

Ket raise(const Ket& in, int n) {
  Ket out;
  for (const auto& [state, amp] : in) {
    for (int p = 0; p < n; ++p) {
      if (!((state >> p) & 1u)) out.emplace_back(state | (1u << p), amp);
    }
  }
  return out;
}

Ket lower(const Ket& in, int n) {
  Ket out;
  for (const auto& [state, amp] : in) {
    for (int p = 0; p < n; ++p) {
      if ((state >> p) & 1u) out.emplace_back(state & ~(1u << p), amp);
    }
  }
  return out;
}

}  // namespace

linalg::SymmetricMatrix lipkin_fock_hamiltonian(const lipkin::Params& params) {
  params.validate();
  const int n = params.n_particles;
  if (n > kMaxFockParticles) {
    throw CapacityError("lipkin_fock: N = " + std::to_string(n) + " exceeds the 12-particle cap");
  }
  const std::size_t dim = std::size_t{1} << n;
  const double pair_coefficient = -0.5 * params.lambda * params.v_coupling;

  std::vector<double> dense(dim * dim, 0.0);
  for (std::uint32_t s = 0; s < dim; ++s) {
    // J₀ = ½ Σ_p (n_{p,+1} − n_{p,−1})
    const int up = std::popcount(s);
    dense[s * dim + s] += params.epsilon * 0.5 * (up - (n - up));
    const Ket ket{{s, 1.0}};
    for (const Ket& image : {raise(raise(ket, n), n), lower(lower(ket, n), n)}) {
      for (const auto& [target, amp] : image) dense[target * dim + s] += pair_coefficient * amp;
    }
  }

  linalg::SymmetricMatrix h(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t k = i; k < dim; ++k) {
      if (dense[i * dim + k] != dense[k * dim + i]) {
        throw std::logic_error("lipkin_fock: assembled Hamiltonian is not symmetric");
      }
      h.set(i, k, dense[i * dim + k]);
    }
  }
  return h;
}

Spectrum lipkin_fock(const lipkin::Params& params) {
  linalg::JacobiOptions options;
  options.compute_eigenvectors = false;
  const auto decomposition = linalg::jacobi_eigen(lipkin_fock_hamiltonian(params), options);
  return Spectrum::from_energies(decomposition.eigenvalues);
}

}  // namespace thermohf::oracles
