#include "thermohf/lipkin.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "thermohf/errors.hpp"

namespace thermohf::lipkin {

void Params::validate() const {
  if (n_particles < 1) throw DomainError("lipkin: need at least one particle");
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw DomainError("lipkin: epsilon must be finite and > 0");
  if (!std::isfinite(v_coupling) || !std::isfinite(lambda)) throw DomainError("lipkin: parameters must be finite");
}

namespace {

__extension__ typedef unsigned __int128 u128;

u128 binomial(int n, int k) {
  u128 c = 1;
  for (int i = 0; i < k; ++i) c = c * static_cast<u128>(n - i) / static_cast<u128>(i + 1);
  return c;
}

void check_twice_j(int n_particles, int twice_j) {
  if (twice_j < 0 || twice_j > n_particles || (n_particles - twice_j) % 2 != 0) {
    throw DomainError("lipkin: j = " + std::to_string(twice_j) + "/2 is not allowed for N = " +
                      std::to_string(n_particles));
  }
}

// j(j+1) − m(m+1) with twice-j/twice-m integers, times 4.
int ladder_squared_x4(int twice_j, int twice_m) { return twice_j * (twice_j + 2) - twice_m * (twice_m + 2); }

// ⟨j,m+2| (J₊² + J₋²)/2 |j,m⟩ for the basis index of m.
double pair_element(int twice_j, int twice_m) {
  const double first = 0.25 * ladder_squared_x4(twice_j, twice_m);
  const double second = 0.25 * ladder_squared_x4(twice_j, twice_m + 2);
  return 0.5 * std::sqrt(first) * std::sqrt(second);
}

linalg::SymmetricMatrix sub_block(const linalg::SymmetricMatrix& full, int parity) {
  const std::size_t n = full.order();
  const std::size_t size = (n + 1 - static_cast<std::size_t>(parity)) / 2;
  linalg::SymmetricMatrix out(size);
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = a; b < size; ++b) out.set(a, b, full(2 * a + parity, 2 * b + parity));
  }
  return out;
}

}  // namespace

std::uint64_t multiplicity(int n_particles, int twice_j) {
  if (n_particles < 1 || n_particles > kMaxParticlesForMultiplicity) {
    throw DomainError("lipkin: multiplicity supports 1 <= N <= 64");
  }
  check_twice_j(n_particles, twice_j);
  const u128 numerator = 2 * static_cast<u128>(1 + twice_j) * binomial(n_particles, (n_particles - twice_j) / 2);
  const u128 denominator = static_cast<u128>(2 + twice_j + n_particles);
  if (numerator % denominator != 0) throw std::logic_error("lipkin: multiplicity is not an integer");
  return static_cast<std::uint64_t>(numerator / denominator);
}

std::vector<int> twice_j_values(int n_particles) {
  if (n_particles < 1) throw DomainError("lipkin: need at least one particle");
  std::vector<int> out;
  for (int tj = n_particles % 2; tj <= n_particles; tj += 2) out.push_back(tj);
  return out;
}

linalg::SymmetricMatrix interaction_block(int twice_j, const Params& params) {
  params.validate();
  check_twice_j(params.n_particles, twice_j);
  const std::size_t order = static_cast<std::size_t>(twice_j) + 1;
  linalg::SymmetricMatrix h1(order);
  for (std::size_t i = 0; i + 2 < order; ++i) {
    const int twice_m = -twice_j + 2 * static_cast<int>(i);
    h1.set(i, i + 2, -params.v_coupling * pair_element(twice_j, twice_m));
  }
  return h1;
}

JBlock build_block(int twice_j, const Params& params) {
  JBlock block;
  block.twice_j = twice_j;
  block.multiplicity = multiplicity(params.n_particles, twice_j);
  block.hamiltonian = interaction_block(twice_j, params);
  const std::size_t order = block.dimension();
  for (std::size_t i = 0; i < order; ++i) {
    const int twice_m = -twice_j + 2 * static_cast<int>(i);
    block.hamiltonian.set(i, i, 0.5 * params.epsilon * twice_m);
    if (i + 2 < order) block.hamiltonian.set(i, i + 2, params.lambda * block.hamiltonian(i, i + 2));
  }
  return block;
}

std::vector<BlockState> block_states(const Params& params) {
  params.validate();
  std::vector<BlockState> states;
  states.reserve(std::size_t{1} << std::min(params.n_particles, 20));
  for (int tj : twice_j_values(params.n_particles)) {
    const JBlock block = build_block(tj, params);
    const auto h1 = interaction_block(tj, params);
    // m couples only to m ± 2, so even and odd basis offsets never mix.
    for (int parity = 0; parity < 2; ++parity) {
      if (static_cast<std::size_t>(parity) >= block.dimension()) continue;
      const auto decomposition = linalg::jacobi_eigen(sub_block(block.hamiltonian, parity));
      const auto h1_sub = sub_block(h1, parity);
      for (std::size_t k = 0; k < decomposition.eigenvalues.size(); ++k) {
        states.push_back({decomposition.eigenvalues[k],
                          linalg::quadratic_form(h1_sub, decomposition.eigenvectors.column(k)), tj,
                          block.multiplicity});
      }
    }
  }
  std::stable_sort(states.begin(), states.end(),
                   [](const BlockState& a, const BlockState& b) { return a.energy < b.energy; });
  return states;
}

Spectrum spectrum(const Params& params) {
  const auto states = block_states(params);
  std::vector<Level> levels;
  levels.reserve(states.size());
  for (const auto& s : states) levels.push_back({s.energy, s.multiplicity});
  return Spectrum(std::move(levels));
}

double h1_average_direct(const Params& params, EnsemblePoint point) {
  const auto states = block_states(params);
  std::vector<Level> levels;
  std::vector<double> values;
  levels.reserve(states.size());
  values.reserve(states.size());
  for (const auto& s : states) {
    levels.push_back({s.energy, s.multiplicity});
    values.push_back(s.h1_expectation);
  }
  // Already sorted, so Spectrum keeps this order and values stay aligned.
  return thermal_average(values, Spectrum(std::move(levels)), point);
}

Model::Model(Params base) : base_(base) { base_.validate(); }

Params Model::at(double lambda) const {
  Params p = base_;
  p.lambda = lambda;
  return p;
}

Spectrum Model::spectrum(double lambda) const { return lipkin::spectrum(at(lambda)); }

std::optional<double> Model::h1_direct(double lambda, EnsemblePoint point) const {
  return h1_average_direct(at(lambda), point);
}

std::vector<SweepRow> hf_suite(const Params& params, std::span<const double> temperatures,
                               const DiffConfig& config) {
  for (std::size_t i = 0; i < temperatures.size(); ++i) {
    if (!(temperatures[i] > 0.0) || (i > 0 && !(temperatures[i] > temperatures[i - 1]))) {
      throw DomainError("lipkin: temperature grid must be positive and strictly increasing");
    }
  }
  SweepOptions options;
  options.diff = config;
  options.h1_temperature_derivative = true;
  return hf_sweep(Model(params), temperatures, options);
}

}  // namespace thermohf::lipkin
