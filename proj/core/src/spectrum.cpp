#include "thermohf/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "thermohf/errors.hpp"

namespace thermohf {

Spectrum::Spectrum(std::vector<Level> levels) {
  if (levels.empty()) throw DomainError("spectrum: no levels");
  for (const auto& level : levels) {
    if (!std::isfinite(level.energy)) throw DomainError("spectrum: non-finite energy");
    if (level.degeneracy == 0) throw DomainError("spectrum: zero degeneracy");
  }
  const auto order = sort_order(levels);
  levels_.reserve(levels.size());
  for (auto i : order) levels_.push_back(levels[i]);
}

Spectrum Spectrum::from_energies(std::span<const double> energies) {
  std::vector<Level> levels;
  levels.reserve(energies.size());
  for (double e : energies) levels.push_back({e, 1});
  return Spectrum(std::move(levels));
}

std::uint64_t Spectrum::dimension() const noexcept {
  std::uint64_t total = 0;
  for (const auto& level : levels_) total += level.degeneracy;
  return total;
}

std::vector<double> Spectrum::expanded_energies() const {
  std::vector<double> out;
  out.reserve(dimension());
  for (const auto& level : levels_) out.insert(out.end(), level.degeneracy, level.energy);
  return out;
}

std::vector<std::size_t> Spectrum::sort_order(std::span<const Level> levels) {
  std::vector<std::size_t> order(levels.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return levels[a].energy < levels[b].energy;
  });
  return order;
}

}  // namespace thermohf
