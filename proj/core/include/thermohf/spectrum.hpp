#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace thermohf {

struct Level {
  double energy = 0.0;
  std::uint64_t degeneracy = 1;

  friend bool operator==(const Level&, const Level&) = default;
};

/// Eigenvalue spectrum of a Hamiltonian as (energy, degeneracy) pairs.
///
/// Levels are kept sorted ascending by energy. Equal energies coming from
/// different symmetry sectors are allowed to stay as separate entries; the
/// sort is stable so the order of such entries is the insertion order.
class Spectrum {
 public:
  /// Throws DomainError if `levels` is empty, an energy is not finite or a
  /// degeneracy is zero.
  explicit Spectrum(std::vector<Level> levels);

  static Spectrum from_energies(std::span<const double> energies);

  std::span<const Level> levels() const noexcept { return levels_; }
  std::size_t size() const noexcept { return levels_.size(); }
  double ground_energy() const noexcept { return levels_.front().energy; }

  /// Σ degeneracy.
  std::uint64_t dimension() const noexcept;

  /// Every level repeated according to its degeneracy, ascending.
  std::vector<double> expanded_energies() const;

  /// Permutation that sorts `levels` stably by energy; exposed so callers can
  /// reorder data that travels with the levels.
  static std::vector<std::size_t> sort_order(std::span<const Level> levels);

 private:
  std::vector<Level> levels_;
};

}  // namespace thermohf
