#include "thermohf/harmonic_oscillator.hpp"

#include <cmath>
#include <vector>

#include "thermohf/errors.hpp"

namespace thermohf::ho {

namespace {

constexpr std::size_t kMinLevels = 64;

void check_lambda(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError("harmonic oscillator: lambda must be > 0");
}

// e^{−x}/(1 − e^{−x})² = 1/(4 sinh²(x/2)); vanishes smoothly once sinh overflows.
double bose_fluctuation(double x) {
  const double s = std::sinh(0.5 * x);
  return 1.0 / (4.0 * s * s);
}

}  // namespace

Spectrum spectrum(double lambda, std::size_t n_max) {
  check_lambda(lambda);
  const double omega = std::sqrt(lambda);
  std::vector<Level> levels;
  levels.reserve(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    levels.push_back({(static_cast<double>(n) + 0.5) * omega, 1});
  }
  return Spectrum(std::move(levels));
}

std::size_t truncation_for(double t_max, double lambda_min) {
  check_lambda(lambda_min);
  if (!(t_max > 0.0) || !std::isfinite(t_max)) throw DomainError("harmonic oscillator: t_max must be > 0");
  const double needed = std::ceil(40.0 * t_max / std::sqrt(lambda_min));
  return std::max(kMinLevels, static_cast<std::size_t>(needed));
}

ThermoPotentials closed_potentials(double lambda, EnsemblePoint point) {
  check_lambda(lambda);
  const double beta = point.beta();
  const double omega = std::sqrt(lambda);
  const double x = beta * omega;
  const double log_one_minus = std::log1p(-std::exp(-x));  // ln(1 − e^{−β√λ})

  ThermoPotentials out;
  out.free_energy = 0.5 * omega + log_one_minus / beta;
  out.ln_z = -beta * out.free_energy;
  out.energy = 0.5 * omega + omega / std::expm1(x);
  out.entropy = x / std::expm1(x) - log_one_minus;
  return out;
}

double potential_average(EnsemblePoint point, double lambda) {
  check_lambda(lambda);
  const double omega = std::sqrt(lambda);
  const double x = point.beta() * omega;
  return (0.5 + 1.0 / std::expm1(x)) / (2.0 * omega);
}

double entropy_lambda_derivative(EnsemblePoint point) {
  const double beta = point.beta();
  return -0.5 * beta * beta * bose_fluctuation(beta);
}

double potential_average_temperature_derivative(EnsemblePoint point) {
  const double beta = point.beta();
  return 0.5 * beta * beta * bose_fluctuation(beta);
}

Model::Model(std::size_t n_max) : n_max_(n_max) {
  if (n_max < kMinLevels) throw DomainError("harmonic oscillator: n_max must be at least 64");
}

Spectrum Model::spectrum(double lambda) const { return ho::spectrum(lambda, n_max_); }

std::optional<double> Model::h1_direct(double lambda, EnsemblePoint point) const {
  return potential_average(point, lambda);
}

}  // namespace thermohf::ho
