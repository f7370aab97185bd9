#include "thermohf_app/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>

#include "thermohf/harmonic_oscillator.hpp"
#include "thermohf/ising.hpp"
#include "thermohf/lipkin.hpp"
#include "thermohf/oracles.hpp"
#include "thermohf/sweep.hpp"
#include "thermohf_app/run_config.hpp"

namespace thermohf::app {

VerifyScope parse_scope(std::string_view text) {
  if (text == "all") return VerifyScope::all;
  if (text == "ho") return VerifyScope::ho;
  if (text == "ising") return VerifyScope::ising;
  if (text == "lipkin") return VerifyScope::lipkin;
  throw UsageError("unknown scope '" + std::string(text) + "' (expected all, ho, ising or lipkin)");
}

namespace {

class Collector {
 public:
  explicit Collector(double scale) : scale_(scale) {}

  void add(std::string name, double deviation, double tolerance) {
    tolerance *= scale_;
    results_.push_back({std::move(name), deviation, tolerance, std::isfinite(deviation) && deviation <= tolerance});
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  double scale_;
  std::vector<CheckResult> results_;
};

void verify_ho(Collector& out) {
  const auto grid = temperature_grid(0.05, 20.0, 200, GridKind::linear);
  const ho::Model model(ho::truncation_for(50.0, 1.0 - DiffConfig{}.relative_step));
  const auto rows = hf_sweep(model, grid);

  double potentials_dev = 0.0;
  double hf_dev = 0.0;
  double entropy_dev = 0.0;
  double virial_dev = 0.0;
  for (const auto& row : rows) {
    const auto point = EnsemblePoint::from_temperature(row.temperature);
    const auto exact = ho::closed_potentials(1.0, point);
    potentials_dev = std::max({potentials_dev, std::abs(row.free_energy - exact.free_energy),
                               std::abs(row.energy - exact.energy), std::abs(row.entropy - exact.entropy)});
    hf_dev = std::max(hf_dev, std::abs(row.df_dlambda - ho::potential_average(point)));
    entropy_dev = std::max(entropy_dev, std::abs(row.ds_dlambda - ho::entropy_lambda_derivative(point)));
    virial_dev = std::max(virial_dev, std::abs(ho::potential_average(point) - 0.5 * exact.energy));
  }
  out.add("ho.closed_form_potentials", potentials_dev, 1e-6);
  out.add("ho.hf_theorem_dF_dlambda", hf_dev, 1e-7);
  out.add("ho.entropy_dS_dlambda", entropy_dev, 1e-6);
  out.add("ho.virial", virial_dev, 1e-10);

  double corollary_dev = 0.0;
  for (double t : {0.02, 0.5, 2.0, 10.0, 50.0}) {
    const auto point = EnsemblePoint::from_temperature(t);
    const auto ds = lambda_derivative_of(PotentialSelector::entropy, model, point);
    const auto dt = central_diff([](double temp) { return ho::potential_average(EnsemblePoint::from_temperature(temp)); }, t);
    corollary_dev = std::max(corollary_dev, std::abs(ds.derivative + dt.derivative));
  }
  out.add("ho.entropy_corollary", corollary_dev, 1e-6);

  out.add("ho.low_T_potential_quarter", std::abs(ho::potential_average(EnsemblePoint::from_temperature(0.01)) - 0.25), 1e-12);
  const auto hot = EnsemblePoint::from_temperature(20.0);
  const double df_hot = lambda_derivative_of(PotentialSelector::free_energy, model, hot).derivative;
  out.add("ho.high_T_dF_dlambda_T_over_2", std::abs(df_hot / 10.0 - 1.0), 0.02);
  const auto hotter = EnsemblePoint::from_temperature(50.0);
  const double ds_hot = lambda_derivative_of(PotentialSelector::entropy, model, hotter).derivative;
  out.add("ho.high_T_dS_dlambda_minus_half", std::abs(ds_hot / -0.5 - 1.0), 0.02);

  const auto ground = central_diff([](double l) { return ho::spectrum(l, 0).ground_energy(); }, 1.0);
  out.add("ho.zero_T_hf_quarter", std::abs(ground.derivative - 0.25), 1e-9);
}

void verify_ising(Collector& out, int max_spins) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> coupling(-2.0, 2.0);
  std::uniform_real_distribution<double> log_beta(std::log(0.05), std::log(5.0));
  std::uniform_real_distribution<double> multiplier(0.5, 1.5);
  double ln_z_dev = 0.0;
  double averages_dev = 0.0;
  double symmetry_dev = 0.0;
  for (int n = 2; n <= max_spins; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      ising::Params p;
      p.coupling_j = coupling(rng);
      p.field_h = coupling(rng);
      p.n_spins = static_cast<std::size_t>(n);
      p.lambda1 = multiplier(rng);
      p.lambda2 = multiplier(rng);
      const auto point = EnsemblePoint::from_beta(std::exp(log_beta(rng)));
      const auto en = oracles::ising_enumerate(p, point);
      const double tm = ising::log_z(p, point);
      ln_z_dev = std::max(ln_z_dev, std::abs(tm - en.ln_z) / std::abs(en.ln_z));

      // ∂F/∂λ₁ = ⟨−J Σ s s⟩, so scale by λ₁ to compare with the bond energy.
      const double hj = ising::hj_average(p, point).derivative * p.lambda1;
      const double hh = ising::hh_average(p, point).derivative * p.lambda2;
      averages_dev = std::max({averages_dev, std::abs(hj - en.h_j_average) / std::max(1.0, std::abs(en.h_j_average)),
                               std::abs(hh - en.h_h_average) / std::max(1.0, std::abs(en.h_h_average))});

      auto flipped = p;
      flipped.field_h = -p.field_h;
      symmetry_dev = std::max(symmetry_dev, std::abs(ising::log_z(flipped, point) - tm) / std::max(1.0, tm));
    }
  }
  out.add("ising.transfer_matrix_vs_enumeration_lnZ_rel", ln_z_dev, 1e-12);
  out.add("ising.hf_averages_vs_enumeration", averages_dev, 1e-6);
  out.add("ising.lnZ_even_in_h", symmetry_dev, 1e-13);

  ising::Params fig;  // J = 2, h = 1, N = 10
  const double n = static_cast<double>(fig.n_spins);
  double decomposition_dev = 0.0;
  for (double t : temperature_grid(0.1, 30.0, 200, GridKind::linear)) {
    const auto point = EnsemblePoint::from_temperature(t);
    const double sum = ising::hj_average(fig, point).derivative + ising::hh_average(fig, point).derivative;
    decomposition_dev = std::max(decomposition_dev, std::abs(sum - ising::total_energy(fig, point)));
  }
  out.add("ising.hf_decomposition_HJ_plus_Hh_equals_E", decomposition_dev, 1e-6 * n);

  const auto cold = EnsemblePoint::from_temperature(0.1);
  out.add("ising.low_T_HJ_per_spin_minus_J", std::abs(ising::hj_average(fig, cold).derivative / n + 2.0), 0.01);
  out.add("ising.low_T_Hh_per_spin_minus_h", std::abs(ising::hh_average(fig, cold).derivative / n + 1.0), 0.01);
  out.add("ising.low_T_E_per_spin_minus_J_plus_h", std::abs(ising::total_energy(fig, cold) / n + 3.0), 0.01);
  const double t_hot = 300.0;
  const double law = -(2.0 * 2.0 + 1.0 * 1.0) / t_hot;
  out.add("ising.high_T_E_per_spin_rel", std::abs(ising::total_energy(fig, EnsemblePoint::from_temperature(t_hot)) / n / law - 1.0), 0.05);
}

void verify_lipkin(Collector& out, int fock_particles) {
  double dimension_dev = 0.0;
  for (int n = 1; n <= lipkin::kMaxParticlesForMultiplicity; ++n) {
    __extension__ typedef unsigned __int128 u128;
    u128 total = 0;
    for (int tj : lipkin::twice_j_values(n)) total += static_cast<u128>(tj + 1) * lipkin::multiplicity(n, tj);
    if (total != (u128{1} << n)) dimension_dev = 1.0;
  }
  out.add("lipkin.multiplicity_dimension_sum_2^N_(N<=64)", dimension_dev, 0.0);

  lipkin::Params small;
  small.n_particles = fock_particles;
  const auto blocks = lipkin::spectrum(small);
  const auto fock = oracles::lipkin_fock(small);
  double ln_z_dev = 0.0;
  for (double beta : {0.01, 0.03, 0.1, 0.2, 0.5, 1.0, 2.0, 3.0, 5.0, 10.0}) {
    const auto point = EnsemblePoint::from_beta(beta);
    ln_z_dev = std::max(ln_z_dev, std::abs(log_partition(blocks, point) - log_partition(fock, point)));
  }
  out.add("lipkin.blocks_vs_fock_lnZ_N=" + std::to_string(fock_particles), ln_z_dev, 1e-9);
  const auto eb = blocks.expanded_energies();
  const auto ef = fock.expanded_energies();
  double level_dev = eb.size() == ef.size() ? 0.0 : INFINITY;
  for (std::size_t k = 0; k < std::min(eb.size(), ef.size()); ++k) level_dev = std::max(level_dev, std::abs(eb[k] - ef[k]));
  out.add("lipkin.blocks_vs_fock_levels_N=" + std::to_string(fock_particles), level_dev, 1e-8);

  lipkin::Params fig;  // N = 10, ε = 1, V = 3
  const auto rows = lipkin::hf_suite(fig, temperature_grid(0.1, 100.0, 50, GridKind::geometric));
  double hf_dev = 0.0;
  double corollary_dev = 0.0;
  for (const auto& row : rows) {
    hf_dev = std::max(hf_dev, std::abs(row.df_dlambda - *row.h1_direct) / std::max(1.0, std::abs(*row.h1_direct)));
    corollary_dev = std::max(corollary_dev, std::abs(row.ds_dlambda + *row.dh1_dtemperature));
  }
  out.add("lipkin.hf_theorem_dF_dlambda_vs_direct_rel", hf_dev, 1e-6);
  out.add("lipkin.entropy_corollary", corollary_dev, 1e-4);

  const auto hot = potentials(lipkin::spectrum(fig), EnsemblePoint::from_temperature(1e4));
  out.add("lipkin.high_T_entropy_N_ln2", std::abs(hot.entropy - 10.0 * std::log(2.0)), 1e-3);

  const auto fine = lipkin::hf_suite(fig, temperature_grid(0.1, 100.0, 200, GridKind::geometric));
  const auto dip = std::min_element(fine.begin(), fine.end(),
                                    [](const SweepRow& a, const SweepRow& b) { return a.de_dlambda < b.de_dlambda; });
  const double t_dip = dip->temperature;
  out.add("lipkin.dE_dlambda_minimum_in_[5,20]", t_dip < 5.0 ? 5.0 - t_dip : std::max(0.0, t_dip - 20.0), 0.0);

  auto ground_of = [&](double lambda) {
    auto p = fig;
    p.lambda = lambda;
    return lipkin::spectrum(p).ground_energy();
  };
  const double slope = central_diff(ground_of, 1.0).derivative;
  const double cold = lipkin::h1_average_direct(fig, EnsemblePoint::from_temperature(1e-3));
  out.add("lipkin.zero_T_hf_ground_state", std::abs(cold - slope), 1e-7);
}

}  // namespace

std::vector<CheckResult> run_verify(const VerifySettings& settings) {
  Collector out(settings.tolerance_scale);
  const bool all = settings.scope == VerifyScope::all;
  if (all || settings.scope == VerifyScope::ho) verify_ho(out);
  if (all || settings.scope == VerifyScope::ising) verify_ising(out, settings.ising_max_spins);
  if (all || settings.scope == VerifyScope::lipkin) verify_lipkin(out, settings.lipkin_fock_particles);
  return out.take();
}

bool print_report(std::ostream& out, const std::vector<CheckResult>& results, bool color) {
  bool all_passed = true;
  for (const auto& r : results) {
    all_passed = all_passed && r.passed;
    const char* tag = r.passed ? "PASS" : "FAIL";
    if (color) {
      out << (r.passed ? "\033[32m" : "\033[31m") << tag << "\033[0m";
    } else {
      out << tag;
    }
    std::ostringstream line;
    line << std::scientific << std::setprecision(3) << "  deviation=" << r.deviation << "  tolerance=" << r.tolerance;
    out << "  " << std::left << std::setw(52) << r.name << line.str() << '\n';
  }
  out << (all_passed ? "all checks passed" : "some checks FAILED") << " (" << results.size() << " checks)\n";
  return all_passed;
}

}  // namespace thermohf::app
