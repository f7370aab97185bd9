#include <doctest.h>

#include <cmath>
#include <random>

#include "thermohf/errors.hpp"
#include "thermohf/ising.hpp"
#include "thermohf/oracles.hpp"

using namespace thermohf;

namespace {

ising::Params chain(double j, double h, std::size_t n) {
  ising::Params p;
  p.coupling_j = j;
  p.field_h = h;
  p.n_spins = n;
  return p;
}

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(ising::log_z(chain(1, 1, 1), EnsemblePoint::from_beta(1)), DomainError);
  CHECK_THROWS_AS(ising::log_z(chain(NAN, 1, 4), EnsemblePoint::from_beta(1)), DomainError);
}

TEST_CASE("zero field reduces to cosh/sinh powers") {
  for (double j : {-1.5, 0.3, 2.0}) {
    for (std::size_t n : {2u, 3u, 7u, 10u}) {
      for (double beta : {0.2, 1.0, 3.0}) {
        const double expected = std::log(std::pow(2 * std::cosh(beta * j), n) + std::pow(2 * std::sinh(beta * j), n));
        CHECK(ising::log_z(chain(j, 0.0, n), EnsemblePoint::from_beta(beta)) == doctest::Approx(expected).epsilon(1e-13));
      }
    }
  }
}

TEST_CASE("two spins: both periodic bonds are counted") {
  // Z = 2e² + 2e⁻² = 4 cosh 2 from the four configurations.
  CHECK(ising::log_z(chain(1.0, 0.0, 2), EnsemblePoint::from_beta(1.0)) ==
        doctest::Approx(std::log(15.048782764334526)).epsilon(1e-15));
}

TEST_CASE("unit multipliers reproduce the plain chain") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> coupling(-2.0, 2.0);
  for (int i = 0; i < 50; ++i) {
    auto p = chain(coupling(rng), coupling(rng), 2 + i % 11);
    const auto point = EnsemblePoint::from_beta(0.1 + 0.1 * i);
    auto scaled = p;
    scaled.coupling_j *= 0.5;
    scaled.lambda1 = 2.0;
    scaled.field_h *= 4.0;
    scaled.lambda2 = 0.25;
    CHECK(ising::log_z(p, point) == doctest::Approx(ising::log_z(scaled, point)).epsilon(1e-14));
  }
}

TEST_CASE("property: lnZ is even in h") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> coupling(-3.0, 3.0);
  for (int i = 0; i < 100; ++i) {
    auto p = chain(coupling(rng), coupling(rng), 2 + i % 15);
    auto q = p;
    q.field_h = -p.field_h;
    const auto point = EnsemblePoint::from_beta(0.05 + 0.05 * i);
    CHECK(std::abs(ising::log_z(p, point) - ising::log_z(q, point)) <= 1e-13 * std::max(1.0, ising::log_z(p, point)));
  }
}

TEST_CASE("extreme couplings stay finite and match enumeration") {
  for (double j : {-50.0, -5.0, 5.0, 50.0}) {
    for (std::size_t n : {5u, 10u, 11u}) {
      auto p = chain(j, 0.3, n);
      const auto point = EnsemblePoint::from_beta(10.0);
      const double tm = ising::log_z(p, point);
      const double en = oracles::ising_enumerate(p, point).ln_z;
      CHECK(std::isfinite(tm));
      CHECK(std::abs(tm - en) <= 1e-12 * std::abs(en));
      CHECK(ising::total_energy(p, point) ==
            doctest::Approx(oracles::ising_enumerate(p, point).energy).epsilon(1e-9));
    }
  }
  auto big = chain(2.0, 1.0, 100000);
  CHECK(std::isfinite(ising::log_z(big, EnsemblePoint::from_beta(100.0))));
  CHECK(std::isfinite(ising::total_energy(big, EnsemblePoint::from_beta(100.0))));
}

TEST_CASE("analytic energy matches central differences in beta") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> coupling(-2.5, 2.5);
  std::uniform_real_distribution<double> beta_dist(0.05, 4.0);
  for (int i = 0; i < 200; ++i) {
    const auto p = chain(coupling(rng), coupling(rng), 2 + i % 13);
    const double beta = beta_dist(rng);
    const auto d = central_diff([&](double b) { return ising::log_z(p, EnsemblePoint::from_beta(b)); }, beta);
    const double e = ising::total_energy(p, EnsemblePoint::from_beta(beta));
    CHECK(std::abs(e + d.derivative) <= 1e-7 * std::max(1.0, std::abs(e)));
  }
  // h = 0 and J = 0 corners.
  CHECK(ising::total_energy(chain(0.0, 0.0, 6), EnsemblePoint::from_beta(1.0)) == doctest::Approx(0.0));
  CHECK(ising::total_energy(chain(0.0, 1.0, 6), EnsemblePoint::from_beta(1.0)) ==
        doctest::Approx(-6.0 * std::tanh(1.0)).epsilon(1e-14));
}

TEST_CASE("bond and field averages") {
  const auto fig = chain(2.0, 1.0, 10);
  const auto cold = EnsemblePoint::from_temperature(0.05);
  CHECK(ising::hj_average(fig, cold).derivative / 10.0 == doctest::Approx(-2.0).epsilon(1e-6));
  CHECK(ising::hh_average(fig, cold).derivative / 10.0 == doctest::Approx(-1.0).epsilon(1e-6));
  CHECK(ising::total_energy(fig, cold) / 10.0 == doctest::Approx(-3.0).epsilon(1e-9));

  for (double t : {0.1, 1.0, 10.0}) {
    const auto point = EnsemblePoint::from_temperature(t);
    CHECK(std::abs(ising::hj_average(chain(0.0, 1.0, 10), point).derivative) < 1e-10);
    CHECK(std::abs(ising::hh_average(chain(2.0, 0.0, 10), point).derivative) < 1e-10);
  }

  CHECK(std::abs(ising::hh_average(fig, EnsemblePoint::from_temperature(1e4)).derivative / 10.0) < 1e-3);

  // Brute-force reference: N = 4, J = 1, h = 0.5, β = 1.
  const auto small = chain(1.0, 0.5, 4);
  const auto b1 = EnsemblePoint::from_beta(1.0);
  CHECK(std::abs(ising::hj_average(small, b1).derivative - (-3.8462739585653867)) < 1e-7);
  CHECK(std::abs(ising::hh_average(small, b1).derivative - (-1.8761299723126854)) < 1e-7);
}

TEST_CASE("decomposition and high-temperature law") {
  const auto fig = chain(2.0, 1.0, 10);
  for (int i = 0; i < 100; ++i) {
    const double t = 0.1 + (30.0 - 0.1) * i / 99.0;
    const auto point = EnsemblePoint::from_temperature(t);
    const auto hj = ising::hj_average(fig, point);
    const auto hh = ising::hh_average(fig, point);
    const double e = ising::total_energy(fig, point);
    CHECK(std::abs(hj.derivative + hh.derivative - e) <= std::max(1e-6, 10.0 * (hj.error_estimate + hh.error_estimate)));
  }
  for (auto p : {fig, chain(1.0, 3.0, 6), chain(-1.0, 0.5, 7)}) {
    const double t = 100.0 * std::max(std::abs(p.coupling_j), std::abs(p.field_h));
    const double law = (p.coupling_j * p.coupling_j + p.field_h * p.field_h) / t;
    const double e = ising::total_energy(p, EnsemblePoint::from_temperature(t)) / static_cast<double>(p.n_spins);
    CHECK(std::abs(e + law) <= 0.05 * law);
  }
}

TEST_CASE("model wraps either coupling") {
  const ising::Model bond(chain(2.0, 1.0, 8), ising::Coupling::bond);
  const ising::Model field(chain(2.0, 1.0, 8), ising::Coupling::field);
  const auto point = EnsemblePoint::from_temperature(2.0);
  CHECK(bond.at(1.5).lambda1 == 1.5);
  CHECK(field.at(1.5).lambda2 == 1.5);
  const auto df_bond = lambda_derivative_of(PotentialSelector::free_energy, bond, point);
  const auto df_field = lambda_derivative_of(PotentialSelector::free_energy, field, point);
  CHECK(df_bond.derivative == doctest::Approx(*bond.h1_direct(1.0, point)).epsilon(1e-8));
  CHECK(df_field.derivative == doctest::Approx(*field.h1_direct(1.0, point)).epsilon(1e-8));
  CHECK_FALSE(ising::Model(chain(2.0, 1.0, 21), ising::Coupling::bond).h1_direct(1.0, point).has_value());
}
