#include <doctest.h>

#include <cmath>
#include <random>

#include "thermohf/errors.hpp"
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

lipkin::Params lipkin_params(int n, double eps, double v, double lambda = 1.0) {
  lipkin::Params p;
  p.n_particles = n;
  p.epsilon = eps;
  p.v_coupling = v;
  p.lambda = lambda;
  return p;
}

}  // namespace

TEST_CASE("ising enumeration examples") {
  const auto b1 = EnsemblePoint::from_beta(1.0);
  CHECK(oracles::ising_enumerate(chain(1.0, 0.0, 2), b1).ln_z == doctest::Approx(std::log(4.0 * std::cosh(2.0))).epsilon(1e-15));
  CHECK(oracles::ising_enumerate(chain(0.0, 1.0, 3), b1).ln_z == doctest::Approx(3.0 * std::log(2.0 * std::cosh(1.0))).epsilon(1e-15));

  const auto fig = oracles::ising_enumerate(chain(2.0, 1.0, 10), b1);
  CHECK(std::abs(fig.ln_z - ising::log_z(chain(2.0, 1.0, 10), b1)) <= 1e-12 * fig.ln_z);
  CHECK(fig.ln_z == doctest::Approx(30.00052501458773).epsilon(1e-14));
  CHECK(fig.h_j_average == doctest::Approx(-19.995800265033925).epsilon(1e-13));
  CHECK(fig.h_h_average == doctest::Approx(-9.998785702024152).epsilon(1e-13));
  CHECK(std::abs(fig.energy - (fig.h_j_average + fig.h_h_average)) <= 1e-12);

  CHECK_THROWS_AS(oracles::ising_enumerate(chain(1.0, 1.0, 21), b1), CapacityError);
}

TEST_CASE("property: enumeration agrees with the transfer matrix") {
  std::mt19937_64 rng(123);
  std::uniform_real_distribution<double> coupling(-2.0, 2.0);
  std::uniform_real_distribution<double> beta(0.05, 3.0);
  std::uniform_real_distribution<double> mult(0.5, 1.5);
  for (std::size_t n = 2; n <= 12; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      auto p = chain(coupling(rng), coupling(rng), n);
      p.lambda1 = mult(rng);
      p.lambda2 = mult(rng);
      const auto point = EnsemblePoint::from_beta(beta(rng));
      const auto en = oracles::ising_enumerate(p, point);
      CHECK(std::abs(en.ln_z - ising::log_z(p, point)) <= 1e-12 * std::abs(en.ln_z));
      CHECK(std::abs(en.h_j_average - ising::hj_average(p, point).derivative * p.lambda1) <= 1e-6 * std::max(1.0, std::abs(en.h_j_average)));
      CHECK(std::abs(en.h_h_average - ising::hh_average(p, point).derivative * p.lambda2) <= 1e-6 * std::max(1.0, std::abs(en.h_h_average)));
      CHECK(std::abs(en.energy - ising::total_energy(p, point)) <= 1e-9 * std::max(1.0, std::abs(en.energy)));
    }
  }
}

TEST_CASE("fock oracle examples") {
  const auto one = oracles::lipkin_fock(lipkin_params(1, 1.0, 0.0));
  REQUIRE(one.size() == 2);
  CHECK(one.levels()[0].energy == -0.5);
  CHECK(one.levels()[1].energy == 0.5);

  const auto two = oracles::lipkin_fock(lipkin_params(2, 1.0, 3.0)).expanded_energies();
  REQUIRE(two.size() == 4);
  CHECK(two[0] == doctest::Approx(-std::sqrt(10.0)).epsilon(1e-14));
  CHECK(std::abs(two[1]) < 1e-14);
  CHECK(std::abs(two[2]) < 1e-14);
  CHECK(two[3] == doctest::Approx(std::sqrt(10.0)).epsilon(1e-14));

  CHECK_THROWS_AS(oracles::lipkin_fock(lipkin_params(13, 1.0, 1.0)), CapacityError);
}

TEST_CASE("property: block construction agrees with the Fock space") {
  struct Case {
    int n;
    double eps, v, lambda;
  };
  for (const auto& c : {Case{3, 1.0, 3.0, 1.0}, Case{4, 0.7, -1.2, 1.3}, Case{5, 1.0, 3.0, 0.9}, Case{6, 2.0, 0.5, 1.0},
                        Case{7, 1.0, 1.0, 1.1}, Case{8, 1.0, 3.0, 1.0}}) {
    const auto p = lipkin_params(c.n, c.eps, c.v, c.lambda);
    const auto blocks = lipkin::spectrum(p);
    const auto fock = oracles::lipkin_fock(p);
    const auto eb = blocks.expanded_energies();
    const auto ef = fock.expanded_energies();
    REQUIRE(eb.size() == ef.size());
    for (std::size_t k = 0; k < eb.size(); ++k) CHECK(std::abs(eb[k] - ef[k]) <= 1e-8);
    for (double beta : {0.01, 0.3, 1.0, 5.0}) {
      const auto point = EnsemblePoint::from_beta(beta);
      CHECK(std::abs(log_partition(blocks, point) - log_partition(fock, point)) <= 1e-9);
    }
  }
}
