#include <doctest.h>

#include <cmath>
#include <cstring>

#include "thermohf/errors.hpp"
#include "thermohf/harmonic_oscillator.hpp"
#include "thermohf/ising.hpp"
#include "thermohf/sweep.hpp"

using namespace thermohf;

TEST_CASE("temperature grids") {
  const auto lin = temperature_grid(0.05, 20.0, 200, GridKind::linear);
  REQUIRE(lin.size() == 200);
  CHECK(lin.front() == 0.05);
  CHECK(lin.back() == 20.0);
  CHECK(lin[1] - lin[0] == doctest::Approx((20.0 - 0.05) / 199.0));

  const auto geo = temperature_grid(0.1, 100.0, 4, GridKind::geometric);
  CHECK(geo[0] == 0.1);
  CHECK(geo[1] == doctest::Approx(1.0));
  CHECK(geo[2] == doctest::Approx(10.0));
  CHECK(geo[3] == 100.0);

  CHECK_THROWS_AS(temperature_grid(0.0, 1.0, 10, GridKind::linear), DomainError);
  CHECK_THROWS_AS(temperature_grid(2.0, 1.0, 10, GridKind::linear), DomainError);
  CHECK_THROWS_AS(temperature_grid(0.1, 1.0, 1, GridKind::linear), DomainError);

  CHECK(parse_grid_kind("geometric") == GridKind::geometric);
  CHECK_FALSE(parse_grid_kind("log").has_value());
}

TEST_CASE("oscillator sweep reproduces the closed forms") {
  const auto grid = temperature_grid(0.05, 20.0, 50, GridKind::linear);
  const ho::Model model(ho::truncation_for(20.0, 1.0 - 1e-5));
  const auto rows = hf_sweep(model, grid);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    const auto point = EnsemblePoint::from_temperature(grid[i]);
    const auto exact = ho::closed_potentials(1.0, point);
    CHECK(row.temperature == grid[i]);
    CHECK(std::abs(row.free_energy - exact.free_energy) < 1e-10);
    CHECK(std::abs(row.energy - exact.energy) < 1e-10);
    CHECK(std::abs(row.free_energy - (row.energy - row.temperature * row.entropy)) <= 1e-10 * std::max(1.0, std::abs(row.free_energy)));
    CHECK(std::abs(row.df_dlambda - ho::potential_average(point)) < 1e-7);
    CHECK(std::abs(row.ds_dlambda - ho::entropy_lambda_derivative(point)) < 1e-6);
    REQUIRE(row.h1_direct.has_value());
    CHECK(*row.h1_direct == ho::potential_average(point));
    CHECK_FALSE(row.dh1_dtemperature.has_value());
    // Chain rule for F = E − TS at fixed T.
    CHECK(std::abs(row.df_dlambda - (row.de_dlambda - row.temperature * row.ds_dlambda)) <=
          row.df_dlambda_error + row.de_dlambda_error + row.temperature * row.ds_dlambda_error + 1e-9);
  }
}

TEST_CASE("results do not depend on the thread count") {
  ising::Params p;
  const ising::Model model(p, ising::Coupling::field);
  const auto grid = temperature_grid(0.1, 30.0, 37, GridKind::linear);
  SweepOptions one;
  one.threads = 1;
  SweepOptions many;
  many.threads = 5;
  const auto a = hf_sweep(model, grid, one);
  const auto b = hf_sweep(model, grid, many);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(std::memcmp(&a[i].energy, &b[i].energy, sizeof(double)) == 0);
    CHECK(std::memcmp(&a[i].df_dlambda, &b[i].df_dlambda, sizeof(double)) == 0);
    CHECK(*a[i].h1_direct == *b[i].h1_direct);
  }
}

TEST_CASE("errors inside a worker propagate") {
  SweepOptions options;
  options.diff.relative_step = 0.5;
  const ho::Model model(64);
  CHECK_THROWS_AS(hf_sweep(model, std::vector<double>{1.0, 2.0}, options), DomainError);
}
