#include <doctest.h>

#include <cmath>

#include "thermohf/errors.hpp"
#include "thermohf/harmonic_oscillator.hpp"
#include "thermohf/model.hpp"
#include "thermohf/numdiff.hpp"

using namespace thermohf;

namespace {

// H^λ with H₁ ≡ 0: the spectrum ignores λ.
class FrozenModel final : public SpectralModel {
 public:
  std::string name() const override { return "frozen"; }
  Spectrum spectrum(double) const override { return Spectrum({{-1.0, 1}, {0.3, 2}, {2.0, 1}}); }
};

}  // namespace

TEST_CASE("config validation") {
  CHECK_NOTHROW(DiffConfig{}.validate());
  CHECK_THROWS_AS((DiffConfig{1e-13, 2}.validate()), DomainError);
  CHECK_THROWS_AS((DiffConfig{0.1, 2}.validate()), DomainError);
  CHECK_THROWS_AS((DiffConfig{1e-5, 0}.validate()), DomainError);
  CHECK_THROWS_AS((DiffConfig{1e-5, 6}.validate()), DomainError);
}

TEST_CASE("central_diff examples") {
  CHECK(std::abs(central_diff([](double x) { return x * x; }, 3.0).derivative - 6.0) < 1e-9);
  CHECK(std::abs(central_diff([](double x) { return std::exp(x); }, 0.0).derivative - 1.0) < 1e-10);

  for (int levels = 1; levels <= 5; ++levels) {
    const DiffConfig config{1e-3, levels};
    const auto d = central_diff([](double x) { return std::sin(x); }, 0.7, config);
    CHECK(d.derivative == doctest::Approx(std::cos(0.7)).epsilon(1e-6));
    CHECK(d.error_estimate >= 0.0);
  }
}

TEST_CASE("non-finite evaluation is reported") {
  CHECK_THROWS_AS(central_diff([](double x) { return std::log(x); }, 0.0), NumericalError);
  CHECK_THROWS_AS(central_diff([](double) { return NAN; }, 1.0), NumericalError);
}

TEST_CASE("property: halving the step moves the result by less than the error estimate") {
  auto check = [](auto f, double x0) {
    for (double step : {1e-2, 3e-3, 1e-3}) {
      const auto coarse = central_diff(f, x0, {step, 2});
      const auto fine = central_diff(f, x0, {step / 2, 2});
      CHECK(std::abs(fine.derivative - coarse.derivative) < coarse.error_estimate);
    }
  };
  check([](double x) { return std::sin(x); }, 0.7);
  check([](double x) { return std::exp(2.0 * x); }, 0.3);
  check([](double x) { return std::log(x); }, 1.5);
  check([](double x) { return 1.0 / (1.0 + x * x); }, 0.4);
}

TEST_CASE("lambda derivatives of the oscillator at beta = 1") {
  const ho::Model model(ho::truncation_for(1.0, 0.5));
  const auto point = EnsemblePoint::from_beta(1.0);
  const auto df = lambda_derivative_of(PotentialSelector::free_energy, model, point);
  CHECK(std::abs(df.derivative - 0.5409883534346632) < 1e-8);
  const auto ds = lambda_derivative_of(PotentialSelector::entropy, model, point);
  CHECK(std::abs(ds.derivative - (-0.4603367971038962)) < 1e-8);
  const auto de = lambda_derivative_of(PotentialSelector::energy, model, point);
  // F = E − TS holds for every λ, so it holds for the derivatives too.
  CHECK(std::abs(df.derivative - (de.derivative - point.temperature() * ds.derivative)) <
        df.error_estimate + de.error_estimate + ds.error_estimate + 1e-12);
}

TEST_CASE("lambda-independent spectrum has zero derivative") {
  const FrozenModel model;
  for (auto which : {PotentialSelector::free_energy, PotentialSelector::energy, PotentialSelector::entropy}) {
    CHECK(std::abs(lambda_derivative_of(which, model, EnsemblePoint::from_beta(0.7)).derivative) < 1e-10);
  }
}
