#include "thermohf/numdiff.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "thermohf/errors.hpp"

namespace thermohf {

void DiffConfig::validate() const {
  if (!(relative_step > 1e-12 && relative_step < 1e-1)) {
    throw DomainError("diff config: relative_step must lie in (1e-12, 1e-1)");
  }
  if (richardson_levels < 1 || richardson_levels > 5) {
    throw DomainError("diff config: richardson_levels must lie in [1, 5]");
  }
}

namespace {

double checked(const std::function<double(double)>& f, double x) {
  const double y = f(x);
  if (!std::isfinite(y)) {
    throw NumericalError("central_diff: non-finite function value at x = " + std::to_string(x));
  }
  return y;
}

double central(const std::function<double(double)>& f, double x0, double h) {
  // Use the step that is actually representable around x0.
  const double xp = x0 + h;
  const double xm = x0 - h;
  return (checked(f, xp) - checked(f, xm)) / (xp - xm);
}

}  // namespace

DiffResult central_diff(const std::function<double(double)>& f, double x0, const DiffConfig& config) {
  config.validate();
  const double h0 = config.relative_step * std::max(std::abs(x0), 1.0);

  if (config.richardson_levels == 1) {
    const double coarse = central(f, x0, h0);
    const double fine = central(f, x0, 0.5 * h0);
    return {coarse, std::abs(fine - coarse)};
  }

  // Neville tableau: row i uses step h0 / 2^i; column k removes the h^{2k} term.
  const int levels = config.richardson_levels;
  std::vector<std::vector<double>> table(levels);
  double h = h0;
  for (int i = 0; i < levels; ++i, h *= 0.5) {
    table[i].resize(i + 1);
    table[i][0] = central(f, x0, h);
    double factor = 4.0;
    for (int k = 1; k <= i; ++k, factor *= 4.0) {
      table[i][k] = table[i][k - 1] + (table[i][k - 1] - table[i - 1][k - 1]) / (factor - 1.0);
    }
  }
  const auto& last = table[levels - 1];
  return {last[levels - 1], std::abs(last[levels - 1] - last[levels - 2])};
}

}  // namespace thermohf
