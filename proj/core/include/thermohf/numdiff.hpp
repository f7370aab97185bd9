#pragma once

#include <functional>

namespace thermohf {

struct DiffConfig {
  /// Step is relative_step · max(|x0|, 1).
  double relative_step = 1e-5;
  /// Number of step halvings combined by Richardson extrapolation (1 = plain central difference).
  int richardson_levels = 2;

  /// Throws DomainError unless relative_step ∈ (1e−12, 1e−1) and richardson_levels ∈ [1, 5].
  void validate() const;
};

struct DiffResult {
  double derivative = 0.0;
  double error_estimate = 0.0;
};

/// Central difference [f(x0+h) − f(x0−h)] / 2h refined by Richardson
/// extrapolation over h, h/2, h/4, ...
///
/// error_estimate is |T(L−1, L−1) − T(L−1, L−2)|, the change contributed by
/// the last extrapolation column. For richardson_levels == 1 one extra
/// half-step difference is evaluated only to produce the estimate.
///
/// Throws NumericalError if f returns a non-finite value.
DiffResult central_diff(const std::function<double(double)>& f, double x0,
                        const DiffConfig& config = {});

}  // namespace thermohf
