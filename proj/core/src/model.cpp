#include "thermohf/model.hpp"

namespace thermohf {

double select(const ThermoPotentials& p, PotentialSelector which) {
  switch (which) {
    case PotentialSelector::free_energy:
      return p.free_energy;
    case PotentialSelector::energy:
      return p.energy;
    case PotentialSelector::entropy:
      return p.entropy;
  }
  return p.free_energy;
}

DiffResult lambda_derivative_of(PotentialSelector which, const ParametricModel& model,
                                EnsemblePoint point, const DiffConfig& config, double lambda) {
  return central_diff(
      [&](double l) { return select(model.potentials(l, point), which); }, lambda, config);
}

}  // namespace thermohf
