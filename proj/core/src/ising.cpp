#include "thermohf/ising.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "thermohf/errors.hpp"
#include "thermohf/oracles.hpp"

namespace thermohf::ising {

void Params::validate() const {
  if (n_spins < 2) throw DomainError("ising: need at least two spins");
  for (double v : {coupling_j, field_h, lambda1, lambda2}) {
    if (!std::isfinite(v)) throw DomainError("ising: parameters must be finite");
  }
}

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_add_exp(double x, double y) {
  if (x == kNegInf) return y;
  if (y == kNegInf) return x;
  const double hi = std::max(x, y);
  return hi + std::log1p(std::exp(std::min(x, y) - hi));
}

double log_cosh(double a) {
  a = std::abs(a);
  return a < 30.0 ? std::log(std::cosh(a)) : a - std::numbers::ln2 + std::log1p(std::exp(-2.0 * a));
}

double log_sinh_abs(double a) {
  a = std::abs(a);
  if (a == 0.0) return kNegInf;
  return a < 30.0 ? std::log(std::sinh(a)) : a - std::numbers::ln2 + std::log1p(-std::exp(-2.0 * a));
}

// Transfer-matrix eigenvalues λ± = e^{βJ}(ℓ±) with ℓ± = cosh βh ± R,
// R = √(sinh² βh + e^{−4βJ}). With r = ℓ−/ℓ+ = ±(1 − δ),
//   ln Z = NβJ + N ln ℓ+ + ln(1 + r^N),
// and δ = 2 min(cosh βh, R)/ℓ+ is carried as ln δ so that 1 + r^N stays
// accurate when |r| → 1 (frustrated odd antiferromagnetic rings).
struct Transfer {
  double log_c = 0.0;       // ln cosh βh
  double log_s = 0.0;       // ln |sinh βh|
  double log_r_mag = 0.0;   // ln R
  double log_lplus = 0.0;   // ln ℓ+
  double log_delta = 0.0;   // ln δ
  double log_abs_r = 0.0;   // ln |r| = log1p(−δ)
  bool r_negative = false;
  double log_one_plus_rn = 0.0;  // ln(1 + r^N)
  double sign_a = 0.0;
};

Transfer transfer(double j, double h, std::size_t n, double beta) {
  Transfer t;
  const double a = beta * h;
  const double b = -4.0 * beta * j;
  t.sign_a = a > 0.0 ? 1.0 : (a < 0.0 ? -1.0 : 0.0);
  t.log_c = log_cosh(a);
  t.log_s = log_sinh_abs(a);
  t.log_r_mag = 0.5 * log_add_exp(2.0 * t.log_s, b);
  t.log_lplus = log_add_exp(t.log_c, t.log_r_mag);

  t.r_negative = t.log_r_mag > t.log_c;
  t.log_delta = std::numbers::ln2 + std::min(t.log_c, t.log_r_mag) - t.log_lplus;
  const double delta = std::min(1.0, std::exp(t.log_delta));
  t.log_abs_r = std::log1p(-delta);

  const double nd = static_cast<double>(n);
  const double log_abs_rn = nd * t.log_abs_r;
  if (t.r_negative && n % 2 == 1) {
    // ln(1 − (1 − δ)^N); for tiny δ this is ln(Nδ) up to O(Nδ).
    t.log_one_plus_rn = t.log_delta < -40.0 ? std::log(nd) + t.log_delta : std::log(-std::expm1(log_abs_rn));
  } else {
    t.log_one_plus_rn = std::log1p(std::exp(log_abs_rn));
  }
  return t;
}

}  // namespace

double log_z(const Params& params, EnsemblePoint point) {
  params.validate();
  const double beta = point.beta();
  const double j = params.effective_j();
  const auto t = transfer(j, params.effective_h(), params.n_spins, beta);
  const double nd = static_cast<double>(params.n_spins);
  return nd * beta * j + nd * t.log_lplus + t.log_one_plus_rn;
}

double total_energy(const Params& params, EnsemblePoint point) {
  params.validate();
  const double beta = point.beta();
  const double j = params.effective_j();
  const double h = params.effective_h();
  const std::size_t n = params.n_spins;
  const double nd = static_cast<double>(n);
  const double b = -4.0 * beta * j;
  const auto t = transfer(j, h, n, beta);

  // β-derivatives of ln cosh βh, ln R and ln ℓ+, written with ratios bounded by one:
  // R' = (h sinh cosh − 2J e^{−4βJ}) / R.
  const double dlog_c = h * std::tanh(beta * h);
  const double dlog_r = h * t.sign_a * std::exp(t.log_s + t.log_c - 2.0 * t.log_r_mag) -
                        2.0 * j * std::exp(b - 2.0 * t.log_r_mag);
  const double c_hat = std::exp(t.log_c - t.log_lplus);
  const double r_hat = std::exp(t.log_r_mag - t.log_lplus);
  const double dlog_lplus = c_hat * dlog_c + r_hat * dlog_r;

  // d ln(1 + r^N)/dβ = N r^{N−1} r' / (1 + r^N) with r' = ∓δ' and δ' = δ · d ln δ/dβ.
  const double dlog_delta = (t.r_negative ? dlog_c : dlog_r) - dlog_lplus;
  const double sign_rn = t.r_negative && n % 2 == 1 ? -1.0 : 1.0;
  const double ratio = std::exp(t.log_delta + (nd - 1.0) * t.log_abs_r - t.log_one_plus_rn);
  const double dlog_tail = -nd * sign_rn * ratio * dlog_delta;

  const double dlog_z = nd * j + nd * dlog_lplus + dlog_tail;
  return -dlog_z;
}

ThermoPotentials potentials(const Params& params, EnsemblePoint point) {
  ThermoPotentials out;
  out.ln_z = log_z(params, point);
  out.free_energy = -out.ln_z / point.beta();
  out.energy = total_energy(params, point);
  out.entropy = point.beta() * (out.energy - out.free_energy);
  return out;
}

DiffResult hj_average(const Params& params, EnsemblePoint point, const DiffConfig& config) {
  return central_diff(
      [&](double l1) {
        Params p = params;
        p.lambda1 = l1;
        return -log_z(p, point) / point.beta();
      },
      params.lambda1, config);
}

DiffResult hh_average(const Params& params, EnsemblePoint point, const DiffConfig& config) {
  return central_diff(
      [&](double l2) {
        Params p = params;
        p.lambda2 = l2;
        return -log_z(p, point) / point.beta();
      },
      params.lambda2, config);
}

Model::Model(Params base, Coupling coupling) : base_(base), coupling_(coupling) { base_.validate(); }

Params Model::at(double lambda) const {
  Params p = base_;
  (coupling_ == Coupling::bond ? p.lambda1 : p.lambda2) = lambda;
  return p;
}

ThermoPotentials Model::potentials(double lambda, EnsemblePoint point) const {
  return ising::potentials(at(lambda), point);
}

std::optional<double> Model::h1_direct(double lambda, EnsemblePoint point) const {
  if (base_.n_spins > oracles::kMaxEnumeratedSpins) return std::nullopt;
  const auto result = oracles::ising_enumerate(at(lambda), point);
  return coupling_ == Coupling::bond ? -base_.coupling_j * result.bond_correlation
                                     : -base_.field_h * result.magnetization;
}

}  // namespace thermohf::ising
