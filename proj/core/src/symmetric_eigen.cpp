#include "thermohf/symmetric_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "thermohf/errors.hpp"

namespace thermohf::linalg {

SymmetricMatrix::SymmetricMatrix(std::size_t order) : order_(order), data_(order * order, 0.0) {}

SymmetricMatrix SymmetricMatrix::identity(std::size_t order) {
  SymmetricMatrix m(order);
  for (std::size_t i = 0; i < order; ++i) m.set(i, i, 1.0);
  return m;
}

double SymmetricMatrix::frobenius_norm() const noexcept {
  double sum = 0.0;
  for (double x : data_) sum += x * x;
  return std::sqrt(sum);
}

double SymmetricMatrix::trace() const noexcept {
  double sum = 0.0;
  for (std::size_t i = 0; i < order_; ++i) sum += data_[i * order_ + i];
  return sum;
}

EigenvectorMatrix::EigenvectorMatrix(std::size_t order) : order_(order), data_(order * order, 0.0) {
  for (std::size_t i = 0; i < order; ++i) data_[i * order + i] = 1.0;
}

namespace {

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) sum += a[i * n + j] * a[i * n + j];
  }
  return std::sqrt(2.0 * sum);
}

}  // namespace

SymmetricEigenDecomposition jacobi_eigen(SymmetricMatrix matrix, const JacobiOptions& options) {
  const std::size_t n = matrix.order();
  if (n == 0) throw DomainError("jacobi_eigen: empty matrix");
  for (double x : matrix.data()) {
    if (!std::isfinite(x)) throw DomainError("jacobi_eigen: non-finite entry");
  }

  const double norm = matrix.frobenius_norm();
  std::vector<double> a(matrix.data().begin(), matrix.data().end());
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };

  EigenvectorMatrix v = options.compute_eigenvectors ? EigenvectorMatrix(n) : EigenvectorMatrix();

  int sweep = 0;
  double off = off_diagonal_norm(a, n);
  while (off > options.tolerance * norm) {
    if (sweep == options.max_sweeps) {
      throw NumericalError("jacobi_eigen: no convergence after " + std::to_string(sweep) +
                               " sweeps, off-diagonal norm " + std::to_string(off),
                           off);
    }
    ++sweep;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double app = at(p, p);
        const double aqq = at(q, q);

        // Below rounding of both diagonal entries: the rotation would be a no-op.
        const double g = 100.0 * std::abs(apq);
        if (sweep > 4 && std::abs(app) + g == std::abs(app) && std::abs(aqq) + g == std::abs(aqq)) {
          at(p, q) = 0.0;
          at(q, p) = 0.0;
          continue;
        }

        const double theta = (aqq - app) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        at(p, p) = app - t * apq;
        at(q, q) = aqq + t * apq;
        at(p, q) = 0.0;
        at(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = at(k, p);
          const double akq = at(k, q);
          const double new_kp = akp - s * (akq + tau * akp);
          const double new_kq = akq + s * (akp - tau * akq);
          at(k, p) = new_kp;
          at(p, k) = new_kp;
          at(k, q) = new_kq;
          at(q, k) = new_kq;
        }
        if (options.compute_eigenvectors) {
          for (std::size_t k = 0; k < n; ++k) {
            const double vkp = v(k, p);
            const double vkq = v(k, q);
            v(k, p) = vkp - s * (vkq + tau * vkp);
            v(k, q) = vkq + s * (vkp - tau * vkq);
          }
        }
      }
    }
    off = off_diagonal_norm(a, n);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return at(i, i) < at(j, j); });

  SymmetricEigenDecomposition out;
  out.sweeps = sweep;
  out.eigenvalues.reserve(n);
  for (auto i : order) out.eigenvalues.push_back(at(i, i));
  if (options.compute_eigenvectors) {
    out.eigenvectors = EigenvectorMatrix(n);
    for (std::size_t col = 0; col < n; ++col) {
      for (std::size_t row = 0; row < n; ++row) out.eigenvectors(row, col) = v(row, order[col]);
    }
  }
  return out;
}

double quadratic_form(const SymmetricMatrix& a, std::span<const double> x) {
  const std::size_t n = a.order();
  if (x.size() != n) throw ContractError("quadratic_form: vector length does not match matrix order");
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) row += a(i, j) * x[j];
    sum += x[i] * row;
  }
  return sum;
}

}  // namespace thermohf::linalg
