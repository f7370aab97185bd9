#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace thermohf::linalg {

/// Dense real symmetric matrix. Both triangles are stored and every write
/// goes to (i, j) and (j, i), so the matrix is exactly symmetric.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(std::size_t order);

  static SymmetricMatrix identity(std::size_t order);

  std::size_t order() const noexcept { return order_; }

  double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * order_ + j]; }
  void set(std::size_t i, std::size_t j, double value) noexcept {
    data_[i * order_ + j] = value;
    data_[j * order_ + i] = value;
  }
  void add(std::size_t i, std::size_t j, double value) noexcept {
    data_[i * order_ + j] += value;
    if (i != j) data_[j * order_ + i] += value;
  }

  double frobenius_norm() const noexcept;
  double trace() const noexcept;

  /// Row-major storage.
  std::span<const double> data() const noexcept { return data_; }

 private:
  std::size_t order_;
  std::vector<double> data_;
};

/// Column-major square matrix holding eigenvectors.
class EigenvectorMatrix {
 public:
  EigenvectorMatrix() = default;
  explicit EigenvectorMatrix(std::size_t order);

  std::size_t order() const noexcept { return order_; }
  double operator()(std::size_t row, std::size_t col) const noexcept {
    return data_[col * order_ + row];
  }
  double& operator()(std::size_t row, std::size_t col) noexcept { return data_[col * order_ + row]; }

  std::span<const double> column(std::size_t col) const noexcept {
    return {data_.data() + col * order_, order_};
  }

 private:
  std::size_t order_ = 0;
  std::vector<double> data_;
};

struct SymmetricEigenDecomposition {
  std::vector<double> eigenvalues;  // ascending
  EigenvectorMatrix eigenvectors;   // column k pairs with eigenvalues[k]; empty if not requested
  int sweeps = 0;
};

struct JacobiOptions {
  bool compute_eigenvectors = true;
  int max_sweeps = 100;
  /// Converged once the off-diagonal Frobenius norm ≤ tolerance · ‖A‖_F.
  double tolerance = 1e-14;
};

/// Cyclic Jacobi diagonalization. Eigenvalues are returned ascending (ties
/// keep their diagonal position order) and eigenvector columns follow them.
/// Deterministic for identical input.
///
/// Throws DomainError for an empty or non-finite matrix and NumericalError
/// (carrying the remaining off-diagonal norm) if max_sweeps is exhausted.
SymmetricEigenDecomposition jacobi_eigen(SymmetricMatrix a, const JacobiOptions& options = {});

/// x ↦ xᵀ A x for a vector of matching length.
double quadratic_form(const SymmetricMatrix& a, std::span<const double> x);

}  // namespace thermohf::linalg
