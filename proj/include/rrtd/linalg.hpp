#pragma once

#include <cstddef>
#include <vector>

namespace rrtd {

/// Dense row-major real matrix. Sizes here never exceed a few hundred.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<double>& data() const noexcept { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Solves A x = b by Gaussian elimination with partial pivoting. Throws
/// NumericError when a pivot falls below `singular_tol`.
std::vector<double> solve_linear(Matrix a, std::vector<double> b, double singular_tol = 1e-10);

struct EigenDecomposition {
  /// Sorted descending.
  std::vector<double> values;
  /// Column k of `vectors` is the unit eigenvector for values[k].
  Matrix vectors;
  int sweeps = 0;
};

/// Cyclic Jacobi eigensolver for real symmetric matrices. Each eigenvector's
/// first entry with magnitude above 1e-9 is made positive. Throws DomainError on
/// asymmetric input and NumericError if the sweep cap is exhausted.
EigenDecomposition eig_sym(const Matrix& m, int max_sweeps = 100);

}  // namespace rrtd
