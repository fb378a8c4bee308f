#ifndef HYPERSPEC_LINALG_HPP
#define HYPERSPEC_LINALG_HPP

#include <cstddef>
#include <vector>

namespace hyperspec::linalg {

// Dense square matrix, row-major.
class Matrix {
 public:
  Matrix() : n_(0) {}
  explicit Matrix(std::size_t n, double fill = 0.0) : n_(n), a_(n * n, fill) {}

  std::size_t n() const { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const {
    return a_[i * n_ + j];
  }
  const std::vector<double>& data() const { return a_; }

  static Matrix identity(std::size_t n);

 private:
  std::size_t n_;
  std::vector<double> a_;
};

std::vector<double> matvec(const Matrix& m, const std::vector<double>& x);
Matrix matmul(const Matrix& a, const Matrix& b);
double norm_inf(const Matrix& m);
double trace(const Matrix& m);

// Result of a full symmetric eigendecomposition. Column k of `vectors`
// (vectors[k] here, stored row-per-eigenpair) pairs with values[k];
// values ascending, vectors orthonormal.
struct EigenResult {
  std::vector<double> values;
  std::vector<std::vector<double>> vectors;
};

// Householder reduction to tridiagonal form followed by implicit-shift QL
// iteration. Input must be symmetric; only the lower triangle is read.
// Deterministic. Throws Error(NumericalFailure) if QL fails to converge.
EigenResult symmetric_eigen(const Matrix& m);

// Determinant via LU with partial pivoting.
double determinant(Matrix m);

// Numerical rank via Gaussian elimination with partial pivoting on a
// rows x cols system; tol is relative to the largest pivot encountered.
std::size_t rank(std::vector<std::vector<double>> rows, double tol = 1e-10);

}  // namespace hyperspec::linalg

#endif
