#include "hyperspec/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hyperspec/error.hpp"

namespace hyperspec::linalg {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

std::vector<double> matvec(const Matrix& m, const std::vector<double>& x) {
  if (x.size() != m.n())
    fail(ErrorCode::DimensionMismatch, "matvec: vector length != matrix size");
  std::vector<double> y(m.n(), 0.0);
  for (std::size_t i = 0; i < m.n(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < m.n(); ++j) s += m(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.n() != b.n())
    fail(ErrorCode::DimensionMismatch, "matmul: size mismatch");
  Matrix c(a.n());
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t k = 0; k < a.n(); ++k) {
      double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < a.n(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

double norm_inf(const Matrix& m) {
  double best = 0.0;
  for (std::size_t i = 0; i < m.n(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < m.n(); ++j) s += std::fabs(m(i, j));
    best = std::max(best, s);
  }
  return best;
}

double trace(const Matrix& m) {
  double s = 0.0;
  for (std::size_t i = 0; i < m.n(); ++i) s += m(i, i);
  return s;
}

namespace {

double hypot2(double a, double b) {
  double absa = std::fabs(a), absb = std::fabs(b);
  if (absa > absb) {
    double r = absb / absa;
    return absa * std::sqrt(1.0 + r * r);
  }
  if (absb == 0.0) return 0.0;
  double r = absa / absb;
  return absb * std::sqrt(1.0 + r * r);
}

// Householder reduction of a symmetric matrix to tridiagonal form.
// On return d holds the diagonal, e the subdiagonal (e[0] unused), and
// z the accumulated orthogonal transform (columns are the basis).
void tridiagonalize(std::vector<std::vector<double>>& z, std::vector<double>& d,
                    std::vector<double>& e) {
  const std::size_t n = z.size();
  for (std::size_t ii = n - 1; ii >= 1; --ii) {
    std::size_t i = ii;
    std::size_t l = i - 1;
    double h = 0.0, scale = 0.0;
    if (l > 0) {
      for (std::size_t k = 0; k <= l; ++k) scale += std::fabs(z[i][k]);
      if (scale == 0.0) {
        e[i] = z[i][l];
      } else {
        for (std::size_t k = 0; k <= l; ++k) {
          z[i][k] /= scale;
          h += z[i][k] * z[i][k];
        }
        double f = z[i][l];
        double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        z[i][l] = f - g;
        f = 0.0;
        for (std::size_t j = 0; j <= l; ++j) {
          z[j][i] = z[i][j] / h;
          g = 0.0;
          for (std::size_t k = 0; k <= j; ++k) g += z[j][k] * z[i][k];
          for (std::size_t k = j + 1; k <= l; ++k) g += z[k][j] * z[i][k];
          e[j] = g / h;
          f += e[j] * z[i][j];
        }
        double hh = f / (h + h);
        for (std::size_t j = 0; j <= l; ++j) {
          f = z[i][j];
          e[j] = g = e[j] - hh * f;
          for (std::size_t k = 0; k <= j; ++k)
            z[j][k] -= f * e[k] + g * z[i][k];
        }
      }
    } else {
      e[i] = z[i][l];
    }
    d[i] = h;
  }
  d[0] = 0.0;
  e[0] = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t l = i;
    if (d[i] != 0.0) {
      for (std::size_t j = 0; j < l; ++j) {
        double g = 0.0;
        for (std::size_t k = 0; k < l; ++k) g += z[i][k] * z[k][j];
        for (std::size_t k = 0; k < l; ++k) z[k][j] -= g * z[k][i];
      }
    }
    d[i] = z[i][i];
    z[i][i] = 1.0;
    for (std::size_t j = 0; j < l; ++j) z[j][i] = z[i][j] = 0.0;
  }
}

// Implicit-shift QL on the tridiagonal (d, e), accumulating rotations
// into z. Eigenvector k ends up in column k of z.
void ql_implicit(std::vector<double>& d, std::vector<double>& e,
                 std::vector<std::vector<double>>& z) {
  const std::size_t n = d.size();
  if (n == 0) return;
  for (std::size_t i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;
  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) + dd == dd) break;
      }
      if (m != l) {
        if (iter++ == 50)
          fail(ErrorCode::NumericalFailure,
               "QL iteration did not converge after 50 sweeps");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = hypot2(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        bool underflow = false;
        for (std::size_t i1 = m; i1-- > l;) {
          std::size_t i = i1;
          double f = s * e[i];
          double b = c * e[i];
          e[i + 1] = (r = hypot2(f, g));
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          d[i + 1] = g + (p = s * r);
          g = c * r - b;
          for (std::size_t k = 0; k < n; ++k) {
            f = z[k][i + 1];
            z[k][i + 1] = s * z[k][i] + c * f;
            z[k][i] = c * z[k][i] - s * f;
          }
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

}  // namespace

EigenResult symmetric_eigen(const Matrix& m) {
  const std::size_t n = m.n();
  EigenResult out;
  if (n == 0) return out;
  std::vector<std::vector<double>> z(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      z[i][j] = 0.5 * (m(i, j) + m(j, i));  // symmetrize roundoff
  std::vector<double> d(n, 0.0), e(n, 0.0);
  if (n == 1) {
    d[0] = z[0][0];
    z[0][0] = 1.0;
  } else {
    tridiagonalize(z, d, e);
    ql_implicit(d, e, z);
  }
  // Sort ascending, stable for ties.
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });
  out.values.resize(n);
  out.vectors.assign(n, std::vector<double>(n));
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = d[idx[k]];
    for (std::size_t i = 0; i < n; ++i) out.vectors[k][i] = z[i][idx[k]];
  }
  return out;
}

double determinant(Matrix m) {
  const std::size_t n = m.n();
  double det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::fabs(m(r, col)) > std::fabs(m(piv, col))) piv = r;
    if (m(piv, col) == 0.0) return 0.0;
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      double f = m(r, col) / m(col, col);
      if (f == 0.0) continue;
      for (std::size_t j = col; j < n; ++j) m(r, j) -= f * m(col, j);
    }
  }
  return det;
}

std::size_t rank(std::vector<std::vector<double>> rows, double tol) {
  if (rows.empty()) return 0;
  const std::size_t nr = rows.size(), nc = rows[0].size();
  double scale = 0.0;
  for (const auto& r : rows)
    for (double v : r) scale = std::max(scale, std::fabs(v));
  if (scale == 0.0) return 0;
  const double thresh = tol * scale;
  std::size_t rk = 0;
  for (std::size_t col = 0; col < nc && rk < nr; ++col) {
    std::size_t piv = rk;
    for (std::size_t r = rk + 1; r < nr; ++r)
      if (std::fabs(rows[r][col]) > std::fabs(rows[piv][col])) piv = r;
    if (std::fabs(rows[piv][col]) <= thresh) continue;
    std::swap(rows[piv], rows[rk]);
    for (std::size_t r = rk + 1; r < nr; ++r) {
      double f = rows[r][col] / rows[rk][col];
      if (f == 0.0) continue;
      for (std::size_t j = col; j < nc; ++j) rows[r][j] -= f * rows[rk][j];
    }
    ++rk;
  }
  return rk;
}

}  // namespace hyperspec::linalg
