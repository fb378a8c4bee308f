#include "hyperspec/spectra.hpp"

#include <algorithm>
#include <cmath>

#include "hyperspec/error.hpp"

namespace hyperspec {

double Spectrum::spectral_radius() const {
  if (eigenvalues.empty()) return 0.0;
  return std::max(std::fabs(eigenvalues.front()),
                  std::fabs(eigenvalues.back()));
}

Spectrum eig(const OperatorMatrix& m) {
  if (m.kind == OperatorKind::TransitionP)
    fail(ErrorCode::NotSelfAdjointKind,
         "transitionP is not diagonalized directly; use deltaRW");
  const std::size_t n = m.n();
  std::vector<double> sqrt_d(n), inv_sqrt_d(n);
  for (std::size_t i = 0; i < n; ++i) {
    sqrt_d[i] = std::sqrt(m.weight_diag[i]);
    inv_sqrt_d[i] = 1.0 / sqrt_d[i];
  }
  linalg::Matrix s(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      s(i, j) = sqrt_d[i] * m.entries(i, j) * inv_sqrt_d[j];
  linalg::EigenResult er = linalg::symmetric_eigen(s);

  Spectrum out;
  out.kind = m.kind;
  out.scheme_tag = m.scheme_tag;
  out.weight_diag = m.weight_diag;
  out.eigenvalues = std::move(er.values);
  out.eigenvectors.assign(n, std::vector<double>(n));
  for (std::size_t k = 0; k < n; ++k) {
    auto& z = out.eigenvectors[k];
    for (std::size_t i = 0; i < n; ++i) z[i] = er.vectors[k][i] * inv_sqrt_d[i];
    // normalize in the D-inner product, then fix the sign
    double nrm2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) nrm2 += m.weight_diag[i] * z[i] * z[i];
    double inv = 1.0 / std::sqrt(nrm2);
    for (double& v : z) v *= inv;
    std::size_t arg = 0;
    for (std::size_t i = 1; i < n; ++i)
      if (std::fabs(z[i]) > std::fabs(z[arg])) arg = i;
    if (z[arg] < 0.0)
      for (double& v : z) v = -v;
  }
  out.cluster_tolerance = std::max(1e-8, 1e-10 * out.spectral_radius());
  out.clusters = cluster_multiplicities(out, out.cluster_tolerance);
  return out;
}

Spectrum eig(const OperatorMatrix& m, const WeightAssignment& wa) {
  if (m.scheme_tag != wa.fingerprint())
    fail(ErrorCode::SchemeMismatch,
         "operator was built from a different weight assignment");
  return eig(m);
}

std::vector<EigenCluster> cluster_multiplicities(const Spectrum& s,
                                                 double tol) {
  if (tol < 0.0) tol = std::max(1e-8, 1e-10 * s.spectral_radius());
  std::vector<EigenCluster> clusters;
  for (std::size_t i = 0; i < s.eigenvalues.size(); ++i) {
    if (!clusters.empty() &&
        s.eigenvalues[i] - s.eigenvalues[clusters.back().members.back()] <=
            tol) {
      clusters.back().members.push_back(i);
    } else {
      clusters.push_back(EigenCluster{0.0, 0, {i}});
    }
  }
  for (auto& c : clusters) {
    double sum = 0.0;
    for (std::size_t i : c.members) sum += s.eigenvalues[i];
    c.multiplicity = c.members.size();
    c.value = sum / static_cast<double>(c.members.size());
  }
  return clusters;
}

double rayleigh(const OperatorMatrix& m, const WeightAssignment& wa,
                const std::vector<double>& x) {
  if (m.scheme_tag != wa.fingerprint())
    fail(ErrorCode::SchemeMismatch,
         "operator was built from a different weight assignment");
  double xx = inner_product_weighted(m.weight_diag, x, x);
  if (xx == 0.0) fail(ErrorCode::ZeroVector, "Rayleigh quotient of zero vector");
  std::vector<double> mx = m.apply(x);
  double num = inner_product_weighted(m.weight_diag, mx, x);
  if (m.kind == OperatorKind::L) num = -num;
  return num / xx;
}

ResidualReport residual_check(const OperatorMatrix& m, double lambda,
                              const std::vector<std::vector<double>>& vectors) {
  ResidualReport rep;
  double rho = eig(m).spectral_radius();
  rep.tolerance = 1e-8 * std::max(1.0, rho);
  rep.pass = true;
  for (const auto& z : vectors) {
    bool nonzero = false;
    for (double v : z)
      if (v != 0.0) nonzero = true;
    if (!nonzero) fail(ErrorCode::ZeroVector, "residual check on zero vector");
    std::vector<double> mz = m.apply(z);
    double res = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) {
      res = std::max(res, std::fabs(mz[i] - lambda * z[i]));
      scale = std::max(scale, std::fabs(z[i]));
    }
    res /= scale;
    rep.residuals.push_back(res);
    if (res > rep.tolerance) rep.pass = false;
  }
  std::vector<std::vector<double>> rows = vectors;
  rep.rank = linalg::rank(std::move(rows));
  if (rep.rank != vectors.size()) rep.pass = false;
  return rep;
}

}  // namespace hyperspec
