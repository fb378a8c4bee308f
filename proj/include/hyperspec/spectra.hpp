#ifndef HYPERSPEC_SPECTRA_HPP
#define HYPERSPEC_SPECTRA_HPP

#include <cstdint>
#include <vector>

#include "hyperspec/operators.hpp"

namespace hyperspec {

struct EigenCluster {
  double value = 0.0;  // mean of the member eigenvalues
  std::size_t multiplicity = 0;
  std::vector<std::size_t> members;  // indices into the eigenvalue list
};

struct Spectrum {
  std::vector<double> eigenvalues;               // ascending
  std::vector<std::vector<double>> eigenvectors; // D-orthonormal, sign-fixed
  std::vector<EigenCluster> clusters;
  double cluster_tolerance = 0.0;
  std::vector<double> weight_diag;  // inner product the vectors honor
  OperatorKind kind = OperatorKind::L;
  std::uint64_t scheme_tag = 0;

  double spectral_radius() const;
};

// Eigendecomposition of a self-adjoint operator matrix: similarity
// transform D^{1/2} M D^{-1/2} (plain symmetric by weighted
// self-adjointness), Householder + implicit-shift QL, back-transform by
// D^{-1/2}. Eigenvectors are orthonormal in the D-inner product, sign
// fixed by making the largest-magnitude entry positive (first such index
// on ties). TransitionP is rejected with NotSelfAdjointKind; diagonalize
// DeltaRW instead.
Spectrum eig(const OperatorMatrix& m);
Spectrum eig(const OperatorMatrix& m, const WeightAssignment& wa);

// Greedy ascending clustering: adjacent eigenvalues within tol merge.
// Default tol = max(1e-8, 1e-10 * spectral radius).
std::vector<EigenCluster> cluster_multiplicities(const Spectrum& s,
                                                 double tol = -1.0);

// Rayleigh quotient in the matrix's own inner product; the diffusion
// kind L is sign-flipped so that the quotient targets -L.
double rayleigh(const OperatorMatrix& m, const WeightAssignment& wa,
                const std::vector<double>& x);

struct ResidualReport {
  std::vector<double> residuals;  // ||M z - lambda z||_inf per vector
  std::size_t rank = 0;           // Gram-matrix rank of the vector set
  double tolerance = 0.0;
  bool pass = false;
};

// Verifies a claimed eigenvalue: every vector must satisfy
// ||Mz - lambda z||_inf <= 1e-8 max(1, rho(M)) and the set must be
// linearly independent.
ResidualReport residual_check(const OperatorMatrix& m, double lambda,
                              const std::vector<std::vector<double>>& vectors);

}  // namespace hyperspec

#endif
