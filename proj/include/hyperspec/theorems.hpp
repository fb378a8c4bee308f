#ifndef HYPERSPEC_THEOREMS_HPP
#define HYPERSPEC_THEOREMS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hyperspec/families.hpp"
#include "hyperspec/spectra.hpp"

namespace hyperspec {

// A closed-form eigenvalue claim: the predicted value, a lower bound on
// its multiplicity, and the explicit eigenvector basis (+-1 on the
// witnessing sets, 0 elsewhere) the construction provides.
struct EigenPrediction {
  OperatorKind operator_kind = OperatorKind::L;  // L or Adjacency
  double value = 0.0;
  std::size_t multiplicity_lower_bound = 0;
  std::vector<std::vector<double>> basis;
  std::string theorem;                 // which structural result fired
  std::vector<int> witness_vertices;   // W / twin class / union of petals
  std::vector<int> witness_edges;      // E_k / {e_0} / E_0
  std::map<std::string, double> constants;
  std::uint64_t scheme_tag = 0;
};

// Intersection-family eigenvalue: a vertex set W (|W| >= 2) equal to the
// common intersection of its star E_k, meeting no other edge, with
// delta_V constant on W, yields -(1/c) sum_{e in E_k} delta_E(e)/|e| for
// L with multiplicity >= |W|-1. Empty list when inapplicable.
std::vector<EigenPrediction> predict_intersection_family(
    const Hypergraph& h, const WeightAssignment& wa);

// Cored-twin eigenvalue: a twin class e_u (|e_u| >= 2) of degree-one
// vertices inside a single edge e_0 yields -delta_E(e_0)/(c|e_0|) for L
// and -delta_E(e_0)/(c|e_0|^2) for the adjacency operator, multiplicity
// >= |e_u|-1.
std::vector<EigenPrediction> predict_cored_twins(const Hypergraph& h,
                                                 const WeightAssignment& wa,
                                                 OperatorKind kind);

// Equal-petal eigenvalue: edges E_0 sharing a core W and carrying
// private petals of one size t, with delta_V constant on the petals and
// delta_E(e)/|e|^2 = omega constant on E_0, yield -(omega/c)|W| for L
// and (omega/c)(t-1) for the adjacency operator, multiplicity >= |E_0|-1.
std::vector<EigenPrediction> predict_equal_petals(const Hypergraph& h,
                                                  const WeightAssignment& wa,
                                                  OperatorKind kind);

// Adjacency analogue of the intersection family: -nu with nu =
// sum_{e in E_0} delta_E(e)/(c|e|^2), multiplicity >= |W|-1.
std::vector<EigenPrediction> predict_adjacency_intersection(
    const Hypergraph& h, const WeightAssignment& wa);

// Graph-power and squid predictions from generator annotations (error
// MissingAnnotations without them). Emits both L and adjacency claims.
std::vector<EigenPrediction> predict_power_and_squid(
    const Hypergraph& h, const WeightAssignment& wa,
    const Annotations& annotations);

// Complete (l,1)-hyperflower spectrum under schemes with delta_V
// constant on V and delta_E(e)/|e|^2 constant on E (HypothesisViolated
// otherwise): full eigenvalue multisets for L and for the adjacency
// operator, plus the closed-form determinant of A.
struct HyperflowerSpectrum {
  std::vector<double> l_eigenvalues;          // ascending, |V| entries
  std::vector<double> adjacency_eigenvalues;  // ascending, |V| entries
  double det_adjacency = 0.0;
};

HyperflowerSpectrum hyperflower_full_spectrum(const Hypergraph& h,
                                              const Annotations& annotations,
                                              const WeightAssignment& wa);

struct PredictionOutcome {
  EigenPrediction prediction;
  bool pass = false;
  double max_residual = 0.0;
  std::size_t multiplicity_found = 0;
  double matched_value = 0.0;
};

struct VerificationReport {
  std::vector<PredictionOutcome> outcomes;
  bool all_pass = true;
};

// Checks each prediction against a numeric spectrum of the same scheme:
// the basis must pass residual_check at the (kind-mapped) value and the
// spectrum must carry >= bound eigenvalues within 1e-7 of it. L
// predictions check against laplacian spectra negated.
VerificationReport verify(const std::vector<EigenPrediction>& predictions,
                          const OperatorMatrix& m, const Spectrum& spectrum);

}  // namespace hyperspec

#endif
