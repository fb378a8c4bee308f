#ifndef HYPERSPEC_OPERATORS_HPP
#define HYPERSPEC_OPERATORS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hyperspec/hypergraph.hpp"
#include "hyperspec/linalg.hpp"
#include "hyperspec/weights.hpp"

namespace hyperspec {

enum class OperatorKind {
  Q,            // avg* . avg, the general signless Laplacian
  L,            // diffusion operator, Q - diag(n)
  Laplacian,    // -L
  Adjacency,    // L + diag(r)
  InducedB,     // symmetric matrix induced by the adjacency operator
  B0,           // 0/1 pattern of B (adjacency of the underlying graph)
  NormalizedL,  // I - Gamma Dv^-1 B Gamma, Gamma = diag(r^-1/2)
  TransitionP,  // random-walk transition matrix, zero diagonal
  DeltaRW,      // I - P
};

OperatorKind operator_kind_from_string(const std::string& name);
const char* operator_kind_name(OperatorKind k);

// Generalized degree r(v) = sum_{e in E_v} delta_E(e)/delta_V(v) *
// (|e|-1)/|e|^2, its maximum r0, and n = Q(1).
struct DegreeProfile {
  std::vector<double> r;
  double r0 = 0.0;
  std::vector<double> n;
};

DegreeProfile degree_profile(const Hypergraph& h, const WeightAssignment& wa);

// A built operator: dense matrix plus the diagonal weight D making D*M
// symmetric (delta_V for the V-self-adjoint kinds, ones for B/B0,
// r.delta_V for the random-walk kinds). TransitionP carries the weight
// but is not eigendecomposed directly.
struct OperatorMatrix {
  OperatorKind kind;
  linalg::Matrix entries;
  std::vector<double> weight_diag;
  std::uint64_t scheme_tag = 0;

  std::size_t n() const { return entries.n(); }
  std::vector<double> apply(const std::vector<double>& x) const;
};

// (avg x)(e) = mean of x over e.
std::vector<double> avg(const Hypergraph& h, const std::vector<double>& x);

// (avg* b)(v) = sum_{e in E_v} b(e)/|e| * delta_E(e)/delta_V(v).
std::vector<double> avg_adjoint(const Hypergraph& h,
                                const WeightAssignment& wa,
                                const std::vector<double>& beta);

// Assemble the requested operator. Kinds NormalizedL, TransitionP and
// DeltaRW require r(v) > 0 everywhere (error IsolatedVertex).
OperatorMatrix build(const Hypergraph& h, const WeightAssignment& wa,
                     OperatorKind kind);

std::vector<double> apply(const OperatorMatrix& m,
                          const std::vector<double>& x);

}  // namespace hyperspec

#endif
