#ifndef HYPERSPEC_WEIGHTS_HPP
#define HYPERSPEC_WEIGHTS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

enum class SchemeKind { Rodriguez, Banerjee, Normalized, Signless, Custom };

SchemeKind scheme_from_string(const std::string& name);  // InvalidParams
const char* scheme_name(SchemeKind k);

// Weight function selection. Presets:
//   rodriguez   delta_V = 1,      delta_E = |e|^2
//   banerjee    delta_V = 1,      delta_E = w(e) |e|^2 / (|e|-1)
//   normalized  delta_V = |E_v|,  delta_E = |e|^2 / (|e|-1)
//   signless    delta_V = 1,      delta_E = |e|^2
// Custom schemes must supply every value explicitly.
struct WeightScheme {
  SchemeKind kind = SchemeKind::Rodriguez;
  std::map<std::string, double> custom_delta_v;  // keyed by vertex id
  std::map<int, double> custom_delta_e;          // keyed by edge index

  static WeightScheme preset(SchemeKind k) { return WeightScheme{k, {}, {}}; }
};

// Resolved positive weights, index-aligned with the hypergraph.
struct WeightAssignment {
  std::vector<double> delta_v;
  std::vector<double> delta_e;
  SchemeKind source = SchemeKind::Custom;

  // Identity of the assignment; operators and spectra carry it so that
  // cross-scheme mixups surface as SchemeMismatch.
  std::uint64_t fingerprint() const;
};

// Errors: IsolatedVertexUnderNormalized, MissingCustomValue,
// NonPositiveCustom.
WeightAssignment resolve(const WeightScheme& scheme, const Hypergraph& h);

// (x,y)_V = sum_v delta_V(v) x(v) y(v)
double inner_product_V(const WeightAssignment& wa,
                       const std::vector<double>& x,
                       const std::vector<double>& y);

// (b,g)_E = sum_e delta_E(e) b(e) g(e)
double inner_product_E(const WeightAssignment& wa,
                       const std::vector<double>& beta,
                       const std::vector<double>& gamma);

// Generic diagonal-weighted inner product (used for the random-walk
// (.,.)_R product with weight r(v) delta_V(v)).
double inner_product_weighted(const std::vector<double>& diag,
                              const std::vector<double>& x,
                              const std::vector<double>& y);

}  // namespace hyperspec

#endif
