#include "hyperspec/weights.hpp"

#include <cstring>

#include "hyperspec/error.hpp"

namespace hyperspec {

SchemeKind scheme_from_string(const std::string& name) {
  if (name == "rodriguez") return SchemeKind::Rodriguez;
  if (name == "banerjee") return SchemeKind::Banerjee;
  if (name == "normalized") return SchemeKind::Normalized;
  if (name == "signless") return SchemeKind::Signless;
  if (name == "custom") return SchemeKind::Custom;
  fail(ErrorCode::InvalidParams, "unknown weight scheme '" + name + "'");
}

const char* scheme_name(SchemeKind k) {
  switch (k) {
    case SchemeKind::Rodriguez: return "rodriguez";
    case SchemeKind::Banerjee: return "banerjee";
    case SchemeKind::Normalized: return "normalized";
    case SchemeKind::Signless: return "signless";
    case SchemeKind::Custom: return "custom";
  }
  return "?";
}

std::uint64_t WeightAssignment::fingerprint() const {
  // FNV-1a over the raw weight bytes plus the lengths.
  std::uint64_t hash = 1469598103934665603ull;
  auto mix = [&hash](const void* p, std::size_t len) {
    const unsigned char* b = static_cast<const unsigned char*>(p);
    for (std::size_t i = 0; i < len; ++i) {
      hash ^= b[i];
      hash *= 1099511628211ull;
    }
  };
  std::uint64_t nv = delta_v.size(), ne = delta_e.size();
  mix(&nv, sizeof nv);
  mix(&ne, sizeof ne);
  if (!delta_v.empty()) mix(delta_v.data(), delta_v.size() * sizeof(double));
  if (!delta_e.empty()) mix(delta_e.data(), delta_e.size() * sizeof(double));
  return hash;
}

WeightAssignment resolve(const WeightScheme& scheme, const Hypergraph& h) {
  WeightAssignment wa;
  wa.source = scheme.kind;
  const std::size_t n = h.n_vertices(), m = h.n_edges();
  wa.delta_v.resize(n);
  wa.delta_e.resize(m);
  switch (scheme.kind) {
    case SchemeKind::Rodriguez:
    case SchemeKind::Signless:
      wa.delta_v.assign(n, 1.0);
      for (std::size_t e = 0; e < m; ++e) {
        double k = static_cast<double>(h.edge(e).size());
        wa.delta_e[e] = k * k;
      }
      break;
    case SchemeKind::Banerjee:
      wa.delta_v.assign(n, 1.0);
      for (std::size_t e = 0; e < m; ++e) {
        double k = static_cast<double>(h.edge(e).size());
        wa.delta_e[e] = h.edge_weight(e) * k * k / (k - 1.0);
      }
      break;
    case SchemeKind::Normalized:
      for (std::size_t v = 0; v < n; ++v) {
        if (h.star_size(v) == 0)
          fail(ErrorCode::IsolatedVertexUnderNormalized,
               "vertex '" + h.vertex_id(v) +
                   "' is isolated; the normalized scheme needs |E_v| >= 1");
        wa.delta_v[v] = static_cast<double>(h.star_size(v));
      }
      for (std::size_t e = 0; e < m; ++e) {
        double k = static_cast<double>(h.edge(e).size());
        wa.delta_e[e] = k * k / (k - 1.0);
      }
      break;
    case SchemeKind::Custom:
      for (std::size_t v = 0; v < n; ++v) {
        auto it = scheme.custom_delta_v.find(h.vertex_id(v));
        if (it == scheme.custom_delta_v.end())
          fail(ErrorCode::MissingCustomValue,
               "custom scheme is missing delta_V for vertex '" +
                   h.vertex_id(v) + "'");
        if (it->second <= 0.0)
          fail(ErrorCode::NonPositiveCustom,
               "custom delta_V for vertex '" + h.vertex_id(v) +
                   "' must be positive");
        wa.delta_v[v] = it->second;
      }
      for (std::size_t e = 0; e < m; ++e) {
        auto it = scheme.custom_delta_e.find(static_cast<int>(e));
        if (it == scheme.custom_delta_e.end())
          fail(ErrorCode::MissingCustomValue,
               "custom scheme is missing delta_E for edge " +
                   std::to_string(e));
        if (it->second <= 0.0)
          fail(ErrorCode::NonPositiveCustom, "custom delta_E for edge " +
                                                 std::to_string(e) +
                                                 " must be positive");
        wa.delta_e[e] = it->second;
      }
      break;
  }
  return wa;
}

double inner_product_weighted(const std::vector<double>& diag,
                              const std::vector<double>& x,
                              const std::vector<double>& y) {
  if (x.size() != diag.size() || y.size() != diag.size())
    fail(ErrorCode::DimensionMismatch, "inner product dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < diag.size(); ++i) s += diag[i] * x[i] * y[i];
  return s;
}

double inner_product_V(const WeightAssignment& wa, const std::vector<double>& x,
                       const std::vector<double>& y) {
  return inner_product_weighted(wa.delta_v, x, y);
}

double inner_product_E(const WeightAssignment& wa,
                       const std::vector<double>& beta,
                       const std::vector<double>& gamma) {
  return inner_product_weighted(wa.delta_e, beta, gamma);
}

}  // namespace hyperspec
