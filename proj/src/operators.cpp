#include "hyperspec/operators.hpp"

#include <cmath>

#include "hyperspec/error.hpp"

namespace hyperspec {

OperatorKind operator_kind_from_string(const std::string& name) {
  if (name == "Q" || name == "signless") return OperatorKind::Q;
  if (name == "L" || name == "diffusion") return OperatorKind::L;
  if (name == "laplacian") return OperatorKind::Laplacian;
  if (name == "adjacency") return OperatorKind::Adjacency;
  if (name == "B" || name == "inducedB") return OperatorKind::InducedB;
  if (name == "B0") return OperatorKind::B0;
  if (name == "normalizedL" || name == "normalized-laplacian")
    return OperatorKind::NormalizedL;
  if (name == "P" || name == "transitionP") return OperatorKind::TransitionP;
  if (name == "deltaRW" || name == "walk-laplacian") return OperatorKind::DeltaRW;
  fail(ErrorCode::UnknownKind, "unknown operator kind '" + name + "'");
}

const char* operator_kind_name(OperatorKind k) {
  switch (k) {
    case OperatorKind::Q: return "Q";
    case OperatorKind::L: return "L";
    case OperatorKind::Laplacian: return "laplacian";
    case OperatorKind::Adjacency: return "adjacency";
    case OperatorKind::InducedB: return "inducedB";
    case OperatorKind::B0: return "B0";
    case OperatorKind::NormalizedL: return "normalizedL";
    case OperatorKind::TransitionP: return "transitionP";
    case OperatorKind::DeltaRW: return "deltaRW";
  }
  return "?";
}

std::vector<double> avg(const Hypergraph& h, const std::vector<double>& x) {
  if (x.size() != h.n_vertices())
    fail(ErrorCode::DimensionMismatch, "avg: input not indexed over V");
  std::vector<double> out(h.n_edges(), 0.0);
  for (std::size_t e = 0; e < h.n_edges(); ++e) {
    double s = 0.0;
    for (int v : h.edge(static_cast<int>(e))) s += x[v];
    out[e] = s / static_cast<double>(h.edge(static_cast<int>(e)).size());
  }
  return out;
}

std::vector<double> avg_adjoint(const Hypergraph& h,
                                const WeightAssignment& wa,
                                const std::vector<double>& beta) {
  if (beta.size() != h.n_edges())
    fail(ErrorCode::DimensionMismatch, "avg*: input not indexed over E");
  std::vector<double> out(h.n_vertices(), 0.0);
  for (std::size_t v = 0; v < h.n_vertices(); ++v) {
    double s = 0.0;
    for (int e : h.star(static_cast<int>(v)))
      s += beta[e] / static_cast<double>(h.edge(e).size()) * wa.delta_e[e] /
           wa.delta_v[v];
    out[v] = s;
  }
  return out;
}

DegreeProfile degree_profile(const Hypergraph& h, const WeightAssignment& wa) {
  DegreeProfile p;
  const std::size_t n = h.n_vertices();
  p.r.assign(n, 0.0);
  p.n.assign(n, 0.0);
  for (std::size_t v = 0; v < n; ++v) {
    for (int e : h.star(static_cast<int>(v))) {
      double k = static_cast<double>(h.edge(e).size());
      double ratio = wa.delta_e[e] / wa.delta_v[v];
      p.r[v] += ratio * (k - 1.0) / (k * k);
      p.n[v] += ratio / k;
    }
    p.r0 = std::max(p.r0, p.r[v]);
  }
  return p;
}

namespace {

// B[u][v] = sum_{e containing u and v} delta_E(e)/|e|^2, zero diagonal.
linalg::Matrix induced_b(const Hypergraph& h, const WeightAssignment& wa) {
  linalg::Matrix b(h.n_vertices());
  for (std::size_t e = 0; e < h.n_edges(); ++e) {
    const auto& mem = h.edge(static_cast<int>(e));
    double k = static_cast<double>(mem.size());
    double w = wa.delta_e[e] / (k * k);
    for (std::size_t i = 0; i < mem.size(); ++i)
      for (std::size_t j = i + 1; j < mem.size(); ++j) {
        b(mem[i], mem[j]) += w;
        b(mem[j], mem[i]) += w;
      }
  }
  return b;
}

void require_positive_r(const Hypergraph& h, const DegreeProfile& dp,
                        OperatorKind kind) {
  for (std::size_t v = 0; v < dp.r.size(); ++v)
    if (dp.r[v] <= 0.0)
      fail(ErrorCode::IsolatedVertex,
           std::string(operator_kind_name(kind)) + " requires r(v) > 0 but '" +
               h.vertex_id(static_cast<int>(v)) + "' is isolated");
}

}  // namespace

OperatorMatrix build(const Hypergraph& h, const WeightAssignment& wa,
                     OperatorKind kind) {
  if (wa.delta_v.size() != h.n_vertices() || wa.delta_e.size() != h.n_edges())
    fail(ErrorCode::DimensionMismatch,
         "weight assignment is not aligned with the hypergraph");
  const std::size_t n = h.n_vertices();
  OperatorMatrix out;
  out.kind = kind;
  out.scheme_tag = wa.fingerprint();
  out.weight_diag = wa.delta_v;
  DegreeProfile dp = degree_profile(h, wa);
  linalg::Matrix b = induced_b(h, wa);

  auto a_from_b = [&]() {
    linalg::Matrix a(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = b(i, j) / wa.delta_v[i];
    return a;
  };

  switch (kind) {
    case OperatorKind::Q: {
      linalg::Matrix q = a_from_b();
      for (std::size_t v = 0; v < n; ++v) {
        double diag = 0.0;
        for (int e : h.star(static_cast<int>(v))) {
          double k = static_cast<double>(h.edge(e).size());
          diag += wa.delta_e[e] / (wa.delta_v[v] * k * k);
        }
        q(v, v) = diag;
      }
      out.entries = std::move(q);
      break;
    }
    case OperatorKind::L: {
      linalg::Matrix l = a_from_b();
      for (std::size_t v = 0; v < n; ++v) l(v, v) = -dp.r[v];
      out.entries = std::move(l);
      break;
    }
    case OperatorKind::Laplacian: {
      linalg::Matrix l = a_from_b();
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) l(i, j) = -l(i, j);
      for (std::size_t v = 0; v < n; ++v) l(v, v) = dp.r[v];
      out.entries = std::move(l);
      break;
    }
    case OperatorKind::Adjacency:
      out.entries = a_from_b();
      break;
    case OperatorKind::InducedB:
      out.entries = std::move(b);
      out.weight_diag.assign(n, 1.0);
      break;
    case OperatorKind::B0: {
      linalg::Matrix b0(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          b0(i, j) = (b(i, j) != 0.0) ? 1.0 : 0.0;
      out.entries = std::move(b0);
      out.weight_diag.assign(n, 1.0);
      break;
    }
    case OperatorKind::NormalizedL: {
      require_positive_r(h, dp, kind);
      linalg::Matrix m(n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
          m(i, j) = -b(i, j) / (wa.delta_v[i] * std::sqrt(dp.r[i] * dp.r[j]));
        m(i, i) = 1.0;
      }
      out.entries = std::move(m);
      break;
    }
    case OperatorKind::TransitionP:
    case OperatorKind::DeltaRW: {
      require_positive_r(h, dp, kind);
      linalg::Matrix m(n);
      const bool delta_form = kind == OperatorKind::DeltaRW;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          double p = b(i, j) / (dp.r[i] * wa.delta_v[i]);
          m(i, j) = delta_form ? -p : p;
        }
        m(i, i) = delta_form ? 1.0 : 0.0;
      }
      out.entries = std::move(m);
      out.weight_diag.resize(n);
      for (std::size_t v = 0; v < n; ++v)
        out.weight_diag[v] = dp.r[v] * wa.delta_v[v];
      break;
    }
  }
  return out;
}

std::vector<double> OperatorMatrix::apply(const std::vector<double>& x) const {
  return linalg::matvec(entries, x);
}

std::vector<double> apply(const OperatorMatrix& m,
                          const std::vector<double>& x) {
  return m.apply(x);
}

}  // namespace hyperspec
