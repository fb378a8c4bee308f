#include "hyperspec/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "hyperspec/error.hpp"

namespace hyperspec {

namespace {

constexpr double kConstancyRelTol = 1e-12;

bool nearly_constant(const std::vector<double>& vals) {
  if (vals.empty()) return true;
  double lo = vals[0], hi = vals[0];
  for (double v : vals) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return hi - lo <= kConstancyRelTol * std::max(1.0, std::fabs(hi));
}

bool delta_v_constant_on(const WeightAssignment& wa, const std::vector<int>& vs,
                         double* c) {
  std::vector<double> vals;
  vals.reserve(vs.size());
  for (int v : vs) vals.push_back(wa.delta_v[v]);
  if (!nearly_constant(vals)) return false;
  *c = vals.empty() ? 1.0 : vals[0];
  return true;
}

// Twin classes with their common star, ordered by smallest member.
struct TwinClass {
  std::vector<int> members;
  std::vector<int> star;
};

std::vector<TwinClass> twin_classes_with_stars(const Hypergraph& h) {
  std::map<std::vector<int>, std::vector<int>> by_star;
  for (std::size_t v = 0; v < h.n_vertices(); ++v)
    by_star[h.star(static_cast<int>(v))].push_back(static_cast<int>(v));
  std::vector<TwinClass> out;
  out.reserve(by_star.size());
  for (auto& [star, members] : by_star)
    out.push_back(TwinClass{std::move(members), star});
  std::sort(out.begin(), out.end(), [](const TwinClass& a, const TwinClass& b) {
    return a.members[0] < b.members[0];
  });
  return out;
}

std::vector<int> star_intersection(const Hypergraph& h,
                                   const std::vector<int>& edges) {
  std::vector<int> common = h.edge(edges[0]);
  for (std::size_t i = 1; i < edges.size(); ++i) {
    std::vector<int> merged;
    std::set_intersection(common.begin(), common.end(),
                          h.edge(edges[i]).begin(), h.edge(edges[i]).end(),
                          std::back_inserter(merged));
    common = std::move(merged);
  }
  return common;
}

// Difference basis e_{m_i} - e_{m_0} over the class members.
std::vector<std::vector<double>> difference_basis(std::size_t n,
                                                  const std::vector<int>& m) {
  std::vector<std::vector<double>> basis;
  for (std::size_t i = 1; i < m.size(); ++i) {
    std::vector<double> y(n, 0.0);
    y[m[0]] = -1.0;
    y[m[i]] = 1.0;
    basis.push_back(std::move(y));
  }
  return basis;
}

std::vector<int> lookup_vertices(const Hypergraph& h, const Annotations& ann,
                                 const std::string& key) {
  auto it = ann.find(key);
  if (it == ann.end())
    fail(ErrorCode::MissingAnnotations, "missing annotation '" + key + "'");
  std::vector<int> out;
  out.reserve(it->second.size());
  for (const auto& id : it->second) out.push_back(h.vertex_index(id));
  return out;
}

}  // namespace

std::vector<EigenPrediction> predict_intersection_family(
    const Hypergraph& h, const WeightAssignment& wa) {
  std::vector<EigenPrediction> preds;
  for (const TwinClass& tc : twin_classes_with_stars(h)) {
    if (tc.members.size() < 2 || tc.star.empty()) continue;
    if (star_intersection(h, tc.star) != tc.members) continue;
    double c;
    if (!delta_v_constant_on(wa, tc.members, &c)) continue;
    double sum = 0.0;
    for (int e : tc.star)
      sum += wa.delta_e[e] / static_cast<double>(h.edge(e).size());
    EigenPrediction p;
    p.operator_kind = OperatorKind::L;
    p.value = -sum / c;
    p.multiplicity_lower_bound = tc.members.size() - 1;
    p.basis = difference_basis(h.n_vertices(), tc.members);
    p.theorem = "intersection-family";
    p.witness_vertices = tc.members;
    p.witness_edges = tc.star;
    p.constants = {{"c", c}};
    p.scheme_tag = wa.fingerprint();
    preds.push_back(std::move(p));
  }
  return preds;
}

std::vector<EigenPrediction> predict_cored_twins(const Hypergraph& h,
                                                 const WeightAssignment& wa,
                                                 OperatorKind kind) {
  if (kind != OperatorKind::L && kind != OperatorKind::Adjacency)
    fail(ErrorCode::UnknownKind, "cored-twin predictions cover L and adjacency");
  std::vector<EigenPrediction> preds;
  for (const TwinClass& tc : twin_classes_with_stars(h)) {
    if (tc.members.size() < 2 || tc.star.size() != 1) continue;
    int e0 = tc.star[0];
    double c;
    if (!delta_v_constant_on(wa, tc.members, &c)) continue;
    double k = static_cast<double>(h.edge(e0).size());
    EigenPrediction p;
    p.operator_kind = kind;
    p.value = kind == OperatorKind::L ? -wa.delta_e[e0] / (c * k)
                                      : -wa.delta_e[e0] / (c * k * k);
    p.multiplicity_lower_bound = tc.members.size() - 1;
    p.basis = difference_basis(h.n_vertices(), tc.members);
    p.theorem = kind == OperatorKind::L ? "cored-twins" : "cored-twins-adjacency";
    p.witness_vertices = tc.members;
    p.witness_edges = {e0};
    p.constants = {{"c", c}};
    p.scheme_tag = wa.fingerprint();
    preds.push_back(std::move(p));
  }
  return preds;
}

std::vector<EigenPrediction> predict_equal_petals(const Hypergraph& h,
                                                  const WeightAssignment& wa,
                                                  OperatorKind kind) {
  if (kind != OperatorKind::L && kind != OperatorKind::Adjacency)
    fail(ErrorCode::UnknownKind, "equal-petal predictions cover L and adjacency");
  std::vector<EigenPrediction> preds;
  for (const TwinClass& tc : twin_classes_with_stars(h)) {
    if (tc.star.size() < 2) continue;  // bound |E_0|-1 needs >= 2 edges
    if (star_intersection(h, tc.star) != tc.members) continue;
    // private petals of one size
    std::vector<std::vector<int>> petals;
    bool ok = true;
    for (int e : tc.star) {
      std::vector<int> petal;
      std::set_difference(h.edge(e).begin(), h.edge(e).end(),
                          tc.members.begin(), tc.members.end(),
                          std::back_inserter(petal));
      for (int v : petal)
        if (h.star_size(v) != 1) ok = false;
      petals.push_back(std::move(petal));
    }
    if (!ok || petals[0].empty()) continue;
    std::size_t t = petals[0].size();
    for (const auto& f : petals)
      if (f.size() != t) ok = false;
    if (!ok) continue;
    std::vector<int> all_petals;
    for (const auto& f : petals)
      all_petals.insert(all_petals.end(), f.begin(), f.end());
    double c;
    if (!delta_v_constant_on(wa, all_petals, &c)) continue;
    std::vector<double> omegas;
    for (int e : tc.star) {
      double k = static_cast<double>(h.edge(e).size());
      omegas.push_back(wa.delta_e[e] / (k * k));
    }
    if (!nearly_constant(omegas)) continue;
    double omega = omegas[0];
    EigenPrediction p;
    p.operator_kind = kind;
    p.value = kind == OperatorKind::L
                  ? -(omega / c) * static_cast<double>(tc.members.size())
                  : (omega / c) * (static_cast<double>(t) - 1.0);
    p.multiplicity_lower_bound = tc.star.size() - 1;
    // petal-difference basis: +-1 on whole petals
    for (std::size_t i = 1; i < petals.size(); ++i) {
      std::vector<double> y(h.n_vertices(), 0.0);
      for (int v : petals[0]) y[v] = -1.0;
      for (int v : petals[i]) y[v] = 1.0;
      p.basis.push_back(std::move(y));
    }
    p.theorem = kind == OperatorKind::L ? "equal-petals" : "equal-petals-adjacency";
    p.witness_vertices = all_petals;
    p.witness_edges = tc.star;
    p.constants = {{"c", c}, {"omega", omega}, {"t", static_cast<double>(t)}};
    p.scheme_tag = wa.fingerprint();
    preds.push_back(std::move(p));
  }
  return preds;
}

std::vector<EigenPrediction> predict_adjacency_intersection(
    const Hypergraph& h, const WeightAssignment& wa) {
  std::vector<EigenPrediction> preds;
  for (const TwinClass& tc : twin_classes_with_stars(h)) {
    if (tc.members.size() < 2 || tc.star.empty()) continue;
    if (star_intersection(h, tc.star) != tc.members) continue;
    double c;
    if (!delta_v_constant_on(wa, tc.members, &c)) continue;
    double nu = 0.0;
    for (int e : tc.star) {
      double k = static_cast<double>(h.edge(e).size());
      nu += wa.delta_e[e] / (c * k * k);
    }
    EigenPrediction p;
    p.operator_kind = OperatorKind::Adjacency;
    p.value = -nu;
    p.multiplicity_lower_bound = tc.members.size() - 1;
    p.basis = difference_basis(h.n_vertices(), tc.members);
    p.theorem = "intersection-family-adjacency";
    p.witness_vertices = tc.members;
    p.witness_edges = tc.star;
    p.constants = {{"c", c}, {"nu", nu}};
    p.scheme_tag = wa.fingerprint();
    preds.push_back(std::move(p));
  }
  return preds;
}

std::vector<EigenPrediction> predict_power_and_squid(
    const Hypergraph& h, const WeightAssignment& wa,
    const Annotations& annotations) {
  std::vector<EigenPrediction> preds;
  const bool is_power = annotations.count("We:1") > 0;
  const bool is_squid = annotations.count("central") > 0;
  if (!is_power && !is_squid)
    fail(ErrorCode::MissingAnnotations,
         "need graph-power (We:/base:) or squid (central/U:) annotations");

  // Each role reduces to a private cored-twin set inside one hyperedge.
  struct Witness {
    std::vector<int> twins;
    std::string theorem;
  };
  std::vector<Witness> witnesses;
  if (is_power) {
    // base degree decides pendant endpoints, which join the twin set
    std::map<int, int> base_degree;
    std::vector<std::vector<int>> base_edges;
    for (int e = 1; annotations.count("base:" + std::to_string(e)); ++e) {
      auto ends = lookup_vertices(h, annotations, "base:" + std::to_string(e));
      for (int v : ends) base_degree[v]++;
      base_edges.push_back(std::move(ends));
    }
    for (int e = 1; annotations.count("We:" + std::to_string(e)); ++e) {
      Witness w;
      w.twins = lookup_vertices(h, annotations, "We:" + std::to_string(e));
      for (int v : base_edges[e - 1])
        if (base_degree[v] == 1) w.twins.push_back(v);
      std::sort(w.twins.begin(), w.twins.end());
      w.theorem = "graph-power";
      witnesses.push_back(std::move(w));
    }
  } else {
    auto central = lookup_vertices(h, annotations, "central");
    std::set<int> central_set(central.begin(), central.end());
    for (int i = 1; annotations.count("U:" + std::to_string(i)); ++i) {
      Witness w;
      for (int v : lookup_vertices(h, annotations, "U:" + std::to_string(i)))
        if (!central_set.count(v)) w.twins.push_back(v);
      std::sort(w.twins.begin(), w.twins.end());
      w.theorem = "squid";
      witnesses.push_back(std::move(w));
    }
  }

  for (const Witness& w : witnesses) {
    if (w.twins.size() < 2) continue;
    // the twin set must be private to one hyperedge
    std::vector<int> star = h.star(w.twins[0]);
    bool ok = star.size() == 1;
    for (int v : w.twins)
      if (h.star(v) != star) ok = false;
    if (!ok)
      fail(ErrorCode::MissingAnnotations,
           "annotated twin set is not private to a single hyperedge");
    double c;
    if (!delta_v_constant_on(wa, w.twins, &c)) continue;
    int e0 = star[0];
    double k = static_cast<double>(h.edge(e0).size());
    for (OperatorKind kind : {OperatorKind::L, OperatorKind::Adjacency}) {
      EigenPrediction p;
      p.operator_kind = kind;
      p.value = kind == OperatorKind::L ? -wa.delta_e[e0] / (c * k)
                                        : -wa.delta_e[e0] / (c * k * k);
      p.multiplicity_lower_bound = w.twins.size() - 1;
      p.basis = difference_basis(h.n_vertices(), w.twins);
      p.theorem = w.theorem +
                  (kind == OperatorKind::Adjacency ? "-adjacency" : "");
      p.witness_vertices = w.twins;
      p.witness_edges = {e0};
      p.constants = {{"c", c}};
      p.scheme_tag = wa.fingerprint();
      preds.push_back(std::move(p));
    }
  }
  return preds;
}

HyperflowerSpectrum hyperflower_full_spectrum(const Hypergraph& h,
                                              const Annotations& annotations,
                                              const WeightAssignment& wa) {
  std::vector<int> w = lookup_vertices(h, annotations, "W");
  if (w.empty())
    fail(ErrorCode::MissingAnnotations, "hyperflower core W must be nonempty");
  if (annotations.count("core:2"))
    fail(ErrorCode::HypothesisViolated,
         "the complete spectrum is available for (l,1)-hyperflowers only");
  std::vector<std::vector<int>> groups;
  for (int i = 1; annotations.count("U:" + std::to_string(i)); ++i)
    groups.push_back(lookup_vertices(h, annotations, "U:" + std::to_string(i)));
  if (groups.empty())
    fail(ErrorCode::MissingAnnotations, "hyperflower needs U: annotations");
  const std::size_t l = groups.size();
  const std::size_t t = groups[0].size();
  const std::size_t wsize = w.size();
  if (h.n_vertices() != l * t + wsize || h.n_edges() != l)
    fail(ErrorCode::MissingAnnotations,
         "annotations do not describe this hypergraph");

  double c;
  std::vector<int> all(h.n_vertices());
  for (std::size_t v = 0; v < all.size(); ++v) all[v] = static_cast<int>(v);
  if (!delta_v_constant_on(wa, all, &c))
    fail(ErrorCode::HypothesisViolated,
         "delta_V must be constant on V for the complete spectrum");
  std::vector<double> omegas;
  for (std::size_t e = 0; e < h.n_edges(); ++e) {
    double k = static_cast<double>(h.edge(static_cast<int>(e)).size());
    omegas.push_back(wa.delta_e[e] / (k * k));
  }
  if (!nearly_constant(omegas))
    fail(ErrorCode::HypothesisViolated,
         "delta_E(e)/|e|^2 must be constant on E for the complete spectrum");
  const double omega = omegas[0];
  const double alpha = omega / c;
  const double ld = static_cast<double>(l), td = static_cast<double>(t),
               wd = static_cast<double>(wsize);

  HyperflowerSpectrum out;
  auto push = [](std::vector<double>& vec, double v, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) vec.push_back(v);
  };

  // diffusion operator L
  push(out.l_eigenvalues, 0.0, 1);
  double core_sum = 0.0;
  for (std::size_t e = 0; e < h.n_edges(); ++e)
    core_sum += wa.delta_e[e] /
                static_cast<double>(h.edge(static_cast<int>(e)).size());
  push(out.l_eigenvalues, -core_sum / c, wsize - 1);
  for (std::size_t e = 0; e < h.n_edges(); ++e) {
    double k = static_cast<double>(h.edge(static_cast<int>(e)).size());
    push(out.l_eigenvalues, -wa.delta_e[e] / (c * k), t - 1);
  }
  push(out.l_eigenvalues, -alpha * wd, l - 1);
  push(out.l_eigenvalues, -alpha * (ld * td + wd), 1);
  std::sort(out.l_eigenvalues.begin(), out.l_eigenvalues.end());

  // adjacency operator: two quadratic roots plus three structural values
  double qa = wd, qb = td + ld - ld * wd - 1.0, qc = -ld * td;
  double disc = std::sqrt(qb * qb - 4.0 * qa * qc);
  double g1 = (-qb + disc) / (2.0 * qa), g2 = (-qb - disc) / (2.0 * qa);
  push(out.adjacency_eigenvalues, alpha * (wd * g1 + (td - 1.0)), 1);
  push(out.adjacency_eigenvalues, alpha * (wd * g2 + (td - 1.0)), 1);
  push(out.adjacency_eigenvalues, -alpha, l * (t - 1));
  push(out.adjacency_eigenvalues, alpha * (td - 1.0), l - 1);
  push(out.adjacency_eigenvalues, -ld * alpha, wsize - 1);
  std::sort(out.adjacency_eigenvalues.begin(), out.adjacency_eigenvalues.end());

  double sign = ((h.n_vertices() - l - 1) % 2 == 0) ? 1.0 : -1.0;
  out.det_adjacency = sign * ld * (1.0 - (td + wd)) *
                      std::pow(alpha, static_cast<double>(h.n_vertices())) *
                      std::pow(td - 1.0, ld - 1.0) *
                      std::pow(static_cast<double>(h.n_edges()), wd - 1.0);
  return out;
}

VerificationReport verify(const std::vector<EigenPrediction>& predictions,
                          const OperatorMatrix& m, const Spectrum& spectrum) {
  if (m.scheme_tag != spectrum.scheme_tag || m.kind != spectrum.kind)
    fail(ErrorCode::SchemeMismatch,
         "spectrum does not belong to the supplied operator");
  VerificationReport report;
  for (const EigenPrediction& p : predictions) {
    if (p.scheme_tag != m.scheme_tag)
      fail(ErrorCode::SchemeMismatch,
           "prediction was made under a different weight assignment");
    double expected;
    if (p.operator_kind == m.kind) {
      expected = p.value;
    } else if (p.operator_kind == OperatorKind::L &&
               m.kind == OperatorKind::Laplacian) {
      expected = -p.value;
    } else {
      fail(ErrorCode::SchemeMismatch,
           "prediction targets a different operator kind");
    }
    PredictionOutcome oc;
    oc.prediction = p;
    ResidualReport rr = residual_check(m, expected, p.basis);
    oc.max_residual = 0.0;
    for (double r : rr.residuals) oc.max_residual = std::max(oc.max_residual, r);
    std::size_t mult = 0;
    double best = 0.0, best_gap = 1e300;
    for (double ev : spectrum.eigenvalues) {
      double gap = std::fabs(ev - expected);
      if (gap <= 1e-7) ++mult;
      if (gap < best_gap) {
        best_gap = gap;
        best = ev;
      }
    }
    oc.multiplicity_found = mult;
    oc.matched_value = best;
    oc.pass = rr.pass && mult >= p.multiplicity_lower_bound;
    report.all_pass = report.all_pass && oc.pass;
    report.outcomes.push_back(std::move(oc));
  }
  return report;
}

}  // namespace hyperspec
