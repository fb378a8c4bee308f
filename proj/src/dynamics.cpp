#include "hyperspec/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "hyperspec/error.hpp"
#include "hyperspec/spectra.hpp"

namespace hyperspec {

Trajectory diffuse(const Hypergraph& h, const WeightAssignment& wa,
                   const std::vector<double>& x0,
                   const DiffusionOptions& opts) {
  if (x0.size() != h.n_vertices())
    fail(ErrorCode::DimensionMismatch, "x0 is not indexed over V");
  if (opts.dt <= 0.0 || opts.total_time < opts.dt)
    fail(ErrorCode::InvalidParams, "need dt > 0 and T >= dt");
  OperatorMatrix l = build(h, wa, OperatorKind::L);
  if (opts.method == IntegrationMethod::Euler) {
    double rho = eig(l).spectral_radius();
    if (opts.dt * rho >= 2.0)
      fail(ErrorCode::StepTooLarge,
           "euler with dt * rho(L) = " + std::to_string(opts.dt * rho) +
               " >= 2 is unstable");
  }
  const std::size_t steps =
      static_cast<std::size_t>(std::llround(opts.total_time / opts.dt));
  Trajectory traj;
  std::vector<double> x = x0;
  std::vector<double> ones(h.n_vertices(), 1.0);
  auto store = [&](double t, const std::vector<double>& state) {
    traj.times.push_back(t);
    traj.states.push_back(state);
    traj.conserved.push_back(inner_product_V(wa, state, ones));
  };
  store(0.0, x);
  for (std::size_t i = 1; i <= steps; ++i) {
    if (opts.method == IntegrationMethod::Euler) {
      std::vector<double> lx = l.apply(x);
      for (std::size_t v = 0; v < x.size(); ++v) x[v] += opts.dt * lx[v];
    } else {
      std::vector<double> k1 = l.apply(x);
      std::vector<double> tmp(x.size());
      for (std::size_t v = 0; v < x.size(); ++v)
        tmp[v] = x[v] + 0.5 * opts.dt * k1[v];
      std::vector<double> k2 = l.apply(tmp);
      for (std::size_t v = 0; v < x.size(); ++v)
        tmp[v] = x[v] + 0.5 * opts.dt * k2[v];
      std::vector<double> k3 = l.apply(tmp);
      for (std::size_t v = 0; v < x.size(); ++v)
        tmp[v] = x[v] + opts.dt * k3[v];
      std::vector<double> k4 = l.apply(tmp);
      for (std::size_t v = 0; v < x.size(); ++v)
        x[v] += opts.dt / 6.0 * (k1[v] + 2.0 * k2[v] + 2.0 * k3[v] + k4[v]);
    }
    if (i % std::max<std::size_t>(1, opts.stride) == 0 || i == steps)
      store(static_cast<double>(i) * opts.dt, x);
  }
  return traj;
}

ScalarMap ScalarMap::identity() {
  return {"identity", [](double x) { return x; }};
}

ScalarMap ScalarMap::logistic(double a) {
  return {"logistic(" + std::to_string(a) + ")",
          [a](double x) { return a * x * (1.0 - x); }};
}

ScalarMap ScalarMap::tanh_sigmoid() {
  return {"tanh", [](double x) { return std::tanh(x); }};
}

ScalarMap ScalarMap::table(std::vector<double> xs, std::vector<double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2)
    fail(ErrorCode::InvalidParams, "table map needs >= 2 aligned knots");
  for (std::size_t i = 1; i < xs.size(); ++i)
    if (xs[i] <= xs[i - 1])
      fail(ErrorCode::InvalidParams, "table knots must be increasing");
  return {"table",
          [xs = std::move(xs), ys = std::move(ys)](double x) {
            if (x <= xs.front()) return ys.front();
            if (x >= xs.back()) return ys.back();
            std::size_t hi =
                std::upper_bound(xs.begin(), xs.end(), x) - xs.begin();
            double t = (x - xs[hi - 1]) / (xs[hi] - xs[hi - 1]);
            return ys[hi - 1] + t * (ys[hi] - ys[hi - 1]);
          }};
}

ScalarMap ScalarMap::from_string(const std::string& spec) {
  if (spec == "identity" || spec == "id") return identity();
  if (spec == "tanh") return tanh_sigmoid();
  if (spec.rfind("logistic:", 0) == 0)
    return logistic(std::stod(spec.substr(9)));
  fail(ErrorCode::InvalidParams,
       "unknown map '" + spec + "' (identity | tanh | logistic:<a>)");
}

std::vector<double> coupled_step(const Hypergraph& h,
                                 const WeightAssignment& wa,
                                 const std::vector<double>& x,
                                 const ScalarMap& f, const ScalarMap& g,
                                 double eps) {
  if (x.size() != h.n_vertices())
    fail(ErrorCode::DimensionMismatch, "state is not indexed over V");
  OperatorMatrix l = build(h, wa, OperatorKind::L);
  std::vector<double> gx(x.size());
  for (std::size_t v = 0; v < x.size(); ++v) gx[v] = g.fn(x[v]);
  std::vector<double> lg = l.apply(gx);
  std::vector<double> out(x.size());
  for (std::size_t v = 0; v < x.size(); ++v)
    out[v] = f.fn(x[v]) + eps * lg[v];
  return out;
}

RandomWalkResult random_walk(const Hypergraph& h, const WeightAssignment& wa,
                             const std::vector<double>& p0,
                             std::size_t n_steps, std::size_t stride) {
  if (p0.size() != h.n_vertices())
    fail(ErrorCode::DimensionMismatch, "start state is not indexed over V");
  OperatorMatrix p = build(h, wa, OperatorKind::TransitionP);
  OperatorMatrix delta = build(h, wa, OperatorKind::DeltaRW);
  Spectrum ds = eig(delta);

  RandomWalkResult out;
  // P = I - Delta: sigma2 is the largest |1 - mu| away from the
  // eigenvalue-1 pair (mu = 0 of Delta).
  double sigma2 = 0.0;
  bool skipped_unit = false;
  for (double mu : ds.eigenvalues) {
    if (!skipped_unit && std::fabs(mu) < 1e-9) {
      skipped_unit = true;
      continue;
    }
    sigma2 = std::max(sigma2, std::fabs(1.0 - mu));
  }
  out.sigma2 = sigma2;
  out.limit_claimed = sigma2 < 1.0 - 1e-12;

  std::vector<double> ones(h.n_vertices(), 1.0);
  double proj = inner_product_weighted(delta.weight_diag, p0, ones) /
                inner_product_weighted(delta.weight_diag, ones, ones);
  out.limit.assign(h.n_vertices(), proj);

  std::vector<double> x = p0;
  out.trajectory.times.push_back(0.0);
  out.trajectory.states.push_back(x);
  out.trajectory.conserved.push_back(
      inner_product_weighted(delta.weight_diag, x, ones));
  for (std::size_t i = 1; i <= n_steps; ++i) {
    x = p.apply(x);
    if (i % std::max<std::size_t>(1, stride) == 0 || i == n_steps) {
      out.trajectory.times.push_back(static_cast<double>(i));
      out.trajectory.states.push_back(x);
      out.trajectory.conserved.push_back(
          inner_product_weighted(delta.weight_diag, x, ones));
    }
  }
  return out;
}

InfectionRate infection_rate(const Hypergraph& h, const WeightAssignment& wa,
                             const std::vector<double>& x,
                             const ScalarMap& f) {
  if (x.size() != h.n_vertices())
    fail(ErrorCode::DimensionMismatch, "state is not indexed over V");
  InfectionRate out;
  // canonical instantiation: delta_V = 1, delta_E(e) = beta |e|^2
  for (double dv : wa.delta_v)
    if (std::fabs(dv - 1.0) > 1e-12) out.canonical_scheme = false;
  if (!wa.delta_e.empty()) {
    double beta0 = wa.delta_e[0] /
                   std::pow(static_cast<double>(h.edge(0).size()), 2.0);
    for (std::size_t e = 0; e < h.n_edges(); ++e) {
      double k = static_cast<double>(h.edge(static_cast<int>(e)).size());
      if (std::fabs(wa.delta_e[e] / (k * k) - beta0) > 1e-12 * beta0)
        out.canonical_scheme = false;
    }
  }
  OperatorMatrix a = build(h, wa, OperatorKind::Adjacency);
  std::vector<double> fx(x.size());
  for (std::size_t v = 0; v < x.size(); ++v) fx[v] = f.fn(x[v]);
  out.rate = a.apply(fx);
  return out;
}

}  // namespace hyperspec
