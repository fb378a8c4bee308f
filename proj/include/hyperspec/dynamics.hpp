#ifndef HYPERSPEC_DYNAMICS_HPP
#define HYPERSPEC_DYNAMICS_HPP

#include <functional>
#include <string>
#include <vector>

#include "hyperspec/operators.hpp"

namespace hyperspec {

struct Trajectory {
  std::vector<double> times;                // or step indices
  std::vector<std::vector<double>> states;  // one vertex function per time
  std::vector<double> conserved;            // (x_t, 1)_V per stored step
};

enum class IntegrationMethod { Euler, Rk4 };

struct DiffusionOptions {
  double total_time = 1.0;
  double dt = 1e-2;
  IntegrationMethod method = IntegrationMethod::Rk4;
  std::size_t stride = 1;  // store every stride-th step
};

// Integrates x' = L x from x0. Euler steps with dt * rho(L) >= 2 are
// rejected (StepTooLarge).
Trajectory diffuse(const Hypergraph& h, const WeightAssignment& wa,
                   const std::vector<double>& x0,
                   const DiffusionOptions& opts);

// Componentwise scalar maps for the coupled model, selected from a named
// registry so trajectories stay reproducible from config files.
struct ScalarMap {
  std::string name;
  std::function<double(double)> fn;

  static ScalarMap identity();
  static ScalarMap logistic(double a);
  static ScalarMap tanh_sigmoid();
  // piecewise-linear interpolation through (xs, ys); clamps outside
  static ScalarMap table(std::vector<double> xs, std::vector<double> ys);
  static ScalarMap from_string(const std::string& spec);  // InvalidParams
};

// One synchronous update x -> f(x) + eps * L g(x).
std::vector<double> coupled_step(const Hypergraph& h,
                                 const WeightAssignment& wa,
                                 const std::vector<double>& x,
                                 const ScalarMap& f, const ScalarMap& g,
                                 double eps);

struct RandomWalkResult {
  Trajectory trajectory;
  std::vector<double> limit;  // projection of x_1 onto 1 in (.,.)_R
  double sigma2 = 0.0;        // second-largest |eigenvalue| of P
  bool limit_claimed = false; // false when |sigma2| >= 1 - 1e-12
};

// Iterates x_{n+1} = P x_n. Errors: IsolatedVertex. When the walk is
// bipartite-like (|sigma2| ~ 1) the projection limit is still reported
// but not claimed as the iteration limit.
RandomWalkResult random_walk(const Hypergraph& h, const WeightAssignment& wa,
                             const std::vector<double>& p0,
                             std::size_t n_steps, std::size_t stride = 1);

struct InfectionRate {
  std::vector<double> rate;      // (A f(x))(v) per vertex
  bool canonical_scheme = true;  // delta_E = beta |e|^2, delta_V = 1
};

// Infection pressure A(f(x)) on state x in [0,1]^V.
InfectionRate infection_rate(const Hypergraph& h, const WeightAssignment& wa,
                             const std::vector<double>& x, const ScalarMap& f);

}  // namespace hyperspec

#endif
