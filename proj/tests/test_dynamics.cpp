#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "hyperspec/dynamics.hpp"
#include "hyperspec/error.hpp"
#include "hyperspec/spectra.hpp"
#include "test_util.hpp"

using namespace hyperspec;

namespace {

WeightAssignment preset(const Hypergraph& h, SchemeKind kind) {
  return resolve(WeightScheme::preset(kind), h);
}

Hypergraph h11() {
  return Hypergraph::from_indices(11, {{0, 1, 2, 3, 4},
                                       {3, 4, 5, 6, 9, 10},
                                       {5, 6, 7, 8},
                                       {7, 8, 9, 10}});
}

}  // namespace

TEST_CASE("constant states stay put") {
  Hypergraph h = h11();
  WeightAssignment wa = preset(h, SchemeKind::Banerjee);
  DiffusionOptions opts;
  opts.total_time = 1.0;
  opts.dt = 0.01;
  Trajectory t = diffuse(h, wa, std::vector<double>(11, 1.0), opts);
  for (const auto& state : t.states)
    for (double v : state) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("eigenmode decay matches the closed form") {
  Hypergraph h = h11();
  WeightAssignment wa = preset(h, SchemeKind::Banerjee);
  OperatorMatrix l = build(h, wa, OperatorKind::L);
  Spectrum s = eig(l);
  // second-largest eigenvalue of L is -lambda_2
  const std::size_t idx = s.eigenvalues.size() - 2;
  double lambda2 = -s.eigenvalues[idx];
  REQUIRE(lambda2 > 0.0);
  DiffusionOptions opts;
  opts.total_time = 1.0;
  opts.dt = 1e-3;
  Trajectory t = diffuse(h, wa, s.eigenvectors[idx], opts);
  double decay = std::exp(-lambda2);
  for (std::size_t v = 0; v < 11; ++v)
    CHECK(t.states.back()[v] ==
          doctest::Approx(decay * s.eigenvectors[idx][v]).epsilon(1e-4));
}

TEST_CASE("diffusion conserves the weighted mass and contracts variance") {
  std::mt19937 rng(167);
  Hypergraph h = h11();
  for (SchemeKind kind : {SchemeKind::Rodriguez, SchemeKind::Banerjee,
                          SchemeKind::Normalized}) {
    WeightAssignment wa = preset(h, kind);
    auto x0 = testutil::random_vector(rng, 11);
    DiffusionOptions opts;
    opts.total_time = 10.0;
    opts.dt = 0.01;
    opts.stride = 10;
    Trajectory t = diffuse(h, wa, x0, opts);
    double mass0 = t.conserved.front();
    for (double m : t.conserved)
      CHECK(std::fabs(m - mass0) <= 1e-9 * std::max(1.0, std::fabs(mass0)));
    // distance to the projection is non-increasing
    std::vector<double> ones(11, 1.0);
    double mean = mass0 / inner_product_V(wa, ones, ones);
    double prev = 1e300;
    for (const auto& state : t.states) {
      std::vector<double> centered(11);
      for (std::size_t v = 0; v < 11; ++v) centered[v] = state[v] - mean;
      double dist = inner_product_V(wa, centered, centered);
      CHECK(dist <= prev + 1e-12);
      prev = dist;
    }
    // long-run limit is the projection onto constants once T >= 10/lambda_2
    Spectrum s = eig(build(h, wa, OperatorKind::Laplacian));
    double lambda2 = s.eigenvalues[1];
    REQUIRE(lambda2 > 0.0);
    DiffusionOptions longrun;
    longrun.total_time = std::max(10.0, 12.0 / lambda2);
    longrun.dt = 0.01;
    longrun.stride = 1000;
    Trajectory far = diffuse(h, wa, x0, longrun);
    for (double v : far.states.back())
      CHECK(v == doctest::Approx(mean).epsilon(1e-4));
  }
}

TEST_CASE("two components keep separate plateaus") {
  Hypergraph two = Hypergraph::from_indices(5, {{0, 1}, {2, 3, 4}});
  WeightAssignment wa = preset(two, SchemeKind::Banerjee);
  std::vector<double> x0{1.0, 0.0, 5.0, 5.0, 8.0};
  DiffusionOptions opts;
  opts.total_time = 50.0;
  opts.dt = 0.01;
  opts.stride = 100;
  Trajectory t = diffuse(two, wa, x0, opts);
  const auto& last = t.states.back();
  CHECK(last[0] == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(last[1] == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(last[2] == doctest::Approx(6.0).epsilon(1e-6));
  CHECK(last[4] == doctest::Approx(6.0).epsilon(1e-6));
}

TEST_CASE("euler steps reject unstable step sizes") {
  Hypergraph h = h11();
  WeightAssignment wa = preset(h, SchemeKind::Rodriguez);
  DiffusionOptions opts;
  opts.method = IntegrationMethod::Euler;
  opts.total_time = 1.0;
  opts.dt = 1.0;  // rho(L) is far above 2 here
  CHECK_THROWS_AS(diffuse(h, wa, std::vector<double>(11, 0.5), opts), Error);
  opts.dt = 1e-3;
  CHECK_NOTHROW(diffuse(h, wa, std::vector<double>(11, 0.5), opts));
}

TEST_CASE("coupled step") {
  Hypergraph h = h11();
  WeightAssignment wa = preset(h, SchemeKind::Banerjee);
  std::mt19937 rng(173);
  auto x = testutil::random_vector(rng, 11);

  // f = g = id: one euler diffusion step of size eps
  double eps = 1e-3;
  auto next = coupled_step(h, wa, x, ScalarMap::identity(),
                           ScalarMap::identity(), eps);
  OperatorMatrix l = build(h, wa, OperatorKind::L);
  auto lx = l.apply(x);
  for (std::size_t v = 0; v < 11; ++v)
    CHECK(next[v] == doctest::Approx(x[v] + eps * lx[v]).epsilon(1e-12));

  // eps = 0 with the logistic map: decoupled scalar chaos
  std::vector<double> state(11);
  for (std::size_t v = 0; v < 11; ++v)
    state[v] = 0.1 + 0.05 * static_cast<double>(v);
  std::vector<double> scalar = state;
  ScalarMap f = ScalarMap::logistic(4.0);
  for (int step = 0; step < 50; ++step) {
    state = coupled_step(h, wa, state, f, ScalarMap::identity(), 0.0);
    for (double& v : scalar) v = 4.0 * v * (1.0 - v);
  }
  for (std::size_t v = 0; v < 11; ++v)
    CHECK(state[v] == doctest::Approx(scalar[v]).epsilon(1e-9));

  // synchronized states stay on the manifold
  std::vector<double> sync(11, 0.3);
  auto out = coupled_step(h, wa, sync, f, ScalarMap::tanh_sigmoid(), 0.7);
  for (double v : out)
    CHECK(v == doctest::Approx(4.0 * 0.3 * 0.7).epsilon(1e-12));
}

TEST_CASE("scalar map registry") {
  CHECK(ScalarMap::from_string("identity").fn(0.4) == 0.4);
  CHECK(ScalarMap::from_string("logistic:4").fn(0.5) == doctest::Approx(1.0));
  CHECK(ScalarMap::from_string("tanh").fn(0.0) == 0.0);
  CHECK_THROWS_AS(ScalarMap::from_string("nope"), Error);
  ScalarMap t = ScalarMap::table({0.0, 1.0}, {0.0, 2.0});
  CHECK(t.fn(0.25) == doctest::Approx(0.5));
  CHECK(t.fn(-1.0) == 0.0);
  CHECK(t.fn(9.0) == 2.0);
  CHECK_THROWS_AS(ScalarMap::table({0.0}, {1.0}), Error);
}

TEST_CASE("random walk converges to the weighted projection") {
  std::mt19937 rng(179);
  for (SchemeKind kind : {SchemeKind::Rodriguez, SchemeKind::Banerjee}) {
    for (int rep = 0; rep < 10; ++rep) {
      Hypergraph h = testutil::random_connected_hypergraph(rng, 8, 6);
      WeightAssignment wa = preset(h, kind);
      auto p0 = testutil::random_vector(rng, 8);
      RandomWalkResult probe = random_walk(h, wa, p0, 1);
      if (!probe.limit_claimed) continue;  // bipartite-like instance
      std::size_t steps = static_cast<std::size_t>(
          std::ceil(20.0 / (1.0 - probe.sigma2)));
      RandomWalkResult rw = random_walk(h, wa, p0, steps);
      for (std::size_t v = 0; v < 8; ++v)
        CHECK(std::fabs(rw.trajectory.states.back()[v] - rw.limit[v]) <= 1e-6);
    }
  }
}

TEST_CASE("single graph edge is bipartite-like but keeps its projection") {
  Hypergraph pair = Hypergraph::from_indices(2, {{0, 1}});
  WeightAssignment wa = preset(pair, SchemeKind::Rodriguez);
  std::vector<double> uniform{0.5, 0.5};
  RandomWalkResult rw = random_walk(pair, wa, uniform, 4);
  CHECK_FALSE(rw.limit_claimed);  // sigma2 = 1: the walk oscillates
  CHECK(rw.sigma2 == doctest::Approx(1.0));
  // the uniform start is itself the projection and stays fixed
  CHECK(rw.limit[0] == doctest::Approx(0.5));
  for (const auto& state : rw.trajectory.states)
    for (double v : state) CHECK(v == doctest::Approx(0.5));
}

TEST_CASE("walk Laplacian spectrum sits inside [0, 2)") {
  std::mt19937 rng(181);
  for (int rep = 0; rep < 100; ++rep) {
    Hypergraph h = testutil::random_connected_hypergraph(rng, 7, 5);
    WeightAssignment wa = preset(h, SchemeKind::Banerjee);
    Spectrum s = eig(build(h, wa, OperatorKind::DeltaRW));
    CHECK(s.eigenvalues.front() >= -1e-9);
    CHECK(s.eigenvalues.back() < 2.0);
  }
}

TEST_CASE("infection rate") {
  Hypergraph h = h11();
  // canonical scheme: delta_V = 1, delta_E = beta |e|^2 with beta = 1
  WeightAssignment wa = preset(h, SchemeKind::Rodriguez);

  InfectionRate zero =
      infection_rate(h, wa, std::vector<double>(11, 0.0), ScalarMap::identity());
  CHECK(zero.canonical_scheme);
  for (double v : zero.rate) CHECK(v == 0.0);

  // a single infected vertex u contributes column A[., u]
  OperatorMatrix a = build(h, wa, OperatorKind::Adjacency);
  std::vector<double> one_hot(11, 0.0);
  one_hot[3] = 1.0;
  InfectionRate ir = infection_rate(h, wa, one_hot, ScalarMap::identity());
  for (std::size_t v = 0; v < 11; ++v)
    CHECK(ir.rate[v] == doctest::Approx(a.entries(v, 3)).epsilon(1e-12));

  // fully infected population: rate(v) = r(v)
  DegreeProfile dp = degree_profile(h, wa);
  InfectionRate full =
      infection_rate(h, wa, std::vector<double>(11, 1.0), ScalarMap::identity());
  for (std::size_t v = 0; v < 11; ++v)
    CHECK(full.rate[v] == doctest::Approx(dp.r[v]).epsilon(1e-12));

  // non-canonical schemes are flagged
  WeightAssignment norm = preset(h, SchemeKind::Normalized);
  CHECK_FALSE(infection_rate(h, norm, one_hot, ScalarMap::identity())
                  .canonical_scheme);
}
