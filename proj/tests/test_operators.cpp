#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "hyperspec/error.hpp"
#include "hyperspec/operators.hpp"
#include "test_util.hpp"

using namespace hyperspec;

namespace {

Hypergraph h20() {
  return Hypergraph::from_indices(
      20, {{0, 1, 2, 3},
           {0, 1, 4, 5, 6},
           {0, 1, 7, 8, 9},
           {0, 1, 10, 11, 12, 13},
           {0, 1, 14, 15, 16, 17, 18, 19}});
}

Hypergraph h11() {
  return Hypergraph::from_indices(11, {{0, 1, 2, 3, 4},
                                       {3, 4, 5, 6, 9, 10},
                                       {5, 6, 7, 8},
                                       {7, 8, 9, 10}});
}

WeightAssignment preset(const Hypergraph& h, SchemeKind kind) {
  return resolve(WeightScheme::preset(kind), h);
}

const SchemeKind kPresets[] = {SchemeKind::Rodriguez, SchemeKind::Banerjee,
                               SchemeKind::Normalized};

}  // namespace

TEST_CASE("avg") {
  Hypergraph h = h11();
  std::vector<double> ones(11, 1.0);
  for (double v : avg(h, ones)) CHECK(v == doctest::Approx(1.0));

  Hypergraph e4 = Hypergraph::from_indices(4, {{0, 1, 2, 3}});
  std::vector<double> ind(4, 0.0);
  ind[2] = 1.0;
  CHECK(avg(e4, ind)[0] == doctest::Approx(0.25));

  std::mt19937 rng(41);
  auto x = testutil::random_vector(rng, 11);
  auto a = avg(h, x);
  for (std::size_t e = 0; e < h.n_edges(); ++e) {
    double s = 0.0;
    for (int v : h.edge(static_cast<int>(e))) s += x[v];
    CHECK(a[e] == doctest::Approx(s / h.edge(static_cast<int>(e)).size()));
  }
  CHECK_THROWS_AS(avg(h, {1.0}), Error);
}

TEST_CASE("avg adjoint") {
  // delta_E(e) = |e|, delta_V = 1 collapses avg* 1 to |E_v|
  Hypergraph h = h11();
  WeightScheme custom;
  custom.kind = SchemeKind::Custom;
  for (const auto& id : h.vertex_ids()) custom.custom_delta_v[id] = 1.0;
  for (std::size_t e = 0; e < h.n_edges(); ++e)
    custom.custom_delta_e[static_cast<int>(e)] =
        static_cast<double>(h.edge(static_cast<int>(e)).size());
  WeightAssignment wa = resolve(custom, h);
  std::vector<double> ones_e(h.n_edges(), 1.0);
  auto back = avg_adjoint(h, wa, ones_e);
  for (std::size_t v = 0; v < h.n_vertices(); ++v)
    CHECK(back[v] == doctest::Approx(
                         static_cast<double>(h.star_size(static_cast<int>(v)))));

  // adjointness (avg x, b)_E = (x, avg* b)_V, both sides independent
  std::mt19937 rng(43);
  for (SchemeKind kind : kPresets) {
    WeightAssignment p = preset(h, kind);
    for (int rep = 0; rep < 20; ++rep) {
      auto x = testutil::random_vector(rng, h.n_vertices());
      auto beta = testutil::random_vector(rng, h.n_edges());
      double lhs = inner_product_E(p, avg(h, x), beta);
      double rhs = inner_product_V(p, x, avg_adjoint(h, p, beta));
      CHECK(std::fabs(lhs - rhs) <= 1e-12 * std::max(1.0, std::fabs(lhs)));
    }
  }

  // isolated vertex gets zero
  Hypergraph iso = Hypergraph::from_indices(3, {{0, 1}});
  WeightAssignment pw = preset(iso, SchemeKind::Rodriguez);
  CHECK(avg_adjoint(iso, pw, {1.0})[2] == 0.0);
}

TEST_CASE("degree profile") {
  // banerjee: r(v) = d(v); vertex 1 of the 20-vertex example has degree 5
  Hypergraph h = h20();
  DegreeProfile dp = degree_profile(h, preset(h, SchemeKind::Banerjee));
  CHECK(dp.r[0] == doctest::Approx(5.0));
  CHECK(dp.r0 == doctest::Approx(5.0));
  for (std::size_t v = 0; v < h.n_vertices(); ++v)
    CHECK(dp.r[v] == doctest::Approx(h.degree(static_cast<int>(v))));

  Hypergraph iso = Hypergraph::from_indices(3, {{0, 1}});
  DegreeProfile ip = degree_profile(iso, preset(iso, SchemeKind::Rodriguez));
  CHECK(ip.r[2] == 0.0);

  Hypergraph e3 = Hypergraph::from_indices(3, {{0, 1, 2}});
  DegreeProfile ep = degree_profile(e3, preset(e3, SchemeKind::Rodriguez));
  for (int v = 0; v < 3; ++v) CHECK(ep.r[v] == doctest::Approx(2.0));

  // n = Q(1)
  for (SchemeKind kind : kPresets) {
    WeightAssignment wa = preset(h, kind);
    DegreeProfile p = degree_profile(h, wa);
    std::vector<double> ones(h.n_vertices(), 1.0);
    auto q1 = build(h, wa, OperatorKind::Q).apply(ones);
    for (std::size_t v = 0; v < h.n_vertices(); ++v)
      CHECK(p.n[v] == doctest::Approx(q1[v]).epsilon(1e-12));
  }
}

TEST_CASE("L annihilates constants and matches the defining formula") {
  std::mt19937 rng(47);
  for (SchemeKind kind : kPresets) {
    for (int rep = 0; rep < 10; ++rep) {
      Hypergraph h = testutil::random_connected_hypergraph(rng, 8, 5);
      WeightAssignment wa = preset(h, kind);
      OperatorMatrix l = build(h, wa, OperatorKind::L);
      std::vector<double> ones(8, 1.0);
      for (double v : l.apply(ones)) CHECK(std::fabs(v) <= 1e-12);
      // entrywise: (Lx)(v) = sum_e delta_E/delta_V/|e|^2 sum_u (x(u)-x(v))
      auto x = testutil::random_vector(rng, 8);
      auto lx = l.apply(x);
      for (int v = 0; v < 8; ++v) {
        double expect = 0.0;
        for (int e : h.star(v)) {
          double k = static_cast<double>(h.edge(e).size());
          double coeff = wa.delta_e[e] / (wa.delta_v[v] * k * k);
          for (int u : h.edge(e)) expect += coeff * (x[u] - x[v]);
        }
        CHECK(lx[v] == doctest::Approx(expect).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("quadratic form identity and negative semidefiniteness") {
  std::mt19937 rng(53);
  for (SchemeKind kind : kPresets) {
    for (int rep = 0; rep < 10; ++rep) {
      Hypergraph h = testutil::random_connected_hypergraph(rng, 9, 5);
      WeightAssignment wa = preset(h, kind);
      OperatorMatrix l = build(h, wa, OperatorKind::L);
      auto x = testutil::random_vector(rng, 9);
      double quad = inner_product_V(wa, l.apply(x), x);
      CHECK(quad <= 1e-10);
      double expect = 0.0;
      for (std::size_t e = 0; e < h.n_edges(); ++e) {
        const auto& mem = h.edge(static_cast<int>(e));
        double k = static_cast<double>(mem.size());
        double coeff = wa.delta_e[e] / (k * k);
        for (std::size_t i = 0; i < mem.size(); ++i)
          for (std::size_t j = i + 1; j < mem.size(); ++j) {
            double d = x[mem[i]] - x[mem[j]];
            expect -= coeff * d * d;
          }
      }
      CHECK(std::fabs(quad - expect) <=
            1e-10 * std::max(1.0, std::fabs(expect)));
    }
  }
}

TEST_CASE("L equals the negative clique-incidence sum") {
  std::mt19937 rng(59);
  for (int rep = 0; rep < 10; ++rep) {
    Hypergraph h = testutil::random_hypergraph(rng, 8, 4);
    WeightAssignment wa = preset(h, SchemeKind::Banerjee);
    OperatorMatrix l = build(h, wa, OperatorKind::L);
    // assemble sum_e delta_E/|e|^2 Qe^t Qe from oriented clique incidence
    linalg::Matrix acc(h.n_vertices());
    for (std::size_t e = 0; e < h.n_edges(); ++e) {
      const auto& mem = h.edge(static_cast<int>(e));
      double k = static_cast<double>(mem.size());
      double coeff = wa.delta_e[e] / (k * k);
      for (std::size_t i = 0; i < mem.size(); ++i)
        for (std::size_t j = i + 1; j < mem.size(); ++j) {
          acc(mem[i], mem[i]) += coeff;
          acc(mem[j], mem[j]) += coeff;
          acc(mem[i], mem[j]) -= coeff;
          acc(mem[j], mem[i]) -= coeff;
        }
    }
    for (std::size_t i = 0; i < h.n_vertices(); ++i)
      for (std::size_t j = 0; j < h.n_vertices(); ++j)
        CHECK(l.entries(i, j) ==
              doctest::Approx(-acc(i, j) / wa.delta_v[i]).epsilon(1e-12));
  }
}

TEST_CASE("weighted self-adjointness of Q, L, laplacian, adjacency") {
  std::mt19937 rng(61);
  for (SchemeKind kind : kPresets) {
    Hypergraph h = testutil::random_connected_hypergraph(rng, 10, 6);
    WeightAssignment wa = preset(h, kind);
    for (OperatorKind ok : {OperatorKind::Q, OperatorKind::L,
                            OperatorKind::Laplacian, OperatorKind::Adjacency}) {
      OperatorMatrix m = build(h, wa, ok);
      for (std::size_t u = 0; u < h.n_vertices(); ++u)
        for (std::size_t v = 0; v < h.n_vertices(); ++v)
          CHECK(std::fabs(wa.delta_v[u] * m.entries(u, v) -
                          wa.delta_v[v] * m.entries(v, u)) <= 1e-12);
    }
  }
}

TEST_CASE("signless scheme turns Q into incidence * incidence^T") {
  std::mt19937 rng(67);
  for (int rep = 0; rep < 10; ++rep) {
    Hypergraph h = testutil::random_hypergraph(rng, 8, 5);
    WeightAssignment wa = preset(h, SchemeKind::Signless);
    OperatorMatrix q = build(h, wa, OperatorKind::Q);
    for (std::size_t u = 0; u < h.n_vertices(); ++u)
      for (std::size_t v = 0; v < h.n_vertices(); ++v) {
        double expect = 0.0;
        for (std::size_t e = 0; e < h.n_edges(); ++e)
          if (h.edge_contains(static_cast<int>(e), static_cast<int>(u)) &&
              h.edge_contains(static_cast<int>(e), static_cast<int>(v)))
            expect += 1.0;
        CHECK(q.entries(u, v) == doctest::Approx(expect).epsilon(1e-12));
      }
  }
}

TEST_CASE("adjacency decomposition A = L + diag(r)") {
  std::mt19937 rng(71);
  Hypergraph h = testutil::random_connected_hypergraph(rng, 9, 6);
  for (SchemeKind kind : kPresets) {
    WeightAssignment wa = preset(h, kind);
    OperatorMatrix l = build(h, wa, OperatorKind::L);
    OperatorMatrix a = build(h, wa, OperatorKind::Adjacency);
    DegreeProfile dp = degree_profile(h, wa);
    auto x = testutil::random_vector(rng, 9);
    auto ax = a.apply(x);
    auto lx = l.apply(x);
    for (int v = 0; v < 9; ++v)
      CHECK(ax[v] == doctest::Approx(lx[v] + dp.r[v] * x[v]).epsilon(1e-12));
  }
}

TEST_CASE("B is the adjacency matrix of the weighted underlying graph") {
  std::mt19937 rng(73);
  for (int rep = 0; rep < 10; ++rep) {
    Hypergraph h = testutil::random_hypergraph(rng, 9, 5);
    WeightAssignment wa = preset(h, SchemeKind::Banerjee);
    OperatorMatrix b = build(h, wa, OperatorKind::InducedB);
    // G_w built independently: w0({u,v}) = sum_{e ∍ u,v} delta_E(e)/|e|^2
    for (std::size_t u = 0; u < h.n_vertices(); ++u)
      for (std::size_t v = 0; v < h.n_vertices(); ++v) {
        double w0 = 0.0;
        if (u != v)
          for (std::size_t e = 0; e < h.n_edges(); ++e) {
            double k = static_cast<double>(h.edge(static_cast<int>(e)).size());
            if (h.edge_contains(static_cast<int>(e), static_cast<int>(u)) &&
                h.edge_contains(static_cast<int>(e), static_cast<int>(v)))
              w0 += wa.delta_e[e] / (k * k);
          }
        CHECK(b.entries(u, v) == doctest::Approx(w0).epsilon(1e-12));
      }
    // A[v,.] = (1/delta_V(v)) B[v,.]
    OperatorMatrix a = build(h, wa, OperatorKind::Adjacency);
    for (std::size_t u = 0; u < h.n_vertices(); ++u)
      for (std::size_t v = 0; v < h.n_vertices(); ++v)
        CHECK(a.entries(u, v) ==
              doctest::Approx(b.entries(u, v) / wa.delta_v[u]).epsilon(1e-12));
    // B0 pattern matches the underlying graph
    OperatorMatrix b0 = build(h, wa, OperatorKind::B0);
    Hypergraph g0 = underlying_graph(h);
    for (const auto& e : g0.edges()) {
      CHECK(b0.entries(e[0], e[1]) == 1.0);
      CHECK(b0.entries(e[1], e[0]) == 1.0);
    }
  }
}

TEST_CASE("B^n positivity tracks walks of length n") {
  std::mt19937 rng(79);
  for (int rep = 0; rep < 8; ++rep) {
    Hypergraph h = testutil::random_hypergraph(rng, 8, 4);
    WeightAssignment wa = preset(h, SchemeKind::Rodriguez);
    linalg::Matrix b = build(h, wa, OperatorKind::InducedB).entries;
    // boolean adjacency powers as the independent oracle
    const std::size_t n = h.n_vertices();
    std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i) reach[i][i] = 1;  // length 0
    linalg::Matrix bn = linalg::Matrix::identity(n);
    for (int len = 1; len <= 4; ++len) {
      bn = linalg::matmul(bn, b);
      std::vector<std::vector<char>> next(n, std::vector<char>(n, 0));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
          if (reach[i][k])
            for (std::size_t j = 0; j < n; ++j)
              if (b(k, j) > 0.0) next[i][j] = 1;
      reach = std::move(next);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          CHECK((bn(i, j) > 1e-12) == (reach[i][j] != 0));
    }
  }
}

TEST_CASE("normalized Laplacian quadratic bounds") {
  std::mt19937 rng(83);
  for (SchemeKind kind : kPresets) {
    for (int rep = 0; rep < 8; ++rep) {
      Hypergraph h = testutil::random_connected_hypergraph(rng, 8, 5);
      WeightAssignment wa = preset(h, kind);
      OperatorMatrix nl = build(h, wa, OperatorKind::NormalizedL);
      auto x = testutil::random_vector(rng, 8);
      double quad = inner_product_V(wa, nl.apply(x), x);
      double xx = inner_product_V(wa, x, x);
      CHECK(quad >= -1e-10);
      CHECK(quad <= 2.0 * xx + 1e-10);
    }
  }
}

TEST_CASE("transition matrix and walk Laplacian") {
  std::mt19937 rng(89);
  for (int rep = 0; rep < 8; ++rep) {
    Hypergraph h = testutil::random_connected_hypergraph(rng, 8, 5);
    for (SchemeKind kind : kPresets) {
      WeightAssignment wa = preset(h, kind);
      OperatorMatrix p = build(h, wa, OperatorKind::TransitionP);
      std::vector<double> ones(8, 1.0);
      for (double v : p.apply(ones)) CHECK(v == doctest::Approx(1.0));
      for (int v = 0; v < 8; ++v) CHECK(p.entries(v, v) == 0.0);
      // (.,.)_R self-adjointness: r(u) dV(u) P[u,v] = r(v) dV(v) P[v,u]
      DegreeProfile dp = degree_profile(h, wa);
      for (int u = 0; u < 8; ++u)
        for (int v = 0; v < 8; ++v)
          CHECK(std::fabs(dp.r[u] * wa.delta_v[u] * p.entries(u, v) -
                          dp.r[v] * wa.delta_v[v] * p.entries(v, u)) <= 1e-12);
      // Delta = I - P, positive semidefinite in (.,.)_R
      OperatorMatrix d = build(h, wa, OperatorKind::DeltaRW);
      auto x = testutil::random_vector(rng, 8);
      auto dx = d.apply(x);
      double quad = inner_product_weighted(d.weight_diag, dx, x);
      CHECK(quad >= -1e-10);
      for (int u = 0; u < 8; ++u)
        for (int v = 0; v < 8; ++v)
          CHECK(d.entries(u, v) ==
                doctest::Approx((u == v ? 1.0 : 0.0) - p.entries(u, v)));
    }
  }
}

TEST_CASE("kinds requiring positive r reject isolated vertices") {
  Hypergraph iso = Hypergraph::from_indices(3, {{0, 1}});
  WeightAssignment wa = preset(iso, SchemeKind::Rodriguez);
  for (OperatorKind ok : {OperatorKind::NormalizedL, OperatorKind::TransitionP,
                          OperatorKind::DeltaRW})
    CHECK_THROWS_AS(build(iso, wa, ok), Error);
  // Q, L, adjacency tolerate them
  for (OperatorKind ok :
       {OperatorKind::Q, OperatorKind::L, OperatorKind::Adjacency})
    CHECK_NOTHROW(build(iso, wa, ok));
}

TEST_CASE("apply dimension checks") {
  Hypergraph h = Hypergraph::from_indices(3, {{0, 1, 2}});
  WeightAssignment wa = preset(h, SchemeKind::Rodriguez);
  OperatorMatrix l = build(h, wa, OperatorKind::L);
  CHECK_THROWS_AS(l.apply({1.0, 2.0}), Error);
}
