#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "hyperspec/error.hpp"
#include "hyperspec/weights.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace hyperspec;
using oracles::Rational;

namespace {

Hypergraph h20() {
  return Hypergraph::from_indices(
      20, {{0, 1, 2, 3},
           {0, 1, 4, 5, 6},
           {0, 1, 7, 8, 9},
           {0, 1, 10, 11, 12, 13},
           {0, 1, 14, 15, 16, 17, 18, 19}});
}

// the preset delta_E formulas in exact arithmetic
Rational preset_delta_e(SchemeKind kind, std::int64_t k) {
  switch (kind) {
    case SchemeKind::Rodriguez:
    case SchemeKind::Signless:
      return Rational(k * k);
    case SchemeKind::Banerjee:
    case SchemeKind::Normalized:
      return Rational(k * k, k - 1);
    default:
      return Rational(0);
  }
}

}  // namespace

TEST_CASE("preset formulas") {
  Hypergraph e4 = Hypergraph::from_indices(4, {{0, 1, 2, 3}});
  CHECK(resolve(WeightScheme::preset(SchemeKind::Rodriguez), e4).delta_e[0] ==
        doctest::Approx(16.0));

  Hypergraph e5 = Hypergraph::from_indices(5, {{0, 1, 2, 3, 4}});
  CHECK(resolve(WeightScheme::preset(SchemeKind::Banerjee), e5).delta_e[0] ==
        doctest::Approx(25.0 / 4.0));

  WeightAssignment norm =
      resolve(WeightScheme::preset(SchemeKind::Normalized), h20());
  CHECK(norm.delta_v[0] == doctest::Approx(5.0));  // vertex 1 in all 5 edges
  CHECK(norm.delta_v[2] == doctest::Approx(1.0));

  // banerjee multiplies by the hyperedge weight
  Hypergraph weighted =
      Hypergraph::from_indices(3, {{0, 1, 2}}, std::vector<double>{2.5});
  CHECK(resolve(WeightScheme::preset(SchemeKind::Banerjee), weighted)
            .delta_e[0] == doctest::Approx(2.5 * 9.0 / 2.0));
  // the other presets do not
  CHECK(resolve(WeightScheme::preset(SchemeKind::Rodriguez), weighted)
            .delta_e[0] == doctest::Approx(9.0));
}

TEST_CASE("preset formulas are exact rationals for |e| <= 12") {
  for (std::int64_t k = 2; k <= 12; ++k) {
    Hypergraph h = Hypergraph::from_indices(
        static_cast<std::size_t>(k),
        {[&] {
          std::vector<int> e;
          for (int i = 0; i < k; ++i) e.push_back(i);
          return e;
        }()});
    for (SchemeKind kind : {SchemeKind::Rodriguez, SchemeKind::Banerjee,
                            SchemeKind::Normalized, SchemeKind::Signless}) {
      double got = resolve(WeightScheme::preset(kind), h).delta_e[0];
      CHECK(got == preset_delta_e(kind, k).value());
    }
  }
}

TEST_CASE("resolve errors") {
  Hypergraph iso = Hypergraph::from_indices(3, {{0, 1}});
  CHECK_THROWS_AS(resolve(WeightScheme::preset(SchemeKind::Normalized), iso),
                  Error);

  WeightScheme incomplete;
  incomplete.kind = SchemeKind::Custom;
  incomplete.custom_delta_v = {{"1", 1.0}, {"2", 1.0}};
  Hypergraph pair = Hypergraph::from_indices(2, {{0, 1}});
  CHECK_THROWS_AS(resolve(incomplete, pair), Error);  // missing delta_e

  WeightScheme negative;
  negative.kind = SchemeKind::Custom;
  negative.custom_delta_v = {{"1", 1.0}, {"2", -2.0}};
  negative.custom_delta_e = {{0, 1.0}};
  CHECK_THROWS_AS(resolve(negative, pair), Error);

  WeightScheme full;
  full.kind = SchemeKind::Custom;
  full.custom_delta_v = {{"1", 2.0}, {"2", 3.0}};
  full.custom_delta_e = {{0, 7.0}};
  WeightAssignment wa = resolve(full, pair);
  CHECK(wa.delta_v == std::vector<double>{2.0, 3.0});
  CHECK(wa.delta_e == std::vector<double>{7.0});
}

TEST_CASE("inner products") {
  Hypergraph h = Hypergraph::from_indices(4, {{0, 1}, {1, 2, 3}});
  WeightAssignment wa = resolve(WeightScheme::preset(SchemeKind::Rodriguez), h);
  std::vector<double> ones(4, 1.0);
  CHECK(inner_product_V(wa, ones, ones) == doctest::Approx(4.0));

  std::mt19937 rng(31);
  for (int rep = 0; rep < 50; ++rep) {
    auto x = testutil::random_vector(rng, 4);
    auto y = testutil::random_vector(rng, 4);
    // bilinear symmetry and positive definiteness
    CHECK(inner_product_V(wa, x, y) ==
          doctest::Approx(inner_product_V(wa, y, x)));
    bool zero = true;
    for (double v : x)
      if (v != 0.0) zero = false;
    if (!zero) CHECK(inner_product_V(wa, x, x) > 0.0);
  }
  CHECK_THROWS_AS(inner_product_V(wa, {1.0}, ones), Error);
  CHECK_THROWS_AS(inner_product_E(wa, {1.0}, {1.0, 2.0}), Error);
}

TEST_CASE("fingerprints distinguish assignments") {
  Hypergraph h = Hypergraph::from_indices(4, {{0, 1}, {1, 2, 3}});
  auto a = resolve(WeightScheme::preset(SchemeKind::Rodriguez), h);
  auto b = resolve(WeightScheme::preset(SchemeKind::Banerjee), h);
  auto c = resolve(WeightScheme::preset(SchemeKind::Rodriguez), h);
  CHECK(a.fingerprint() != b.fingerprint());
  CHECK(a.fingerprint() == c.fingerprint());
}
