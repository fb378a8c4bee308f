#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "hyperspec/linalg.hpp"
#include "oracles.hpp"

using namespace hyperspec::linalg;

namespace {

Matrix random_symmetric(std::mt19937& rng, std::size_t n) {
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = dist(rng);
  return m;
}

}  // namespace

TEST_CASE("eigendecomposition reproduces M z = lambda z") {
  std::mt19937 rng(7);
  for (std::size_t n : {1u, 2u, 3u, 5u, 8u, 20u}) {
    Matrix m = random_symmetric(rng, n);
    EigenResult er = symmetric_eigen(m);
    REQUIRE(er.values.size() == n);
    for (std::size_t k = 0; k < n; ++k) {
      auto mz = matvec(m, er.vectors[k]);
      for (std::size_t i = 0; i < n; ++i)
        CHECK(std::fabs(mz[i] - er.values[k] * er.vectors[k][i]) <=
              1e-11 * (1.0 + norm_inf(m)));
    }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        double dot = 0.0;
        for (std::size_t i = 0; i < n; ++i)
          dot += er.vectors[a][i] * er.vectors[b][i];
        CHECK(dot == doctest::Approx(a == b ? 1.0 : 0.0).epsilon(1e-10));
      }
    CHECK(std::is_sorted(er.values.begin(), er.values.end()));
  }
}

TEST_CASE("eigenvalues match the characteristic-polynomial oracle, n <= 4") {
  std::mt19937 rng(11);
  for (int rep = 0; rep < 200; ++rep) {
    std::size_t n = 1 + rep % 4;
    Matrix m = random_symmetric(rng, n);
    EigenResult er = symmetric_eigen(m);
    auto expected = oracles::charpoly_eigenvalues(m);
    REQUIRE(expected.size() == n);
    for (std::size_t k = 0; k < n; ++k)
      CHECK(er.values[k] == doctest::Approx(expected[k]).epsilon(1e-7));
  }
}

TEST_CASE("degenerate spectra keep orthogonal eigenvectors") {
  // 2I plus a rank-one bump: eigenvalues {2, 2, 5}
  Matrix m(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = (i == j ? 2.0 : 0.0) + 1.0;
  EigenResult er = symmetric_eigen(m);
  CHECK(er.values[0] == doctest::Approx(2.0));
  CHECK(er.values[1] == doctest::Approx(2.0));
  CHECK(er.values[2] == doctest::Approx(5.0));
  double dot = 0.0;
  for (int i = 0; i < 3; ++i) dot += er.vectors[0][i] * er.vectors[1][i];
  CHECK(dot == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("determinant via LU") {
  Matrix m(3);
  m(0, 0) = 2;  m(0, 1) = 1;  m(0, 2) = 0;
  m(1, 0) = 1;  m(1, 1) = 3;  m(1, 2) = 1;
  m(2, 0) = 0;  m(2, 1) = 1;  m(2, 2) = 4;
  // 2*(12-1) - 1*(4-0) = 18
  CHECK(determinant(m) == doctest::Approx(18.0));
  CHECK(determinant(Matrix::identity(5)) == doctest::Approx(1.0));
  Matrix singular(2);
  singular(0, 0) = 1;
  singular(0, 1) = 2;
  singular(1, 0) = 2;
  singular(1, 1) = 4;
  CHECK(determinant(singular) == doctest::Approx(0.0));
}

TEST_CASE("product of eigenvalues equals the determinant") {
  std::mt19937 rng(13);
  Matrix m = random_symmetric(rng, 6);
  EigenResult er = symmetric_eigen(m);
  double prod = 1.0;
  for (double v : er.values) prod *= v;
  CHECK(prod == doctest::Approx(determinant(m)).epsilon(1e-8));
}

TEST_CASE("rank with dependent rows") {
  std::vector<std::vector<double>> rows{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  CHECK(rank(rows) == 2);
  CHECK(rank({{0, 0}, {0, 0}}) == 0);
  CHECK(rank({{1, 0}, {0, 1}}) == 2);
}
