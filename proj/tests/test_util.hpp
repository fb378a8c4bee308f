// Shared test helpers: seeded random hypergraphs and vectors.
#ifndef HYPERSPEC_TESTS_TEST_UTIL_HPP
#define HYPERSPEC_TESTS_TEST_UTIL_HPP

#include <random>
#include <set>
#include <vector>

#include "hyperspec/hypergraph.hpp"

namespace testutil {

// Erdos-Renyi-style sampler: n vertices, m edges of size 2..max_size.
inline hyperspec::Hypergraph random_hypergraph(std::mt19937& rng, int n,
                                               int m, int max_size = 5) {
  std::uniform_int_distribution<int> size_dist(2, std::min(n, max_size));
  std::uniform_int_distribution<int> vert(0, n - 1);
  std::vector<std::vector<int>> edges;
  while (static_cast<int>(edges.size()) < m) {
    int k = size_dist(rng);
    std::set<int> members;
    while (static_cast<int>(members.size()) < k) members.insert(vert(rng));
    edges.emplace_back(members.begin(), members.end());
  }
  return hyperspec::Hypergraph::from_indices(n, edges);
}

// Keeps sampling until connected (and optionally isolated-vertex free,
// which connectivity already implies for n >= 2).
inline hyperspec::Hypergraph random_connected_hypergraph(std::mt19937& rng,
                                                         int n, int m,
                                                         int max_size = 5) {
  for (;;) {
    hyperspec::Hypergraph h = random_hypergraph(rng, n, m, max_size);
    if (hyperspec::components(h).size() == 1) return h;
  }
}

inline std::vector<double> random_vector(std::mt19937& rng, std::size_t n) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> x(n);
  for (double& v : x) v = dist(rng);
  return x;
}

}  // namespace testutil

#endif
