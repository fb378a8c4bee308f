#ifndef HYPERSPEC_FAMILIES_HPP
#define HYPERSPEC_FAMILIES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

enum class Family {
  Hyperflower,
  Sunflower,
  LoosePath,
  LooseCycle,
  GraphPower,
  Squid,
};

Family family_from_string(const std::string& name);  // InvalidParams
const char* family_name(Family f);

// Role annotations: role key -> vertex ids. Generators fill these and the
// theorem predictors consume them; they survive serialization.
using Annotations = std::map<std::string, std::vector<std::string>>;

struct FamilySpec {
  Family family = Family::Sunflower;
  // hyperflower: l petals-per-core-group, r cores, t twins, |e_j| sizes
  int l = 0, r = 0, t = 0;
  std::vector<int> core_sizes;
  // sunflower (k,s), loose path/cycle (k,d), power (k), squid (k)
  int k = 0, s = 0, d = 0;
  std::optional<Hypergraph> base;  // graph_power base graph (2-uniform)
};

struct GeneratedHypergraph {
  Hypergraph hypergraph;
  Annotations annotations;
};

// Deterministic construction with systematic vertex names. Throws
// InvalidParams when the family's parameter bounds are violated.
GeneratedHypergraph generate(const FamilySpec& spec);

struct Recognition {
  bool ok = false;
  Annotations annotations;
  std::string violated_clause;  // set when !ok
};

// Checks the family's defining properties on an arbitrary hypergraph and
// reconstructs role annotations, or names the violated clause.
Recognition recognize(const Hypergraph& h, Family family);

}  // namespace hyperspec

#endif
