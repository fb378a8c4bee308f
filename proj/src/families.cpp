#include "hyperspec/families.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "hyperspec/error.hpp"

namespace hyperspec {

Family family_from_string(const std::string& name) {
  if (name == "hyperflower") return Family::Hyperflower;
  if (name == "sunflower") return Family::Sunflower;
  if (name == "loose_path" || name == "loose-path") return Family::LoosePath;
  if (name == "loose_cycle" || name == "loose-cycle") return Family::LooseCycle;
  if (name == "graph_power" || name == "graph-power") return Family::GraphPower;
  if (name == "squid") return Family::Squid;
  fail(ErrorCode::InvalidParams, "unknown family '" + name + "'");
}

const char* family_name(Family f) {
  switch (f) {
    case Family::Hyperflower: return "hyperflower";
    case Family::Sunflower: return "sunflower";
    case Family::LoosePath: return "loose_path";
    case Family::LooseCycle: return "loose_cycle";
    case Family::GraphPower: return "graph_power";
    case Family::Squid: return "squid";
  }
  return "?";
}

namespace {

std::string num(int i) { return std::to_string(i); }

GeneratedHypergraph make_hyperflower(const FamilySpec& spec) {
  if (spec.l < 1 || spec.r < 1 || spec.t < 1)
    fail(ErrorCode::InvalidParams, "hyperflower needs l >= 1, r >= 1, t >= 1");
  std::vector<int> cores = spec.core_sizes;
  if (cores.empty()) cores.assign(spec.r, 2);
  if (static_cast<int>(cores.size()) == 1 && spec.r > 1)
    cores.assign(spec.r, cores[0]);
  if (static_cast<int>(cores.size()) != spec.r)
    fail(ErrorCode::InvalidParams, "hyperflower needs one core size per core");
  for (int c : cores)
    if (c < 1) fail(ErrorCode::InvalidParams, "hyperflower core sizes >= 1");

  std::vector<std::string> ids;
  Annotations ann;
  std::vector<std::vector<std::string>> core_ids(spec.r);
  for (int j = 0; j < spec.r; ++j)
    for (int i = 0; i < cores[j]; ++i) {
      std::string id = "w" + num(j + 1) + "_" + num(i + 1);
      core_ids[j].push_back(id);
      ids.push_back(id);
      ann["W"].push_back(id);
    }
  std::vector<std::vector<std::string>> u_ids(spec.l);
  for (int i = 0; i < spec.l; ++i)
    for (int s = 0; s < spec.t; ++s) {
      std::string id = "u" + num(i + 1) + "_" + num(s + 1);
      u_ids[i].push_back(id);
      ids.push_back(id);
    }
  for (int j = 0; j < spec.r; ++j) ann["core:" + num(j + 1)] = core_ids[j];
  for (int i = 0; i < spec.l; ++i) ann["U:" + num(i + 1)] = u_ids[i];

  std::vector<std::vector<std::string>> edges;
  for (int j = 0; j < spec.r; ++j)
    for (int i = 0; i < spec.l; ++i) {
      std::vector<std::string> e = core_ids[j];
      e.insert(e.end(), u_ids[i].begin(), u_ids[i].end());
      edges.push_back(std::move(e));
    }
  return {Hypergraph(std::move(ids), edges), std::move(ann)};
}

GeneratedHypergraph make_sunflower(const FamilySpec& spec) {
  if (spec.k < 2 || spec.s < 1)
    fail(ErrorCode::InvalidParams, "sunflower needs k >= 2, s >= 1");
  std::vector<std::string> ids{"v0"};
  Annotations ann;
  ann["heart"] = {"v0"};
  std::vector<std::vector<std::string>> edges;
  for (int i = 0; i < spec.s; ++i) {
    std::vector<std::string> petal;
    for (int j = 0; j < spec.k - 1; ++j) {
      std::string id = "p" + num(i + 1) + "_" + num(j + 1);
      petal.push_back(id);
      ids.push_back(id);
    }
    ann["petal:" + num(i + 1)] = petal;
    std::vector<std::string> e{"v0"};
    e.insert(e.end(), petal.begin(), petal.end());
    edges.push_back(std::move(e));
  }
  return {Hypergraph(std::move(ids), edges), std::move(ann)};
}

GeneratedHypergraph make_loose_path(const FamilySpec& spec) {
  if (spec.k < 2 || spec.d < 1)
    fail(ErrorCode::InvalidParams, "loose path needs k >= 2, d >= 1");
  const int k = spec.k, d = spec.d;
  std::vector<std::string> ids;
  std::vector<std::vector<std::string>> edges(d);
  Annotations ann;
  std::string prev_shared;
  for (int i = 0; i < d; ++i) {
    std::vector<std::string>& e = edges[i];
    if (i > 0) e.push_back(prev_shared);
    int fresh = k - static_cast<int>(e.size()) - (i + 1 < d ? 1 : 0);
    for (int j = 0; j < fresh; ++j) {
      std::string id = "x" + num(i + 1) + "_" + num(j + 1);
      ids.push_back(id);
      e.push_back(id);
    }
    if (i + 1 < d) {
      prev_shared = "s" + num(i + 1);
      ids.push_back(prev_shared);
      e.push_back(prev_shared);
      ann["shared:" + num(i + 1)] = {prev_shared};
    }
  }
  ann["endpoints"] = {edges.front().front(), edges.back().back()};
  return {Hypergraph(std::move(ids), edges), std::move(ann)};
}

GeneratedHypergraph make_loose_cycle(const FamilySpec& spec) {
  if (spec.k < 3 || spec.d < 2)
    fail(ErrorCode::InvalidParams, "loose cycle needs k >= 3, d >= 2");
  const int k = spec.k, d = spec.d;
  std::vector<std::string> ids{"p", "q"};
  Annotations ann;
  ann["closure"] = {"p", "q"};
  std::vector<std::vector<std::string>> edges(d);
  auto fresh = [&ids](int edge, int count, std::vector<std::string>& e) {
    for (int j = 0; j < count; ++j) {
      std::string id = "x" + num(edge + 1) + "_" + num(j + 1);
      ids.push_back(id);
      e.push_back(id);
    }
  };
  if (d == 2) {
    // the closing pair and the (1,2) adjacency coincide: two edges
    // sharing exactly the two closure vertices
    edges[0] = {"p", "q"};
    fresh(0, k - 2, edges[0]);
    edges[1] = {"p", "q"};
    fresh(1, k - 2, edges[1]);
  } else {
    std::string prev_shared;
    for (int i = 0; i < d; ++i) {
      auto& e = edges[i];
      if (i == 0) {
        e = {"p", "q"};
        fresh(i, k - 3, e);
      } else if (i == d - 1) {
        e = {prev_shared, "p", "q"};
        fresh(i, k - 3, e);
        continue;
      } else {
        e = {prev_shared};
        fresh(i, k - 2, e);
      }
      prev_shared = "s" + num(i + 1);
      ids.push_back(prev_shared);
      e.push_back(prev_shared);
      ann["shared:" + num(i + 1)] = {prev_shared};
    }
  }
  return {Hypergraph(std::move(ids), edges), std::move(ann)};
}

GeneratedHypergraph make_graph_power(const FamilySpec& spec) {
  if (!spec.base)
    fail(ErrorCode::InvalidParams, "graph_power needs a base graph");
  if (spec.k < 3) fail(ErrorCode::InvalidParams, "graph_power needs k >= 3");
  const Hypergraph& g = *spec.base;
  if (g.n_edges() == 0)
    fail(ErrorCode::InvalidParams, "graph_power base has no edges");
  for (const auto& e : g.edges())
    if (e.size() != 2)
      fail(ErrorCode::InvalidParams, "graph_power base must be 2-uniform");
  std::vector<std::string> ids = g.vertex_ids();
  Annotations ann;
  std::vector<std::vector<std::string>> edges;
  for (std::size_t e = 0; e < g.n_edges(); ++e) {
    std::vector<std::string> members;
    for (int v : g.edge(static_cast<int>(e)))
      members.push_back(g.vertex_id(v));
    ann["base:" + num(static_cast<int>(e) + 1)] = members;
    std::vector<std::string> added;
    for (int i = 0; i < spec.k - 2; ++i) {
      std::string id = "y" + num(static_cast<int>(e) + 1) + "_" + num(i + 1);
      ids.push_back(id);
      members.push_back(id);
      added.push_back(id);
    }
    ann["We:" + num(static_cast<int>(e) + 1)] = added;
    edges.push_back(std::move(members));
  }
  return {Hypergraph(std::move(ids), edges), std::move(ann)};
}

GeneratedHypergraph make_squid(const FamilySpec& spec) {
  if (spec.k < 3) fail(ErrorCode::InvalidParams, "squid needs k >= 3");
  const int k = spec.k;
  std::vector<std::string> ids{"v0"};
  Annotations ann;
  ann["v0"] = {"v0"};
  std::vector<std::vector<std::string>> edges;
  std::vector<std::string> central{"v0"};
  for (int i = 0; i < k - 1; ++i) {
    std::vector<std::string> u;
    for (int j = 0; j < k; ++j) {
      std::string id = "u" + num(i + 1) + "_" + num(j + 1);
      ids.push_back(id);
      u.push_back(id);
    }
    ann["U:" + num(i + 1)] = u;
    central.push_back(u[0]);
    edges.push_back(std::move(u));
  }
  ann["central"] = central;
  edges.push_back(std::move(central));
  return {Hypergraph(std::move(ids), edges), std::move(ann)};
}

}  // namespace

GeneratedHypergraph generate(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::Hyperflower: return make_hyperflower(spec);
    case Family::Sunflower: return make_sunflower(spec);
    case Family::LoosePath: return make_loose_path(spec);
    case Family::LooseCycle: return make_loose_cycle(spec);
    case Family::GraphPower: return make_graph_power(spec);
    case Family::Squid: return make_squid(spec);
  }
  fail(ErrorCode::InvalidParams, "unknown family");
}

// ---------------------------------------------------------------------
// Recognizers
// ---------------------------------------------------------------------

namespace {

Recognition reject(const std::string& clause) {
  Recognition r;
  r.ok = false;
  r.violated_clause = clause;
  return r;
}

std::vector<std::string> id_list(const Hypergraph& h,
                                 const std::vector<int>& vs) {
  std::vector<std::string> out;
  out.reserve(vs.size());
  for (int v : vs) out.push_back(h.vertex_id(v));
  return out;
}

bool covered(const Hypergraph& h) {
  for (std::size_t v = 0; v < h.n_vertices(); ++v)
    if (h.star_size(static_cast<int>(v)) == 0) return false;
  return true;
}

std::optional<std::size_t> uniformity(const Hypergraph& h) {
  if (h.n_edges() == 0) return std::nullopt;
  std::size_t k = h.edge(0).size();
  for (const auto& e : h.edges())
    if (e.size() != k) return std::nullopt;
  return k;
}

std::vector<int> edge_intersection(const Hypergraph& h, int e, int f) {
  std::vector<int> out;
  std::set_intersection(h.edge(e).begin(), h.edge(e).end(),
                        h.edge(f).begin(), h.edge(f).end(),
                        std::back_inserter(out));
  return out;
}

Recognition recognize_sunflower(const Hypergraph& h) {
  auto k = uniformity(h);
  if (!k) return reject("a sunflower is k-uniform");
  if (!covered(h)) return reject("every vertex must lie in a leaf");
  const int m = static_cast<int>(h.n_edges());
  int heart;
  if (m == 1) {
    heart = h.edge(0)[0];
  } else {
    std::vector<int> common = h.edge(0);
    for (int e = 1; e < m; ++e) {
      auto inter = edge_intersection(h, 0, e);
      std::vector<int> merged;
      std::set_intersection(common.begin(), common.end(), inter.begin(),
                            inter.end(), std::back_inserter(merged));
      common = std::move(merged);
    }
    if (common.size() != 1)
      return reject("the leaves must intersect in exactly one heart vertex");
    heart = common[0];
    for (int e = 0; e < m; ++e)
      for (int f = e + 1; f < m; ++f)
        if (edge_intersection(h, e, f).size() != 1)
          return reject("two leaves overlap outside the heart");
  }
  Recognition r;
  r.ok = true;
  r.annotations["heart"] = {h.vertex_id(heart)};
  for (int e = 0; e < m; ++e) {
    std::vector<int> petal;
    for (int v : h.edge(e))
      if (v != heart) petal.push_back(v);
    r.annotations["petal:" + num(e + 1)] = id_list(h, petal);
  }
  return r;
}

Recognition recognize_hyperflower(const Hypergraph& h) {
  if (!covered(h))
    return reject("every vertex must belong to the core or a petal group");
  if (!h.duplicate_edges().empty())
    return reject("hyperflower edges are the distinct products core x group");
  // Twin classes; every hyperedge must split into exactly two of them
  // (one core e_j, one peripheral group U_i).
  std::map<std::vector<int>, int> star_to_class;
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of(h.n_vertices(), -1);
  for (std::size_t v = 0; v < h.n_vertices(); ++v) {
    auto star = h.star(static_cast<int>(v));
    auto [it, fresh] =
        star_to_class.emplace(star, static_cast<int>(classes.size()));
    if (fresh) classes.push_back({});
    classes[it->second].push_back(static_cast<int>(v));
    class_of[v] = it->second;
  }
  const int nc = static_cast<int>(classes.size());
  if (nc == 1 && h.n_edges() == 1) {
    // single-edge degenerate flower: first vertex as the core
    Recognition r;
    r.ok = true;
    const auto& e = h.edge(0);
    r.annotations["W"] = {h.vertex_id(e[0])};
    r.annotations["core:1"] = {h.vertex_id(e[0])};
    r.annotations["U:1"] =
        id_list(h, std::vector<int>(e.begin() + 1, e.end()));
    return r;
  }
  std::vector<std::pair<int, int>> edge_pair(h.n_edges(), {-1, -1});
  for (std::size_t e = 0; e < h.n_edges(); ++e) {
    std::set<int> present;
    for (int v : h.edge(static_cast<int>(e))) present.insert(class_of[v]);
    if (present.size() != 2)
      return reject("each hyperedge must be a core joined with one petal group");
    auto it = present.begin();
    edge_pair[e] = {*it, *std::next(it)};
  }
  // 2-color the class graph; it must be connected and bipartite.
  std::vector<int> color(nc, -1);
  std::vector<std::vector<int>> adj(nc);
  for (auto [a, b] : edge_pair) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> stack{0};
  color[0] = 0;
  while (!stack.empty()) {
    int c = stack.back();
    stack.pop_back();
    for (int d : adj[c]) {
      if (color[d] < 0) {
        color[d] = 1 - color[c];
        stack.push_back(d);
      } else if (color[d] == color[c]) {
        return reject("core and petal groups must alternate across edges");
      }
    }
  }
  for (int c = 0; c < nc; ++c)
    if (color[c] < 0)
      return reject("the flower must be a single connected structure");
  std::vector<int> side0, side1;
  for (int c = 0; c < nc; ++c) (color[c] == 0 ? side0 : side1).push_back(c);
  // completeness: every (core, group) pair appears exactly once
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : edge_pair) {
    auto key = color[a] == 0 ? std::make_pair(a, b) : std::make_pair(b, a);
    if (!seen.insert(key).second)
      return reject("a core/petal-group pair repeats");
  }
  if (seen.size() != side0.size() * side1.size())
    return reject("every core must combine with every petal group");
  auto all_same_size = [&](const std::vector<int>& side) {
    for (int c : side)
      if (classes[c].size() != classes[side[0]].size()) return false;
    return true;
  };
  bool s0_uniform = all_same_size(side0), s1_uniform = all_same_size(side1);
  if (!s0_uniform && !s1_uniform)
    return reject("petal groups must all have the same number of twins");
  // orient: U = the side with uniform class sizes; when both qualify the
  // side not containing the first vertex is U (generators list W first)
  std::vector<int>*cores, *groups;
  if (s0_uniform && s1_uniform) {
    bool first_in_0 = color[class_of[0]] == 0;
    cores = first_in_0 ? &side0 : &side1;
    groups = first_in_0 ? &side1 : &side0;
  } else if (s1_uniform) {
    cores = &side0;
    groups = &side1;
  } else {
    cores = &side1;
    groups = &side0;
  }
  auto by_first = [&](std::vector<int>& cs) {
    std::sort(cs.begin(), cs.end(),
              [&](int a, int b) { return classes[a][0] < classes[b][0]; });
  };
  by_first(*cores);
  by_first(*groups);
  Recognition r;
  r.ok = true;
  std::vector<int> w;
  for (std::size_t j = 0; j < cores->size(); ++j) {
    const auto& cls = classes[(*cores)[j]];
    w.insert(w.end(), cls.begin(), cls.end());
    r.annotations["core:" + num(static_cast<int>(j) + 1)] = id_list(h, cls);
  }
  std::sort(w.begin(), w.end());
  r.annotations["W"] = id_list(h, w);
  for (std::size_t i = 0; i < groups->size(); ++i)
    r.annotations["U:" + num(static_cast<int>(i) + 1)] =
        id_list(h, classes[(*groups)[i]]);
  return r;
}

// Checks the loose-path clauses against a specific edge ordering;
// returns the violated clause or accepts.
Recognition check_path_sequence(const Hypergraph& h,
                                const std::vector<int>& order) {
  const int d = static_cast<int>(order.size());
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      std::size_t inter =
          edge_intersection(h, order[i], order[j]).size();
      if (j - i == 1 && inter != 1)
        return reject("consecutive edges must share exactly one vertex");
      if (j - i > 1 && inter != 0)
        return reject("non-consecutive edges must be disjoint");
    }
  Recognition r;
  r.ok = true;
  for (int i = 0; i + 1 < d; ++i)
    r.annotations["shared:" + num(i + 1)] =
        id_list(h, edge_intersection(h, order[i], order[i + 1]));
  return r;
}

// Reconstructs a chain ordering from the shares-one-vertex adjacency, or
// returns empty when no chain exists.
std::vector<int> chain_order(const Hypergraph& h) {
  const int d = static_cast<int>(h.n_edges());
  std::vector<std::vector<int>> nbr(d);
  for (int e = 0; e < d; ++e)
    for (int f = e + 1; f < d; ++f)
      if (edge_intersection(h, e, f).size() == 1) {
        nbr[e].push_back(f);
        nbr[f].push_back(e);
      }
  int start = -1;
  for (int e = 0; e < d; ++e)
    if (nbr[e].size() == 1 && start < 0) start = e;
  if (start < 0) return {};
  std::vector<int> order{start};
  std::vector<char> used(d, 0);
  used[start] = 1;
  while (static_cast<int>(order.size()) < d) {
    int next = -1;
    for (int f : nbr[order.back()])
      if (!used[f]) next = f;
    if (next < 0) return {};
    used[next] = 1;
    order.push_back(next);
  }
  return order;
}

Recognition recognize_loose_path(const Hypergraph& h) {
  auto k = uniformity(h);
  if (!k) return reject("a loose path is k-uniform");
  if (!covered(h)) return reject("every vertex must lie on the path");
  const int d = static_cast<int>(h.n_edges());
  if (d == 1) {
    Recognition r;
    r.ok = true;
    return r;
  }
  std::vector<int> input_order(d);
  for (int i = 0; i < d; ++i) input_order[i] = i;
  Recognition as_listed = check_path_sequence(h, input_order);
  if (as_listed.ok) return as_listed;
  std::vector<int> order = chain_order(h);
  if (!order.empty()) {
    Recognition reordered = check_path_sequence(h, order);
    if (reordered.ok) return reordered;
  }
  return as_listed;
}

// Loose-cycle clauses against a specific ordering: the loose-path
// conditions with the single exception that the first and last edges
// share exactly two vertices.
Recognition check_cycle_sequence(const Hypergraph& h,
                                 const std::vector<int>& order) {
  const int d = static_cast<int>(order.size());
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      std::size_t inter = edge_intersection(h, order[i], order[j]).size();
      if (i == 0 && j == d - 1) {
        if (inter != 2)
          return reject("the first and last edges must share exactly two vertices");
        continue;
      }
      if (j - i == 1 && inter != 1)
        return reject("consecutive edges must share exactly one vertex");
      if (j - i > 1 && inter != 0)
        return reject("non-consecutive edges must be disjoint");
    }
  Recognition r;
  r.ok = true;
  r.annotations["closure"] =
      id_list(h, edge_intersection(h, order[0], order[d - 1]));
  return r;
}

Recognition recognize_loose_cycle(const Hypergraph& h) {
  auto k = uniformity(h);
  if (!k || *k < 3) return reject("a loose cycle is k-uniform with k >= 3");
  if (!covered(h)) return reject("every vertex must lie on the cycle");
  const int d = static_cast<int>(h.n_edges());
  if (d < 2) return reject("a loose cycle has at least two edges");
  std::vector<int> input_order(d);
  for (int i = 0; i < d; ++i) input_order[i] = i;
  Recognition as_listed = check_cycle_sequence(h, input_order);
  if (as_listed.ok) return as_listed;
  if (d > 2) {
    // reconstruct: the closing pair are the ends of the single-shared chain
    std::vector<int> order = chain_order(h);
    if (!order.empty()) {
      Recognition reordered = check_cycle_sequence(h, order);
      if (reordered.ok) return reordered;
    }
  }
  return as_listed;
}

Recognition recognize_graph_power(const Hypergraph& h) {
  auto ku = uniformity(h);
  if (!ku || *ku < 3) return reject("a graph power is k-uniform with k >= 3");
  if (!covered(h)) return reject("every vertex must lie in a power edge");
  const int k = static_cast<int>(*ku);
  Recognition r;
  for (std::size_t e = 0; e < h.n_edges(); ++e) {
    std::vector<int> cored, other;
    for (int v : h.edge(static_cast<int>(e)))
      (h.star_size(v) == 1 ? cored : other).push_back(v);
    if (static_cast<int>(cored.size()) < k - 2)
      return reject("each power edge carries k-2 private added vertices");
    if (other.size() > 2)
      return reject("each power edge keeps at most two base endpoints");
    // base endpoints: the shared vertices, topped up from the cored ones
    std::vector<int> base = other;
    std::size_t take = 2 - base.size();
    base.insert(base.end(), cored.begin(), cored.begin() + take);
    std::vector<int> added(cored.begin() + take, cored.end());
    r.annotations["base:" + num(static_cast<int>(e) + 1)] = id_list(h, base);
    r.annotations["We:" + num(static_cast<int>(e) + 1)] = id_list(h, added);
  }
  r.ok = true;
  return r;
}

Recognition recognize_squid(const Hypergraph& h) {
  auto ku = uniformity(h);
  if (!ku || *ku < 3) return reject("a squid is k-uniform with k >= 3");
  if (!covered(h)) return reject("every vertex must lie in the squid");
  const int k = static_cast<int>(*ku);
  if (static_cast<int>(h.n_edges()) != k)
    return reject("a k-uniform squid has k-1 peripheral edges plus the central one");
  if (h.n_vertices() != static_cast<std::size_t>(1 + k * (k - 1)))
    return reject("a k-uniform squid has 1 + k(k-1) vertices");
  // the central edge meets every other edge; peripherals are disjoint
  int central = -1;
  for (int e = 0; e < k; ++e) {
    bool meets_all = true;
    for (int f = 0; f < k; ++f)
      if (f != e && edge_intersection(h, e, f).empty()) meets_all = false;
    if (meets_all) {
      if (central >= 0) return reject("only the central edge meets all others");
      central = e;
    }
  }
  if (central < 0) return reject("one central edge must meet every peripheral edge");
  std::vector<int> peripherals;
  for (int e = 0; e < k; ++e)
    if (e != central) peripherals.push_back(e);
  for (std::size_t i = 0; i < peripherals.size(); ++i)
    for (std::size_t j = i + 1; j < peripherals.size(); ++j)
      if (!edge_intersection(h, peripherals[i], peripherals[j]).empty())
        return reject("peripheral edges must be pairwise disjoint");
  std::vector<int> e0;
  for (int e : peripherals) {
    auto inter = edge_intersection(h, central, e);
    if (inter.size() != 1)
      return reject("the central edge meets each peripheral edge in one vertex");
    e0.push_back(inter[0]);
  }
  std::vector<int> v0;
  for (int v : h.edge(central))
    if (h.star_size(v) == 1) v0.push_back(v);
  if (v0.size() != 1)
    return reject("the central edge has exactly one vertex of its own");
  Recognition r;
  r.ok = true;
  r.annotations["v0"] = {h.vertex_id(v0[0])};
  r.annotations["central"] = id_list(h, h.edge(central));
  r.annotations["e0"] = id_list(h, e0);
  for (std::size_t i = 0; i < peripherals.size(); ++i)
    r.annotations["U:" + num(static_cast<int>(i) + 1)] =
        id_list(h, h.edge(peripherals[i]));
  return r;
}

}  // namespace

Recognition recognize(const Hypergraph& h, Family family) {
  switch (family) {
    case Family::Hyperflower: return recognize_hyperflower(h);
    case Family::Sunflower: return recognize_sunflower(h);
    case Family::LoosePath: return recognize_loose_path(h);
    case Family::LooseCycle: return recognize_loose_cycle(h);
    case Family::GraphPower: return recognize_graph_power(h);
    case Family::Squid: return recognize_squid(h);
  }
  fail(ErrorCode::InvalidParams, "unknown family");
}

}  // namespace hyperspec
