#include "hyperspec/hypergraph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>

#include "hyperspec/error.hpp"

namespace hyperspec {

namespace {

std::vector<int> normalize_edge(std::vector<int> members, std::size_t n,
                                std::size_t edge_pos) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (int v : members)
    if (v < 0 || static_cast<std::size_t>(v) >= n)
      fail(ErrorCode::UnknownVertex,
           "edge " + std::to_string(edge_pos) + " references vertex index " +
               std::to_string(v) + " outside the vertex set");
  if (members.size() < 2)
    fail(ErrorCode::LoopEdge, "edge " + std::to_string(edge_pos) +
                                  " has fewer than 2 distinct vertices");
  return members;
}

}  // namespace

Hypergraph::Hypergraph(std::vector<std::string> vertex_ids,
                       const std::vector<std::vector<std::string>>& edges_by_id,
                       std::optional<std::vector<double>> edge_weights) {
  if (vertex_ids.empty())
    fail(ErrorCode::EmptyVertexSet, "vertex set must be nonempty");
  std::unordered_map<std::string, int> index;
  for (std::size_t i = 0; i < vertex_ids.size(); ++i) {
    if (!index.emplace(vertex_ids[i], static_cast<int>(i)).second)
      fail(ErrorCode::DuplicateVertex,
           "duplicate vertex identifier '" + vertex_ids[i] + "'");
  }
  vertex_ids_ = std::move(vertex_ids);
  edges_.reserve(edges_by_id.size());
  for (std::size_t e = 0; e < edges_by_id.size(); ++e) {
    std::vector<int> members;
    members.reserve(edges_by_id[e].size());
    for (const auto& id : edges_by_id[e]) {
      auto it = index.find(id);
      if (it == index.end())
        fail(ErrorCode::UnknownVertex, "edge " + std::to_string(e) +
                                           " references unknown vertex '" +
                                           id + "'");
      members.push_back(it->second);
    }
    edges_.push_back(normalize_edge(std::move(members), n_vertices(), e));
  }
  if (edge_weights) {
    if (edge_weights->size() != edges_.size())
      fail(ErrorCode::DimensionMismatch,
           "edge_weights length does not match edge count");
    edge_weights_ = std::move(*edge_weights);
    explicit_weights_ = true;
  } else {
    edge_weights_.assign(edges_.size(), 1.0);
  }
  finalize();
}

Hypergraph Hypergraph::from_indices(
    std::size_t n_vertices, const std::vector<std::vector<int>>& edges,
    std::optional<std::vector<double>> edge_weights) {
  if (n_vertices == 0)
    fail(ErrorCode::EmptyVertexSet, "vertex set must be nonempty");
  Hypergraph h;
  h.vertex_ids_.reserve(n_vertices);
  for (std::size_t i = 0; i < n_vertices; ++i)
    h.vertex_ids_.push_back(std::to_string(i + 1));
  for (std::size_t e = 0; e < edges.size(); ++e)
    h.edges_.push_back(normalize_edge(edges[e], n_vertices, e));
  if (edge_weights) {
    if (edge_weights->size() != h.edges_.size())
      fail(ErrorCode::DimensionMismatch,
           "edge_weights length does not match edge count");
    h.edge_weights_ = std::move(*edge_weights);
    h.explicit_weights_ = true;
  } else {
    h.edge_weights_.assign(h.edges_.size(), 1.0);
  }
  h.finalize();
  return h;
}

void Hypergraph::finalize() {
  for (std::size_t e = 0; e < edges_.size(); ++e)
    if (edge_weights_[e] <= 0.0)
      fail(ErrorCode::NonPositiveWeight,
           "edge " + std::to_string(e) + " has non-positive weight");
  stars_.assign(n_vertices(), {});
  for (std::size_t e = 0; e < edges_.size(); ++e)
    for (int v : edges_[e]) stars_[v].push_back(static_cast<int>(e));
  std::map<std::vector<int>, int> seen;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    auto [it, fresh] = seen.emplace(edges_[e], static_cast<int>(e));
    if (!fresh) duplicate_edges_.emplace_back(it->second, static_cast<int>(e));
  }
}

int Hypergraph::vertex_index(const std::string& id) const {
  for (std::size_t i = 0; i < vertex_ids_.size(); ++i)
    if (vertex_ids_[i] == id) return static_cast<int>(i);
  fail(ErrorCode::UnknownVertex, "unknown vertex '" + id + "'");
}

const std::vector<int>& Hypergraph::star(int v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= n_vertices())
    fail(ErrorCode::UnknownVertex,
         "vertex index " + std::to_string(v) + " out of range");
  return stars_[v];
}

double Hypergraph::degree(int v) const {
  double d = 0.0;
  for (int e : star(v)) d += edge_weights_[e];
  return d;
}

bool Hypergraph::edge_contains(int e, int v) const {
  const auto& m = edges_[e];
  return std::binary_search(m.begin(), m.end(), v);
}

std::pair<std::size_t, std::size_t> rank_corank(const Hypergraph& h) {
  if (h.n_edges() == 0)
    fail(ErrorCode::NoEdges, "rank/corank undefined on edgeless hypergraph");
  std::size_t rk = 0, cr = h.n_vertices() + 1;
  for (const auto& e : h.edges()) {
    rk = std::max(rk, e.size());
    cr = std::min(cr, e.size());
  }
  return {rk, cr};
}

std::vector<std::vector<int>> components(const Hypergraph& h) {
  const int n = static_cast<int>(h.n_vertices());
  std::vector<int> comp(n, -1);
  std::vector<char> edge_done(h.n_edges(), 0);
  int c = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::deque<int> q{s};
    comp[s] = c;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int e : h.star(v)) {
        if (edge_done[e]) continue;
        edge_done[e] = 1;
        for (int u : h.edge(e))
          if (comp[u] < 0) {
            comp[u] = c;
            q.push_back(u);
          }
      }
    }
    ++c;
  }
  std::vector<std::vector<int>> out(c);
  for (int v = 0; v < n; ++v) out[comp[v]].push_back(v);
  return out;
}

DistanceInfo distance_diameter(const Hypergraph& h) {
  const int n = static_cast<int>(h.n_vertices());
  DistanceInfo info;
  info.dist.assign(n, std::vector<int>(n, kUnreachable));
  // BFS over the bipartite vertex-edge incidence from each source; a
  // vertex reached after crossing k edges is at distance k.
  for (int s = 0; s < n; ++s) {
    auto& d = info.dist[s];
    d[s] = 0;
    std::vector<char> edge_seen(h.n_edges(), 0);
    std::deque<int> frontier{s};
    int depth = 0;
    while (!frontier.empty()) {
      ++depth;
      std::deque<int> next;
      for (int v : frontier)
        for (int e : h.star(v)) {
          if (edge_seen[e]) continue;
          edge_seen[e] = 1;
          for (int u : h.edge(e))
            if (d[u] == kUnreachable) {
              d[u] = depth;
              next.push_back(u);
            }
        }
      frontier = std::move(next);
    }
  }
  auto comps = components(h);
  info.connected = comps.size() == 1;
  info.component_diameters.reserve(comps.size());
  for (const auto& comp : comps) {
    int dm = 0;
    for (int u : comp)
      for (int v : comp) dm = std::max(dm, info.dist[u][v]);
    info.component_diameters.push_back(dm);
  }
  if (info.connected) info.diameter = info.component_diameters[0];
  return info;
}

std::vector<int> edge_boundary(const Hypergraph& h,
                               const std::vector<int>& s) {
  if (s.empty()) fail(ErrorCode::TrivialCut, "edge boundary of the empty set");
  std::vector<char> in_s(h.n_vertices(), 0);
  std::size_t count = 0;
  for (int v : s) {
    if (v < 0 || static_cast<std::size_t>(v) >= h.n_vertices())
      fail(ErrorCode::UnknownVertex, "cut set references unknown vertex");
    if (!in_s[v]) {
      in_s[v] = 1;
      ++count;
    }
  }
  if (count == h.n_vertices())
    fail(ErrorCode::TrivialCut, "edge boundary of the full vertex set");
  std::vector<int> boundary;
  for (std::size_t e = 0; e < h.n_edges(); ++e) {
    bool inside = false, outside = false;
    for (int v : h.edge(static_cast<int>(e)))
      (in_s[v] ? inside : outside) = true;
    if (inside && outside) boundary.push_back(static_cast<int>(e));
  }
  return boundary;
}

Hypergraph weak_delete(const Hypergraph& h, const std::vector<int>& s) {
  std::vector<char> del(h.n_vertices(), 0);
  for (int v : s) {
    if (v < 0 || static_cast<std::size_t>(v) >= h.n_vertices())
      fail(ErrorCode::UnknownVertex, "deletion set references unknown vertex");
    del[v] = 1;
  }
  std::vector<std::string> ids;
  std::vector<int> remap(h.n_vertices(), -1);
  for (std::size_t v = 0; v < h.n_vertices(); ++v)
    if (!del[v]) {
      remap[v] = static_cast<int>(ids.size());
      ids.push_back(h.vertex_id(static_cast<int>(v)));
    }
  if (ids.empty())
    fail(ErrorCode::DeletesAllVertices, "weak deletion would remove every vertex");
  std::vector<std::vector<std::string>> edges;
  std::vector<double> weights;
  for (std::size_t e = 0; e < h.n_edges(); ++e) {
    std::vector<std::string> members;
    for (int v : h.edge(static_cast<int>(e)))
      if (!del[v]) members.push_back(h.vertex_id(v));
    if (members.size() >= 2) {
      edges.push_back(std::move(members));
      weights.push_back(h.edge_weight(static_cast<int>(e)));
    }
  }
  return Hypergraph(std::move(ids), edges, std::move(weights));
}

VertexClassification classify_vertices(const Hypergraph& h) {
  VertexClassification out;
  const int n = static_cast<int>(h.n_vertices());
  for (int v = 0; v < n; ++v)
    (h.star_size(v) <= 1 ? out.cored : out.intersectional).push_back(v);
  // pendant: its edge has no other cored vertex
  for (int v : out.cored) {
    if (h.star_size(v) != 1) continue;
    int e = h.star(v)[0];
    int cored_in_e = 0;
    for (int u : h.edge(e))
      if (h.star_size(u) == 1) ++cored_in_e;
    if (cored_in_e == 1) out.pendant.push_back(v);
  }
  std::map<std::vector<int>, std::vector<int>> by_star;
  for (int v = 0; v < n; ++v) by_star[h.star(v)].push_back(v);
  std::vector<std::vector<int>> classes;
  classes.reserve(by_star.size());
  for (auto& [star, members] : by_star) classes.push_back(std::move(members));
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  out.twin_classes = std::move(classes);
  return out;
}

Hypergraph underlying_graph(const Hypergraph& h) {
  std::set<std::pair<int, int>> pairs;
  for (const auto& e : h.edges())
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = i + 1; j < e.size(); ++j)
        pairs.emplace(e[i], e[j]);
  std::vector<std::vector<std::string>> edges;
  edges.reserve(pairs.size());
  for (const auto& [u, v] : pairs)
    edges.push_back({h.vertex_id(u), h.vertex_id(v)});
  return Hypergraph(h.vertex_ids(), edges);
}

}  // namespace hyperspec
