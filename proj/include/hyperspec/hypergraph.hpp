#ifndef HYPERSPEC_HYPERGRAPH_HPP
#define HYPERSPEC_HYPERGRAPH_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hyperspec {

// Infinite-distance sentinel for disconnected vertex pairs.
inline constexpr int kUnreachable = -1;

// Immutable hypergraph: vertex identifiers in input order (that order is
// the canonical matrix index order everywhere), hyperedges as sorted
// index sets of size >= 2, optional positive edge weights (default 1).
// Duplicate hyperedges are permitted; validation records them.
class Hypergraph {
 public:
  // Throws Error with code EmptyVertexSet / DuplicateVertex / LoopEdge /
  // UnknownVertex / NonPositiveWeight.
  Hypergraph(std::vector<std::string> vertex_ids,
             const std::vector<std::vector<std::string>>& edges_by_id,
             std::optional<std::vector<double>> edge_weights = std::nullopt);

  // Index-based construction; vertex ids default to "1".."n".
  static Hypergraph from_indices(
      std::size_t n_vertices, const std::vector<std::vector<int>>& edges,
      std::optional<std::vector<double>> edge_weights = std::nullopt);

  std::size_t n_vertices() const { return vertex_ids_.size(); }
  std::size_t n_edges() const { return edges_.size(); }
  const std::vector<std::string>& vertex_ids() const { return vertex_ids_; }
  const std::string& vertex_id(int v) const { return vertex_ids_[v]; }
  int vertex_index(const std::string& id) const;  // UnknownVertex on miss
  const std::vector<std::vector<int>>& edges() const { return edges_; }
  const std::vector<int>& edge(int e) const { return edges_[e]; }
  double edge_weight(int e) const { return edge_weights_[e]; }
  const std::vector<double>& edge_weights() const { return edge_weights_; }
  bool has_explicit_weights() const { return explicit_weights_; }

  // Pairs of indices of identical hyperedges found during validation.
  const std::vector<std::pair<int, int>>& duplicate_edges() const {
    return duplicate_edges_;
  }

  // Star E_v: indices of the edges containing v.
  const std::vector<int>& star(int v) const;
  std::size_t star_size(int v) const { return star(v).size(); }
  // d(v) = sum of w(e) over the star.
  double degree(int v) const;
  bool edge_contains(int e, int v) const;

 private:
  Hypergraph() = default;
  void finalize();

  std::vector<std::string> vertex_ids_;
  std::vector<std::vector<int>> edges_;
  std::vector<double> edge_weights_;
  bool explicit_weights_ = false;
  std::vector<std::vector<int>> stars_;
  std::vector<std::pair<int, int>> duplicate_edges_;
};

// rk = max |e|, cr = min |e|. Throws NoEdges on edgeless input.
std::pair<std::size_t, std::size_t> rank_corank(const Hypergraph& h);

// Connected components as vertex index sets, ordered by smallest member.
std::vector<std::vector<int>> components(const Hypergraph& h);

struct DistanceInfo {
  // dist[u][v] in alternating-path steps; kUnreachable across components.
  std::vector<std::vector<int>> dist;
  bool connected = false;
  int diameter = kUnreachable;             // finite only when connected
  std::vector<int> component_diameters;    // aligned with components(h)
};

// All-pairs shortest distances by BFS on the vertex-edge incidence
// structure (equivalent to the alternating-path definition for shortest
// lengths; paths of minimum length never repeat a vertex or an edge).
DistanceInfo distance_diameter(const Hypergraph& h);

// Edges meeting both S and its complement. Throws TrivialCut when S is
// empty or all of V.
std::vector<int> edge_boundary(const Hypergraph& h, const std::vector<int>& s);

// Remove every vertex in S from every edge containing it; edges shrinking
// below size 2 are dropped (loops are excluded globally). Throws
// DeletesAllVertices when S covers V.
Hypergraph weak_delete(const Hypergraph& h, const std::vector<int>& s);

struct VertexClassification {
  std::vector<int> cored;           // |E_v| <= 1 (isolated counts as cored)
  std::vector<int> intersectional;  // |E_v| > 1
  std::vector<int> pendant;         // unique cored vertex of its edge
  std::vector<std::vector<int>> twin_classes;  // identical stars, cover V
};

VertexClassification classify_vertices(const Hypergraph& h);

// 2-uniform graph G_0 on the same vertices: {u,v} is an edge iff some
// hyperedge contains both.
Hypergraph underlying_graph(const Hypergraph& h);

}  // namespace hyperspec

#endif
