#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "ccg/rational.hpp"

namespace ccg {

using Edge = std::pair<int, int>;  // endpoints, stored with first <= second

/// Loopless multigraph over opaque integer vertex ids. Parallel edges are
/// kept with multiplicity; edges are addressed by index into edges().
/// Values are treated as immutable once built; operations are pure.
class MultiGraph {
 public:
  MultiGraph() = default;

  void add_vertex(int v);
  bool has_vertex(int v) const { return vset_.count(v) > 0; }
  /// Adds edge {u,v}; both endpoints are added if missing. Loops rejected.
  void add_edge(int u, int v);
  void set_label(int v, int tag) { labels_[v] = tag; }
  std::optional<int> label(int v) const;

  const std::vector<int>& vertices() const { return verts_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::map<int, int>& labels() const { return labels_; }

  std::size_t num_vertices() const { return verts_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  int degree(int v) const;
  std::vector<int> neighbors(int v) const;          // deduplicated
  std::vector<int> incident_edges(int v) const;      // edge indices
  int edge_multiplicity(int u, int v) const;
  bool has_edge(int u, int v) const { return edge_multiplicity(u, v) > 0; }

  MultiGraph remove_edge(std::size_t edge_index) const;
  MultiGraph remove_edges(const std::vector<std::size_t>& idxs) const;
  MultiGraph remove_vertex(int v) const;
  MultiGraph remove_vertices(const std::vector<int>& vs) const;
  /// Contracts edge {u,v} into the vertex `keep` (one of u,v). Loops arising
  /// from the contraction are deleted, parallel edges kept.
  MultiGraph contract_edge(int u, int v, int keep) const;

  bool connected() const;
  int component_count() const;

  /// Simplification: one copy of every parallel class (labels preserved).
  MultiGraph simplified() const;

  bool operator==(const MultiGraph& o) const;

 private:
  std::vector<int> verts_;       // sorted
  std::set<int> vset_;
  std::vector<Edge> edges_;
  std::map<int, int> labels_;
};

// -- spec-level operations ---------------------------------------------------

Rational average_degree(const MultiGraph& g);
bool is_simple(const MultiGraph& g);
/// Removes all degree-2 vertices by contraction. A degree-2 vertex whose two
/// edges are parallel collapses to a single edge (no loop is ever created).
/// Ids of surviving vertices are preserved.
MultiGraph suppress_degree2(const MultiGraph& g);

MultiGraph complete_graph(int n);
MultiGraph complete_bipartite(int a, int b);
MultiGraph cycle_graph(int n);
MultiGraph path_graph(int n);

}  // namespace ccg
