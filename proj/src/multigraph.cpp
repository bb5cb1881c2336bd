#include "ccg/multigraph.hpp"

#include <stdexcept>

namespace ccg {

void MultiGraph::add_vertex(int v) {
  if (vset_.insert(v).second)
    verts_.insert(std::lower_bound(verts_.begin(), verts_.end(), v), v);
}

void MultiGraph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("loop edge rejected");
  add_vertex(u);
  add_vertex(v);
  if (u > v) std::swap(u, v);
  edges_.push_back({u, v});
}

std::optional<int> MultiGraph::label(int v) const {
  auto it = labels_.find(v);
  if (it == labels_.end()) return std::nullopt;
  return it->second;
}

int MultiGraph::degree(int v) const {
  int d = 0;
  for (const auto& e : edges_)
    if (e.first == v || e.second == v) ++d;
  return d;
}

std::vector<int> MultiGraph::neighbors(int v) const {
  std::set<int> ns;
  for (const auto& e : edges_) {
    if (e.first == v) ns.insert(e.second);
    if (e.second == v) ns.insert(e.first);
  }
  return {ns.begin(), ns.end()};
}

std::vector<int> MultiGraph::incident_edges(int v) const {
  std::vector<int> idx;
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].first == v || edges_[i].second == v) idx.push_back((int)i);
  return idx;
}

int MultiGraph::edge_multiplicity(int u, int v) const {
  if (u > v) std::swap(u, v);
  int m = 0;
  for (const auto& e : edges_)
    if (e.first == u && e.second == v) ++m;
  return m;
}

MultiGraph MultiGraph::remove_edge(std::size_t edge_index) const {
  MultiGraph h = *this;
  h.edges_.erase(h.edges_.begin() + edge_index);
  return h;
}

MultiGraph MultiGraph::remove_edges(const std::vector<std::size_t>& idxs) const {
  std::set<std::size_t> kill(idxs.begin(), idxs.end());
  MultiGraph h;
  for (int v : verts_) h.add_vertex(v);
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (!kill.count(i)) h.add_edge(edges_[i].first, edges_[i].second);
  h.labels_ = labels_;
  return h;
}

MultiGraph MultiGraph::remove_vertex(int v) const {
  return remove_vertices({v});
}

MultiGraph MultiGraph::remove_vertices(const std::vector<int>& vs) const {
  std::set<int> kill(vs.begin(), vs.end());
  MultiGraph h;
  for (int v : verts_)
    if (!kill.count(v)) h.add_vertex(v);
  for (const auto& e : edges_)
    if (!kill.count(e.first) && !kill.count(e.second))
      h.add_edge(e.first, e.second);
  for (const auto& [v, t] : labels_)
    if (!kill.count(v)) h.labels_[v] = t;
  return h;
}

MultiGraph MultiGraph::contract_edge(int u, int v, int keep) const {
  if (keep != u && keep != v) throw std::invalid_argument("keep not an endpoint");
  int gone = keep == u ? v : u;
  MultiGraph h;
  for (int w : verts_)
    if (w != gone) h.add_vertex(w);
  for (const auto& e : edges_) {
    int a = e.first == gone ? keep : e.first;
    int b = e.second == gone ? keep : e.second;
    if (a == b) continue;  // copies of {u,v} become loops; delete them
    h.add_edge(a, b);
  }
  for (const auto& [w, t] : labels_)
    if (w != gone) h.labels_[w] = t;
  return h;
}

bool MultiGraph::connected() const {
  return component_count() <= 1;
}

int MultiGraph::component_count() const {
  if (verts_.empty()) return 0;
  std::map<int, int> comp;
  int c = 0;
  for (int v : verts_) {
    if (comp.count(v)) continue;
    std::vector<int> stack{v};
    comp[v] = c;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : neighbors(x)) {
        if (!comp.count(y)) {
          comp[y] = c;
          stack.push_back(y);
        }
      }
    }
    ++c;
  }
  return c;
}

MultiGraph MultiGraph::simplified() const {
  MultiGraph h;
  for (int v : verts_) h.add_vertex(v);
  std::set<Edge> seen;
  for (const auto& e : edges_)
    if (seen.insert(e).second) h.add_edge(e.first, e.second);
  h.labels_ = labels_;
  return h;
}

bool MultiGraph::operator==(const MultiGraph& o) const {
  auto se = edges_;
  auto oe = o.edges_;
  std::sort(se.begin(), se.end());
  std::sort(oe.begin(), oe.end());
  return verts_ == o.verts_ && se == oe;
}

Rational average_degree(const MultiGraph& g) {
  if (g.num_vertices() == 0)
    throw std::domain_error("average degree of empty graph");
  return Rational(2 * (long long)g.num_edges(), (long long)g.num_vertices());
}

bool is_simple(const MultiGraph& g) {
  std::set<Edge> seen;
  for (const auto& e : g.edges())
    if (!seen.insert(e).second) return false;
  return true;
}

MultiGraph suppress_degree2(const MultiGraph& g) {
  MultiGraph h = g;
  for (;;) {
    int target = -1;
    for (int v : h.vertices()) {
      if (h.degree(v) == 2) { target = v; break; }
    }
    if (target < 0) break;
    auto idx = h.incident_edges(target);
    const auto& e0 = h.edges()[idx[0]];
    const auto& e1 = h.edges()[idx[1]];
    int n0 = e0.first == target ? e0.second : e0.first;
    int n1 = e1.first == target ? e1.second : e1.first;
    if (n0 == n1) {
      // two parallel edges to one neighbor: collapse to a single edge
      h = h.remove_edge(idx[1]);
    } else {
      int into = std::min(n0, n1);
      h = h.contract_edge(target, into, into);
    }
  }
  return h;
}

MultiGraph complete_graph(int n) {
  MultiGraph g;
  for (int i = 0; i < n; ++i) g.add_vertex(i);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

MultiGraph complete_bipartite(int a, int b) {
  MultiGraph g;
  for (int i = 0; i < a + b; ++i) g.add_vertex(i);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  // vertices of degree min(a,b)... color by degree: deg==b side is 0..a-1
  // label black (=1) the vertices of degree equal to the smaller part size
  for (int v = 0; v < a + b; ++v) {
    int deg = v < a ? b : a;
    g.set_label(v, deg == std::min(a, b) ? 1 : 0);
  }
  return g;
}

MultiGraph cycle_graph(int n) {
  MultiGraph g;
  for (int i = 0; i < n; ++i) g.add_vertex(i);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

MultiGraph path_graph(int n) {
  MultiGraph g;
  for (int i = 0; i < n; ++i) g.add_vertex(i);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

}  // namespace ccg
