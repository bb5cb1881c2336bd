#include "ccg/tile.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace ccg {

void validate_tile(const Tile& t) {
  std::set<int> seen;
  for (int v : t.left) {
    if (!t.graph.has_vertex(v)) throw std::invalid_argument("wall vertex missing");
    if (!seen.insert(v).second) throw std::invalid_argument("duplicate wall vertex");
  }
  for (int v : t.right) {
    if (!t.graph.has_vertex(v)) throw std::invalid_argument("wall vertex missing");
    if (!seen.insert(v).second)
      throw std::invalid_argument("vertex on both walls or duplicated");
  }
  for (int v : t.left)
    if (t.graph.degree(v) == 0)
      throw std::invalid_argument("degree-0 wall vertex");
  for (int v : t.right)
    if (t.graph.degree(v) == 0)
      throw std::invalid_argument("degree-0 wall vertex");
}

bool compatible(const Tile& a, const Tile& b) {
  return a.right.size() == b.left.size();
}

bool cyclically_compatible(const Tile& t) {
  return t.left.size() == t.right.size();
}

namespace {

// suppress interior degree-2 vertices, never touching wall vertices
MultiGraph suppress_interior(const MultiGraph& g, const std::set<int>& walls) {
  MultiGraph h = g;
  for (;;) {
    int target = -1;
    for (int v : h.vertices()) {
      if (walls.count(v)) continue;
      if (h.degree(v) == 2) { target = v; break; }
    }
    if (target < 0) break;
    auto idx = h.incident_edges(target);
    const auto& e0 = h.edges()[idx[0]];
    const auto& e1 = h.edges()[idx[1]];
    int n0 = e0.first == target ? e0.second : e0.first;
    int n1 = e1.first == target ? e1.second : e1.first;
    if (n0 == n1) {
      h = h.remove_edge(idx[1]);
    } else {
      int into = std::min(n0, n1);
      h = h.contract_edge(target, into, into);
    }
  }
  return h;
}

}  // namespace

Tile join(const Tile& a, const Tile& b) {
  if (!compatible(a, b)) throw std::invalid_argument("incompatible tiles");
  int base = 0;
  for (int v : a.graph.vertices()) base = std::max(base, v + 1);
  // remap b: left wall onto a's right wall, everything else to fresh ids
  std::map<int, int> remap;
  for (std::size_t i = 0; i < b.left.size(); ++i) remap[b.left[i]] = a.right[i];
  int next = base;
  for (int v : b.graph.vertices())
    if (!remap.count(v)) remap[v] = next++;

  MultiGraph g = a.graph;
  for (int v : b.graph.vertices()) g.add_vertex(remap[v]);
  for (const auto& e : b.graph.edges()) g.add_edge(remap[e.first], remap[e.second]);
  for (const auto& [v, tag] : b.graph.labels()) g.set_label(remap[v], tag);

  Tile out;
  out.left = a.left;
  out.right.reserve(b.right.size());
  for (int v : b.right) out.right.push_back(remap[v]);
  std::set<int> walls(out.left.begin(), out.left.end());
  walls.insert(out.right.begin(), out.right.end());
  out.graph = suppress_interior(g, walls);
  validate_tile(out);
  return out;
}

MultiGraph cyclize(const Tile& t) {
  if (!cyclically_compatible(t))
    throw std::invalid_argument("cyclization needs equal wall sizes");
  for (std::size_t i = 0; i < t.left.size(); ++i)
    if (t.graph.has_edge(t.left[i], t.right[i]))
      throw std::invalid_argument("cyclization would create a loop");
  std::map<int, int> remap;
  for (std::size_t i = 0; i < t.left.size(); ++i) remap[t.right[i]] = t.left[i];
  MultiGraph g;
  for (int v : t.graph.vertices())
    if (!remap.count(v)) g.add_vertex(v);
  for (const auto& e : t.graph.edges()) {
    int u = remap.count(e.first) ? remap[e.first] : e.first;
    int v = remap.count(e.second) ? remap[e.second] : e.second;
    g.add_edge(u, v);
  }
  for (const auto& [v, tag] : t.graph.labels())
    g.set_label(remap.count(v) ? remap[v] : v, tag);
  return suppress_degree2(g);
}

Tile invert_right(const Tile& t) {
  Tile o = t;
  std::reverse(o.right.begin(), o.right.end());
  return o;
}

Tile invert_left(const Tile& t) {
  Tile o = t;
  std::reverse(o.left.begin(), o.left.end());
  return o;
}

Tile invert(const Tile& t) { return invert_left(invert_right(t)); }

Tile reverse(const Tile& t) {
  Tile o;
  o.graph = t.graph;
  o.left = t.right;
  o.right = t.left;
  return o;
}

bool compatible(const TileSequence& ts) {
  for (std::size_t i = 0; i + 1 < ts.size(); ++i)
    if (!compatible(ts[i], ts[i + 1])) return false;
  return true;
}

bool cyclically_compatible(const TileSequence& ts) {
  if (ts.empty()) return false;
  return compatible(ts) && compatible(ts.back(), ts.front());
}

Tile join(const TileSequence& ts) {
  if (ts.empty()) throw std::invalid_argument("empty sequence");
  Tile acc = ts[0];
  for (std::size_t i = 1; i < ts.size(); ++i) acc = join(acc, ts[i]);
  return acc;
}

MultiGraph cyclize(const TileSequence& ts) {
  if (!cyclically_compatible(ts))
    throw std::invalid_argument("sequence not cyclically compatible");
  return cyclize(join(ts));
}

TileSequence seq_twist(const TileSequence& ts) {
  if (ts.empty()) throw std::invalid_argument("empty sequence");
  TileSequence o = ts;
  o.back() = invert_right(o.back());
  return o;
}

TileSequence seq_flip(const TileSequence& ts, std::size_t i) {
  if (i + 1 >= ts.size()) throw std::out_of_range("flip index");
  TileSequence o = ts;
  o[i] = invert_right(o[i]);
  o[i + 1] = invert_left(o[i + 1]);
  return o;
}

TileSequence seq_cut(const TileSequence& ts, std::size_t i) {
  if (i >= ts.size()) throw std::out_of_range("cut index");
  if (!cyclically_compatible(ts))
    throw std::invalid_argument("cut needs cyclic compatibility");
  TileSequence o;
  for (std::size_t j = i + 1; j < ts.size(); ++j) o.push_back(ts[j]);
  for (std::size_t j = 0; j < i; ++j) o.push_back(ts[j]);
  return o;
}

TileSequence seq_shift(const TileSequence& ts, std::size_t i) {
  if (i >= ts.size()) throw std::out_of_range("shift index");
  if (!cyclically_compatible(ts))
    throw std::invalid_argument("shift needs cyclic compatibility");
  TileSequence o;
  for (std::size_t j = i; j < ts.size(); ++j) o.push_back(ts[j]);
  for (std::size_t j = 0; j < i; ++j) o.push_back(ts[j]);
  return o;
}

TileSequence seq_reverse(const TileSequence& ts) {
  TileSequence o;
  for (auto it = ts.rbegin(); it != ts.rend(); ++it) o.push_back(reverse(*it));
  return o;
}

}  // namespace ccg
