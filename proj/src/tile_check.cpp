#include "ccg/tile_check.hpp"

#include <set>

#include "ccg/connectivity.hpp"
#include "ccg/disjoint_paths.hpp"
#include "ccg/planarity.hpp"

namespace ccg {

FrameGadget frame_gadget(const Tile& t, int bundle_multiplicity) {
  FrameGadget fg;
  fg.graph = t.graph;
  fg.tile_edge_count = t.graph.num_edges();
  int next = 0;
  for (int v : t.graph.vertices()) next = std::max(next, v + 1);

  std::vector<int> frame = t.left;
  for (auto it = t.right.rbegin(); it != t.right.rend(); ++it)
    frame.push_back(*it);

  auto link = [&](int u, int v) {
    if (bundle_multiplicity <= 1) {
      fg.graph.add_edge(u, v);
    } else {
      for (int b = 0; b < bundle_multiplicity; ++b) {
        int mid = next++;
        fg.graph.add_edge(u, mid);
        fg.graph.add_edge(mid, v);
      }
    }
  };

  if (frame.size() >= 2) {
    for (std::size_t i = 0; i + 1 < frame.size(); ++i)
      link(frame[i], frame[i + 1]);
    if (frame.size() >= 3) link(frame.back(), frame.front());
  }
  fg.apex = next++;
  fg.graph.add_vertex(fg.apex);
  for (int v : frame) fg.graph.add_edge(fg.apex, v);
  return fg;
}

bool is_planar_tile(const Tile& t) {
  validate_tile(t);
  return is_planar_fast(frame_gadget(t).graph);
}

PerfectReport is_perfect_tile(const Tile& t) {
  PerfectReport rep;
  validate_tile(t);
  if (t.left.size() != t.right.size()) {
    rep.violation = "p.i: wall sizes differ";
    return rep;
  }
  auto connected_without = [&](const std::vector<int>& wall) {
    MultiGraph h = t.graph.remove_vertices(wall);
    return h.num_vertices() == 0 || h.connected();
  };
  if (!connected_without(t.left)) {
    rep.violation = "p.ii: G-left disconnected";
    return rep;
  }
  if (!connected_without(t.right)) {
    rep.violation = "p.ii: G-right disconnected";
    return rep;
  }
  // p.iii: escape path to the opposite wall, internally avoiding own wall
  auto escapes = [&](int v, const std::vector<int>& own,
                     const std::vector<int>& opposite) {
    std::vector<int> others;
    for (int w : own)
      if (w != v) others.push_back(w);
    MultiGraph h = t.graph.remove_vertices(others);
    std::set<int> target(opposite.begin(), opposite.end());
    std::set<int> seen{v};
    std::vector<int> stack{v};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      if (target.count(x)) return true;
      for (int y : h.neighbors(x))
        if (seen.insert(y).second) stack.push_back(y);
    }
    return false;
  };
  for (int v : t.left)
    if (!escapes(v, t.left, t.right)) {
      rep.violation = "p.iii: no escape from left wall vertex " + std::to_string(v);
      return rep;
    }
  for (int v : t.right)
    if (!escapes(v, t.right, t.left)) {
      rep.violation = "p.iii: no escape from right wall vertex " + std::to_string(v);
      return rep;
    }
  // p.iv: disjoint path pairs for every i < j
  for (std::size_t i = 0; i < t.left.size(); ++i)
    for (std::size_t j = i + 1; j < t.left.size(); ++j) {
      auto r = two_disjoint_paths(t.graph, t.left[i], t.right[i], t.left[j],
                                  t.right[j]);
      if (r.verdict == SearchVerdict::NotFound) {
        rep.violation = "p.iv: no disjoint pair for indices " +
                        std::to_string(i) + "," + std::to_string(j);
        return rep;
      }
      if (r.verdict == SearchVerdict::Unknown) {
        rep.exact = false;
        rep.violation = "p.iv: search unsettled for indices " +
                        std::to_string(i) + "," + std::to_string(j);
        return rep;
      }
    }
  rep.ok = true;
  return rep;
}

}  // namespace ccg
