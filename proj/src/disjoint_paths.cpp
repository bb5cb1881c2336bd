#include "ccg/disjoint_paths.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace ccg {

namespace {

struct Search {
  const MultiGraph& g;
  std::map<int, std::vector<int>> adj;
  int t1, s2, t2;
  long long budget;
  bool exhausted = false;
  std::set<int> on_path;
  std::vector<int> path;

  Search(const MultiGraph& g_, int t1_, int s2_, int t2_, long long b)
      : g(g_), t1(t1_), s2(s2_), t2(t2_), budget(b) {
    for (int v : g.vertices()) adj[v] = g.neighbors(v);
  }

  bool reachable_avoiding(int from, int to) const {
    std::set<int> seen{from};
    std::vector<int> stack{from};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      if (x == to) return true;
      for (int y : adj.at(x)) {
        if (on_path.count(y) || seen.count(y)) continue;
        seen.insert(y);
        stack.push_back(y);
      }
    }
    return false;
  }

  std::optional<std::vector<int>> find_second() {
    // any s2->t2 path avoiding on_path; BFS with parent links
    std::map<int, int> parent;
    std::vector<int> stack{s2};
    parent[s2] = s2;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      if (x == t2) {
        std::vector<int> p;
        for (int v = t2;; v = parent[v]) {
          p.push_back(v);
          if (v == s2) break;
        }
        return std::vector<int>(p.rbegin(), p.rend());
      }
      for (int y : adj.at(x)) {
        if (on_path.count(y) || parent.count(y)) continue;
        parent[y] = x;
        stack.push_back(y);
      }
    }
    return std::nullopt;
  }

  bool dfs(int v, TwoPathsResult& out) {
    if (--budget < 0) {
      exhausted = true;
      return false;
    }
    if (v == t1) {
      if (auto p2 = find_second()) {
        out.verdict = SearchVerdict::Found;
        out.path1 = path;
        out.path2 = *p2;
        return true;
      }
      return false;
    }
    for (int y : adj.at(v)) {
      if (on_path.count(y) || y == s2 || y == t2) continue;
      if (y != t1 && g.degree(y) < 2) continue;
      on_path.insert(y);
      path.push_back(y);
      bool hit = dfs(y, out);
      path.pop_back();
      on_path.erase(y);
      if (hit) return true;
      if (exhausted) return false;
    }
    return false;
  }
};

}  // namespace

TwoPathsResult two_disjoint_paths(const MultiGraph& g, int s1, int t1, int s2,
                                  int t2, std::size_t vertex_bound,
                                  long long budget) {
  std::set<int> ends{s1, t1, s2, t2};
  if (ends.size() != 4) throw std::invalid_argument("endpoints must be distinct");
  for (int v : ends)
    if (!g.has_vertex(v)) throw std::invalid_argument("endpoint not in graph");

  TwoPathsResult res;
  Search s(g, t1, s2, t2, budget);
  s.on_path.insert(s1);
  s.path.push_back(s1);
  bool found = s.dfs(s1, res);
  if (found) return res;
  if (s.exhausted || g.num_vertices() > vertex_bound) {
    res.verdict = SearchVerdict::Unknown;
  } else {
    res.verdict = SearchVerdict::NotFound;
  }
  return res;
}

}  // namespace ccg
