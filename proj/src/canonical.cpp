#include "ccg/canonical.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ccg {

namespace {

struct Canon {
  int n;
  std::vector<std::vector<int>> mult;  // multiplicity matrix
  std::string best;
  bool have_best = false;

  void refine(std::vector<int>& color) const {
    for (;;) {
      std::vector<std::pair<std::vector<long long>, int>> sig(n);
      for (int v = 0; v < n; ++v) {
        std::vector<long long> s;
        s.push_back(color[v]);
        std::vector<long long> nb;
        for (int u = 0; u < n; ++u)
          if (mult[v][u] > 0)
            nb.push_back((long long)color[u] * 1000003LL + mult[v][u]);
        std::sort(nb.begin(), nb.end());
        s.insert(s.end(), nb.begin(), nb.end());
        sig[v] = {std::move(s), v};
      }
      auto order = sig;
      std::sort(order.begin(), order.end());
      std::vector<int> next(n);
      int c = 0;
      for (int i = 0; i < n; ++i) {
        if (i > 0 && order[i].first != order[i - 1].first) ++c;
        next[order[i].second] = c;
      }
      if (next == color) return;
      color = next;
    }
  }

  std::string cert_from(const std::vector<int>& color) const {
    // discrete coloring: color is a permutation rank
    std::vector<int> pos(n);
    for (int v = 0; v < n; ++v) pos[color[v]] = v;
    std::string cert;
    cert.push_back((char)(n & 0xff));
    cert.push_back((char)((n >> 8) & 0xff));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        int m = mult[pos[i]][pos[j]];
        cert.push_back((char)m);
      }
    return cert;
  }

  void search(std::vector<int> color) {
    refine(color);
    // find smallest non-singleton class
    std::map<int, std::vector<int>> classes;
    for (int v = 0; v < n; ++v) classes[color[v]].push_back(v);
    const std::vector<int>* target = nullptr;
    for (const auto& [c, vs] : classes)
      if (vs.size() > 1) { target = &vs; break; }
    if (!target) {
      std::string cert = cert_from(color);
      if (!have_best || cert < best) {
        best = cert;
        have_best = true;
      }
      return;
    }
    for (int v : *target) {
      auto next = color;
      for (int u = 0; u < n; ++u)
        if (next[u] >= next[v] && u != v) ++next[u];
      // v individualized below its old classmates
      search(next);
    }
  }
};

}  // namespace

std::string canonical_form(const MultiGraph& g, std::size_t bound) {
  if (g.num_vertices() > bound)
    throw std::invalid_argument("canonical_form: graph above small-graph bound");
  Canon c;
  c.n = (int)g.num_vertices();
  std::map<int, int> idx;
  int next = 0;
  for (int v : g.vertices()) idx[v] = next++;
  c.mult.assign(c.n, std::vector<int>(c.n, 0));
  for (const auto& e : g.edges()) {
    ++c.mult[idx[e.first]][idx[e.second]];
    ++c.mult[idx[e.second]][idx[e.first]];
  }
  c.search(std::vector<int>(c.n, 0));
  return c.best;
}

bool isomorphic(const MultiGraph& a, const MultiGraph& b, std::size_t bound) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges())
    return false;
  return canonical_form(a, bound) == canonical_form(b, bound);
}

}  // namespace ccg
