#include "ccg/crossing.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "ccg/planarity.hpp"
#include "ccg/tile_check.hpp"

namespace ccg {

namespace {

bool edges_independent(const Edge& a, const Edge& b) {
  return a.first != b.first && a.first != b.second && a.second != b.first &&
         a.second != b.second;
}

// planarize with an explicit per-edge threading order of the dummies
MultiGraph planarize_ordered(
    const MultiGraph& g,
    const std::map<int, std::vector<int>>& chains,  // edge -> pair ids in order
    const std::vector<std::pair<int, int>>& pairs) {
  int next = 0;
  for (int v : g.vertices()) next = std::max(next, v + 1);
  std::map<int, int> dummy;  // pair id -> dummy vertex
  for (std::size_t p = 0; p < pairs.size(); ++p) dummy[(int)p] = next++;

  MultiGraph h;
  for (int v : g.vertices()) h.add_vertex(v);
  std::set<int> crossed;
  for (const auto& [e, ps] : chains)
    if (!ps.empty()) crossed.insert(e);
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    if (crossed.count((int)i)) continue;
    h.add_edge(g.edges()[i].first, g.edges()[i].second);
  }
  for (const auto& [e, ps] : chains) {
    if (ps.empty()) continue;
    int prev = g.edges()[e].first;
    for (int p : ps) {
      h.add_edge(prev, dummy[p]);
      prev = dummy[p];
    }
    h.add_edge(prev, g.edges()[e].second);
  }
  return h;
}

std::map<int, std::vector<int>> canonical_chains(const CrossingSet& cs) {
  std::map<int, std::vector<int>> chains;
  for (std::size_t p = 0; p < cs.pairs.size(); ++p) {
    chains[cs.pairs[p].first].push_back((int)p);
    chains[cs.pairs[p].second].push_back((int)p);
  }
  return chains;  // pair ids ascend along each edge from the low endpoint
}

struct Exhausted {};

struct LevelSearch {
  const MultiGraph& g;
  const std::vector<std::pair<int, int>>& universe;
  long long budget;
  int order_cap;

  bool test(const std::vector<int>& chosen) {
    CrossingSet cs;
    for (int u : chosen) cs.pairs.push_back(universe[u]);
    if (planarity_test_count() > budget) throw Exhausted{};
    return planarization_planar(g, cs, order_cap);
  }

  // lexicographic k-subset scan; returns the chosen universe indices
  std::optional<std::vector<int>> scan(int k) {
    int n = (int)universe.size();
    if (k > n) return std::nullopt;
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) c[i] = i;
    for (;;) {
      if (test(c)) return c;
      int i = k - 1;
      while (i >= 0 && c[i] == n - k + i) --i;
      if (i < 0) return std::nullopt;
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
  }
};

CrResult oracle_search(const std::vector<std::pair<int, int>>& universe,
                       const OracleOptions& opt,
                       const MultiGraph& planarity_target) {
  // `planarity_target` is the graph itself for cr; the frame gadget for tcr
  CrResult res;
  long long start = planarity_test_count();
  long long budget_abs = start + opt.budget;
  LevelSearch ls{planarity_target, universe, budget_abs, 5040};

  long long best_ub = -1;
  std::optional<CrossingSet> best_witness;
  try {
    for (const auto& seed : opt.seeds) {
      validate_crossing_set(planarity_target, seed);
      if (best_ub >= 0 && (long long)seed.pairs.size() >= best_ub) continue;
      if (planarity_test_count() > budget_abs) throw Exhausted{};
      if (planarization_planar(planarity_target, seed, 5040)) {
        best_ub = (long long)seed.pairs.size();
        best_witness = seed;
      }
    }

    if (is_planar_fast(planarity_target)) {
      res.value = 0;
      res.exact = true;
      res.upper_witness = CrossingSet{};
      res.lower_bound = 0;
      res.tests_used = planarity_test_count() - start;
      return res;
    }

    for (int k = 1; k <= opt.max_k; ++k) {
      if (best_ub == k) {
        // exhausted every level below the seed witness: value met exactly
        res.value = k;
        res.exact = true;
        res.upper_witness = best_witness;
        res.lower_bound = k;
        res.lower_kind = LowerCertKind::Exhaustion;
        res.lower_detail = "exhausted level " + std::to_string(k - 1);
        res.tests_used = planarity_test_count() - start;
        return res;
      }
      if (auto hit = ls.scan(k)) {
        CrossingSet cs;
        for (int u : *hit) cs.pairs.push_back(universe[u]);
        res.value = k;
        res.exact = true;
        res.upper_witness = cs;
        res.lower_bound = k;
        res.lower_kind = LowerCertKind::Exhaustion;
        res.lower_detail = "exhausted level " + std::to_string(k - 1);
        res.tests_used = planarity_test_count() - start;
        return res;
      }
      res.lower_bound = k + 1;  // level k exhausted without a witness
      res.lower_kind = LowerCertKind::Exhaustion;
      res.lower_detail = "exhausted level " + std::to_string(k);
    }
    // max_k reached
    res.exact = false;
    res.value = best_ub;
    res.upper_witness = best_witness;
    res.tests_used = planarity_test_count() - start;
    return res;
  } catch (const Exhausted&) {
    res.exact = false;
    res.budget_exhausted = true;
    res.value = best_ub;
    res.upper_witness = best_witness;
    res.tests_used = planarity_test_count() - start;
    return res;
  }
}

}  // namespace

void validate_crossing_set(const MultiGraph& g, const CrossingSet& cs) {
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : cs.pairs) {
    if (a == b) throw std::invalid_argument("edge paired with itself");
    if (a > b) std::swap(a, b);
    if (a < 0 || (std::size_t)b >= g.num_edges())
      throw std::invalid_argument("edge index out of range");
    if (!seen.insert({a, b}).second)
      throw std::invalid_argument("repeated crossing pair");
    if (!edges_independent(g.edges()[a], g.edges()[b]))
      throw std::invalid_argument("paired edges share an endpoint");
  }
}

MultiGraph planarize(const MultiGraph& g, const CrossingSet& cs) {
  validate_crossing_set(g, cs);
  return planarize_ordered(g, canonical_chains(cs), cs.pairs);
}

bool planarization_planar(const MultiGraph& g, const CrossingSet& cs,
                          int order_cap) {
  auto chains = canonical_chains(cs);
  // edges with a single dummy need no ordering choice
  std::vector<int> multi;
  for (const auto& [e, ps] : chains)
    if (ps.size() >= 2) multi.push_back(e);
  if (multi.empty())
    return is_planar_fast(planarize_ordered(g, chains, cs.pairs));

  long long attempts = 0;
  // odometer over permutations of each multiply-crossed edge's chain
  std::vector<std::vector<int>> perms(multi.size());
  for (std::size_t i = 0; i < multi.size(); ++i) perms[i] = chains[multi[i]];
  for (auto& p : perms) std::sort(p.begin(), p.end());

  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == multi.size()) {
      ++attempts;
      return is_planar_fast(planarize_ordered(g, chains, cs.pairs));
    }
    auto p = perms[i];
    do {
      if (attempts >= order_cap) return false;
      chains[multi[i]] = p;
      if (rec(i + 1)) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
  };
  return rec(0);
}

std::vector<std::pair<int, int>> independent_pairs(const MultiGraph& g) {
  std::vector<std::pair<int, int>> out;
  int m = (int)g.num_edges();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (edges_independent(g.edges()[i], g.edges()[j])) out.push_back({i, j});
  return out;
}

CrResult cr_exact(const MultiGraph& g, const OracleOptions& opt) {
  return oracle_search(independent_pairs(g), opt, g);
}

CrResult tcr_exact(const Tile& t, const OracleOptions& opt) {
  return tcr_exact_with_multiplicity(t, opt, 1);
}

CrResult tcr_exact_with_multiplicity(const Tile& t, const OracleOptions& opt,
                                     int bundle_multiplicity) {
  FrameGadget fg = frame_gadget(t, bundle_multiplicity);
  std::vector<std::pair<int, int>> universe;
  int m = (int)fg.tile_edge_count;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (edges_independent(fg.graph.edges()[i], fg.graph.edges()[j]))
        universe.push_back({i, j});
  return oracle_search(universe, opt, fg.graph);
}

}  // namespace ccg
