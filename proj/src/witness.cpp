#include "ccg/witness.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "ccg/planarity.hpp"
#include "ccg/tile_check.hpp"

namespace ccg {

namespace {

// universe of candidate pairs; for tiles only tile-edge pairs
std::vector<std::pair<int, int>> pair_universe(const MultiGraph& g,
                                               std::size_t edge_limit) {
  std::vector<std::pair<int, int>> out;
  int m = (int)std::min(edge_limit, g.num_edges());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const auto& a = g.edges()[i];
      const auto& b = g.edges()[j];
      if (a.first != b.first && a.first != b.second && a.second != b.first &&
          a.second != b.second)
        out.push_back({i, j});
    }
  return out;
}

// drop redundant pairs while the planarization stays planar
CrossingSet shrink(const MultiGraph& g, CrossingSet cs, long long budget_abs) {
  bool changed = true;
  while (changed && planarity_test_count() < budget_abs) {
    changed = false;
    for (std::size_t i = 0; i < cs.pairs.size(); ++i) {
      CrossingSet trial;
      for (std::size_t j = 0; j < cs.pairs.size(); ++j)
        if (j != i) trial.pairs.push_back(cs.pairs[j]);
      if (planarization_planar(g, trial)) {
        cs = trial;
        changed = true;
        break;
      }
    }
  }
  return cs;
}

std::optional<CrossingSet> search(const MultiGraph& g, std::size_t edge_limit,
                                  int k, const WitnessOptions& opt) {
  long long budget_abs = planarity_test_count() + opt.budget;
  if (k < 0) return std::nullopt;
  if (is_planar_fast(g)) return CrossingSet{};
  if (k == 0) return std::nullopt;

  for (const auto& seed : opt.seeds) {
    if ((int)seed.pairs.size() > k) continue;
    try {
      validate_crossing_set(g, seed);
    } catch (const std::exception&) {
      continue;  // stale or malformed seed
    }
    if (planarity_test_count() > budget_abs) return std::nullopt;
    if (planarization_planar(g, seed)) return seed;
  }

  auto universe = pair_universe(g, edge_limit);

  // k = 1 admits a full scan of the universe
  if (k == 1) {
    for (const auto& p : universe) {
      if (planarity_test_count() > budget_abs) return std::nullopt;
      CrossingSet cs{{p}};
      if (planarization_planar(g, cs)) return cs;
    }
    return std::nullopt;
  }

  std::mt19937 rng(opt.rng_seed);
  for (int attempt = 0; attempt < opt.greedy_restarts; ++attempt) {
    if (planarity_test_count() > budget_abs) break;
    // greedy planar subgraph over a deterministic, then shuffled, edge order
    std::vector<int> order(std::min(edge_limit, g.num_edges()));
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = (int)i;
    if (attempt > 0) std::shuffle(order.begin(), order.end(), rng);

    MultiGraph partial;
    for (int v : g.vertices()) partial.add_vertex(v);
    // keep any gadget edges (indices beyond edge_limit) in from the start
    for (std::size_t i = edge_limit; i < g.num_edges(); ++i)
      partial.add_edge(g.edges()[i].first, g.edges()[i].second);
    std::vector<bool> in(g.num_edges(), false);
    for (int e : order) {
      MultiGraph trial = partial;
      trial.add_edge(g.edges()[e].first, g.edges()[e].second);
      if (planarity_test_count() > budget_abs) break;
      if (is_planar_fast(trial)) {
        partial = trial;
        in[e] = true;
      }
    }
    std::vector<int> missing;
    for (int e : order)
      if (!in[e]) missing.push_back(e);
    if ((int)missing.size() > k) continue;

    // reinsert each missing edge with one crossing, backing off to two
    CrossingSet cs;
    bool ok = true;
    for (int e : missing) {
      bool placed = false;
      for (const auto& p : universe) {
        if (p.first != e && p.second != e) continue;
        if (planarity_test_count() > budget_abs) { ok = false; break; }
        CrossingSet trial = cs;
        trial.pairs.push_back(p);
        if ((int)trial.pairs.size() > k) continue;
        std::set<std::pair<int, int>> dedup(trial.pairs.begin(),
                                            trial.pairs.end());
        if (dedup.size() != trial.pairs.size()) continue;
        if (planarization_planar(g, trial)) {
          cs = trial;
          placed = true;
          break;
        }
      }
      if (!ok) break;
      if (!placed) {
        // two crossings on e
        for (std::size_t a = 0; a < universe.size() && !placed; ++a) {
          if (universe[a].first != e && universe[a].second != e) continue;
          for (std::size_t b = a + 1; b < universe.size() && !placed; ++b) {
            if (universe[b].first != e && universe[b].second != e) continue;
            if (planarity_test_count() > budget_abs) { ok = false; break; }
            CrossingSet trial = cs;
            trial.pairs.push_back(universe[a]);
            trial.pairs.push_back(universe[b]);
            if ((int)trial.pairs.size() > k) continue;
            if (planarization_planar(g, trial)) {
              cs = trial;
              placed = true;
            }
          }
        }
      }
      if (!placed) { ok = false; break; }
    }
    if (ok && (int)cs.pairs.size() <= k) {
      cs = shrink(g, cs, budget_abs);
      return cs;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<CrossingSet> witness_upper(const MultiGraph& g, int k,
                                         const WitnessOptions& opt) {
  return search(g, g.num_edges(), k, opt);
}

std::optional<CrossingSet> witness_upper_tile(const Tile& t, int k,
                                              const WitnessOptions& opt) {
  FrameGadget fg = frame_gadget(t);
  return search(fg.graph, fg.tile_edge_count, k, opt);
}

CriticalVerdict is_crossing_critical(const MultiGraph& g, int k,
                                     const CriticalOptions& opt) {
  CriticalVerdict v;
  if (opt.verified_lower >= k) {
    v.lower_established = true;
    v.lower_bound = opt.verified_lower;
    v.lower_how = opt.verified_lower_kind.empty() ? "certificate"
                                                  : opt.verified_lower_kind;
  } else {
    OracleOptions oo;
    oo.budget = opt.oracle_budget;
    CrResult r = cr_exact(g, oo);
    if (r.exact && r.value >= k) {
      v.lower_established = true;
      v.lower_bound = r.value;
      v.lower_how = "oracle-exact";
    } else if (!r.exact && r.lower_bound >= k) {
      v.lower_established = true;
      v.lower_bound = r.lower_bound;
      v.lower_how = "oracle-exhaustion";
    }
  }
  if (!v.lower_established) {
    v.status = CriticalStatus::Unknown;
    return v;
  }

  for (int e = 0; e < (int)g.num_edges(); ++e) {
    MultiGraph h = g.remove_edge(e);
    WitnessOptions wo;
    wo.budget = opt.per_edge_budget;
    // seeds are expressed in h's indexing (edges above e shifted down)
    if (opt.per_edge_seeds) wo.seeds = opt.per_edge_seeds(e);
    if (witness_upper(h, k - 1, wo)) continue;
    // no witness; try to refute with a bounded exact run
    OracleOptions oo;
    oo.budget = opt.per_edge_budget;
    oo.max_k = k - 1;
    CrResult r = cr_exact(h, oo);
    if (r.exact && r.value <= k - 1) continue;
    if (!r.budget_exhausted && !r.exact && r.lower_bound >= k) {
      v.refuted_edges.push_back(e);
    } else {
      v.unsettled_edges.push_back(e);
    }
  }
  if (!v.refuted_edges.empty())
    v.status = CriticalStatus::NotCritical;
  else if (!v.unsettled_edges.empty())
    v.status = CriticalStatus::Unknown;
  else
    v.status = CriticalStatus::Critical;
  return v;
}

DegenerateVerdict is_degenerate_tile(const Tile& t, int k,
                                     const CriticalOptions& opt) {
  DegenerateVerdict v;
  auto perfect = is_perfect_tile(t);
  if (!perfect.ok) {
    v.status = CriticalStatus::NotCritical;
    v.detail = "not perfect: " + perfect.violation;
    return v;
  }
  if (!is_planar_tile(t)) {
    v.status = CriticalStatus::NotCritical;
    v.detail = "tile not planar";
    return v;
  }
  Tile twisted = invert_right(t);
  for (int e = 0; e < (int)t.graph.num_edges(); ++e) {
    Tile te = twisted;
    te.graph = te.graph.remove_edge(e);
    WitnessOptions wo;
    wo.budget = opt.per_edge_budget;
    if (opt.per_edge_seeds) wo.seeds = opt.per_edge_seeds(e);
    if (!witness_upper_tile(te, k - 1, wo)) v.unsettled_edges.push_back(e);
  }
  if (v.unsettled_edges.empty()) {
    v.status = CriticalStatus::Critical;
    v.detail = "degenerate";
  } else {
    v.status = CriticalStatus::Unknown;
    v.detail = "edges without a small-enough witness remain";
  }
  return v;
}

}  // namespace ccg
