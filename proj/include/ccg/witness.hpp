#pragma once

#include <functional>
#include <optional>

#include "ccg/crossing.hpp"

namespace ccg {

struct WitnessOptions {
  long long budget = 1'000'000;  // planarity tests
  unsigned rng_seed = 0;
  int greedy_restarts = 4;
  std::vector<CrossingSet> seeds;
};

/// Heuristic upper bound: a crossing set of size <= k whose planarization is
/// planar, if one is found (greedy planar subgraph + edge reinsertion, after
/// trying the seeds). Absence proves nothing.
std::optional<CrossingSet> witness_upper(const MultiGraph& g, int k,
                                         const WitnessOptions& opt = {});

/// Same search in a frame gadget (tile drawings); pair universe restricted
/// to tile edges.
std::optional<CrossingSet> witness_upper_tile(const Tile& t, int k,
                                              const WitnessOptions& opt = {});

enum class CriticalStatus { Critical, NotCritical, Unknown };

struct CriticalVerdict {
  CriticalStatus status = CriticalStatus::Unknown;
  std::vector<int> unsettled_edges;    // Unknown: no witness found, not refuted
  std::vector<int> refuted_edges;      // NotCritical: cr(g-e) proven >= k
  bool lower_established = false;
  long long lower_bound = 0;
  std::string lower_how;
};

struct CriticalOptions {
  long long oracle_budget = 10'000'000;
  long long per_edge_budget = 1'000'000;
  /// Caller-verified lower bound certificate (e.g. a strip bound); when
  /// >= k it replaces the oracle's exhaustion run.
  long long verified_lower = 0;
  std::string verified_lower_kind;
  /// Construction-aware witness seeds per deleted edge index.
  std::function<std::vector<CrossingSet>(int)> per_edge_seeds;
};

/// cr(g) >= k (exact or supplied certificate) and cr(g-e) <= k-1 for every
/// edge, the latter by witness search then a bounded exact run.
CriticalVerdict is_crossing_critical(const MultiGraph& g, int k,
                                     const CriticalOptions& opt = {});

struct DegenerateVerdict {
  CriticalStatus status = CriticalStatus::Unknown;
  std::string detail;
  std::vector<int> unsettled_edges;
};

/// Perfect, planar, and tcr(T^inv - e) < k for every edge, by witness search.
DegenerateVerdict is_degenerate_tile(const Tile& t, int k,
                                     const CriticalOptions& opt = {});

}  // namespace ccg
