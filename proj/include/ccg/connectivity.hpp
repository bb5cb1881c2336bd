#pragma once

#include <vector>

#include "ccg/multigraph.hpp"

namespace ccg {

/// Maximum number of edge-disjoint s-t paths (edge multiplicity counts),
/// optionally capped at `need` for early exit.
int edge_disjoint_path_count(const MultiGraph& g, int s, int t, int need = -1);

/// Edge-disjoint s-t paths themselves, as vertex sequences.
std::vector<std::vector<int>> edge_disjoint_paths(const MultiGraph& g, int s,
                                                  int t, int want);

/// Maximum number of internally vertex-disjoint s-t paths (s,t nonadjacent
/// or not; adjacency contributes parallel direct edges).
int internally_disjoint_path_count(const MultiGraph& g, int s, int t,
                                   int need = -1);

bool vertex_connectivity_at_least(const MultiGraph& g, int k);
bool edge_connectivity_at_least(const MultiGraph& g, int k);

}  // namespace ccg
