#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ccg/multigraph.hpp"

namespace ccg {

/// Rotation system: for every vertex, the cyclic order of incident edge
/// indices. Parallel edges appear as separate entries.
struct PlanarEmbedding {
  std::map<int, std::vector<int>> rotation;
  int face_count = 0;
};

/// On "not planar": edge indices of a Kuratowski (K5 or K3,3) subdivision.
struct KuratowskiWitness {
  std::vector<int> edge_indices;
};

struct PlanarityResult {
  bool planar = false;
  std::optional<PlanarEmbedding> embedding;
  std::optional<KuratowskiWitness> kuratowski;
};

/// Boyer-Myrvold planarity with certificates. Certificates are produced for
/// graphs up to `cert_bound` vertices and re-verified independently before
/// being returned; verification failure throws.
PlanarityResult is_planar(const MultiGraph& g, std::size_t cert_bound = 4096);

/// Fast yes/no without certificate work (used by the oracle's inner loop).
bool is_planar_fast(const MultiGraph& g);

/// Face-traces the rotation system and checks V - E + F = 1 + #components.
bool verify_embedding(const MultiGraph& g, const PlanarEmbedding& emb);

/// Checks the edge set is a subgraph forming a K5 or K3,3 subdivision.
bool verify_kuratowski(const MultiGraph& g, const KuratowskiWitness& k);

/// Running count of planarity tests, the oracle's budget unit.
long long planarity_test_count();
void reset_planarity_test_count();

}  // namespace ccg
