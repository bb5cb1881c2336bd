#pragma once

#include <set>
#include <string>
#include <vector>

#include "ccg/tile.hpp"

namespace ccg {

/// Wall-to-wall path touching no other wall vertex; carries its wall indices.
struct TraversingPath {
  std::vector<int> vertices;  // from left wall vertex to right wall vertex
  int i = -1;                 // index into the tile's left wall
  int j = -1;                 // index into the tile's right wall
};

/// Checks endpoints, wall indices, path validity and the no-other-wall-vertex
/// condition; fills i/j if negative.
bool check_traversing(const Tile& t, TraversingPath& p, std::string* err = nullptr);

enum class PairClass { Twisted, Aligned, Intersecting };

PairClass classify_pair(const TraversingPath& p, const TraversingPath& q);

/// Set-theoretic coherence of {A,B} and {A2,B2}: some set is disjoint from
/// the union of the opposite pair.
bool pairs_coherent(const std::set<int>& A, const std::set<int>& B,
                    const std::set<int>& A2, const std::set<int>& B2);

struct PathPair {
  TraversingPath p, q;
};

struct TwistedFamily {
  std::vector<PathPair> pairs;
};

struct FamilyVerdict {
  bool ok = false;
  std::size_t size = 0;
  std::string violation;
};

/// All pairs twisted and pairwise coherent; on success the family size is a
/// tile crossing number lower bound.
FamilyVerdict verify_twisted_family(const Tile& t, const TwistedFamily& f);

/// Aligned counterpart (used for extensions).
FamilyVerdict verify_aligned_family(const Tile& t, const TwistedFamily& f);

/// Extension data for one tile of a sequence: an aligned family together
/// with the bijection, expressed by position: extension pair r extends
/// composed pair r.
struct PropagationStep {
  TwistedFamily family;  // aligned in its own tile
};

struct PropagationCert {
  /// steps[i] describes tile i of the sequence, i != l; entries at l unused.
  std::vector<PropagationStep> steps;
};

struct PropagationVerdict {
  bool ok = false;
  std::size_t bound = 0;
  std::string violation;  // names the failing cut or tile
};

/// Verifies that the twisted family in tile l propagates around the
/// cyclically-compatible sequence: every cut T/i (i != l) then carries a
/// composed twisted family of the same size, establishing
/// min_{i!=l} tcrn(join(T/i)) >= |f|.
PropagationVerdict verify_propagation(const TileSequence& ts, std::size_t l,
                                      const TwistedFamily& f,
                                      const PropagationCert& cert);

}  // namespace ccg
