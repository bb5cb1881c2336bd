#pragma once

#include <vector>

#include "ccg/multigraph.hpp"

namespace ccg {

/// A graph with ordered left/right wall sequences. Walls are disjoint
/// sequences of distinct vertices; wall vertices of degree 0 are rejected.
struct Tile {
  MultiGraph graph;
  std::vector<int> left;
  std::vector<int> right;
};

void validate_tile(const Tile& t);

bool compatible(const Tile& a, const Tile& b);
bool cyclically_compatible(const Tile& t);

/// Join: identify right wall of `a` with left wall of `b` (a's ids win);
/// interior degree-2 vertices created by the identification are suppressed.
Tile join(const Tile& a, const Tile& b);

/// Cyclization: identify left wall with right wall, suppress degree-2
/// vertices. Rejects identifications that would create a loop.
MultiGraph cyclize(const Tile& t);

Tile invert_right(const Tile& t);  // T with reversed right wall
Tile invert_left(const Tile& t);
Tile invert(const Tile& t);        // both walls reversed
Tile reverse(const Tile& t);       // walls exchanged

using TileSequence = std::vector<Tile>;

bool compatible(const TileSequence& ts);
bool cyclically_compatible(const TileSequence& ts);

Tile join(const TileSequence& ts);
MultiGraph cyclize(const TileSequence& ts);

TileSequence seq_twist(const TileSequence& ts);
TileSequence seq_flip(const TileSequence& ts, std::size_t i);
/// Drops tile i and rotates: (T_{i+1},...,T_m,T_0,...,T_{i-1}).
TileSequence seq_cut(const TileSequence& ts, std::size_t i);
/// Rotates to start at tile i (cyclization-preserving).
TileSequence seq_shift(const TileSequence& ts, std::size_t i);
TileSequence seq_reverse(const TileSequence& ts);

}  // namespace ccg
