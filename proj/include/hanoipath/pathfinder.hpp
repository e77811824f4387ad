#pragma once

#include "hanoipath/core.hpp"

namespace hanoipath {

// Costs of the two candidate routes between two states: the largest
// differing disc moves once (alt1) or twice via the third peg (alt2).
struct AlternativeCosts {
  Distance alt1;
  Distance alt2;
  Distance minimum;
  // Input symbols consumed: the shared scan for the largest differing disc
  // plus one full pass over both remainders per alternative.
  std::size_t symbols_read = 0;
};

// Length of the shortest route from x to the perfect state target^n,
// evaluated by the corner-distance formula through the relabeling
// transducer.
Distance p1_distance(const HanoiWord& x, PegId target);

// Shortest move sequence from x to the perfect state target^n. Discs are
// scanned largest to smallest: a disc already on target is skipped, an
// off-target disc first parks everything smaller on the third peg.
MovePath p1_path(const HanoiWord& x, PegId target);

// Shortest move sequence from x to y, assembled from the once-vs-twice
// verdict and two perfect-state routes. Draws take the alternative-1 path.
MovePath p2_path(const HanoiWord& x, const HanoiWord& y);

// Same assembly with a forced alternative (Once or Twice); used to compare
// the two optimal paths of a draw.
MovePath p2_path_with(const HanoiWord& x, const HanoiWord& y,
                      Verdict alternative);

// The both-routes baseline: computes alt1 and alt2 separately with no early
// termination, reading every disc below the largest differing one exactly
// twice. Throws IdenticalStatesError when no disc differs.
AlternativeCosts both_alternative_costs(const HanoiWord& x,
                                        const HanoiWord& y);

// Convenience wrapper for gasket-labeled inputs.
AlternativeCosts both_alternative_costs_sg(const GasketWord& x,
                                           const GasketWord& y);

}  // namespace hanoipath
