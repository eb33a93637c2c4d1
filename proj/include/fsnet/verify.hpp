#pragma once

#include <utility>
#include <vector>

#include "fsnet/bounds.hpp"
#include "fsnet/lattice.hpp"
#include "fsnet/synth.hpp"

namespace fsnet {

// arrangement of the line after every layer; entry 0 is the initial order
std::vector<std::vector<Coord>> simulate(const SwapNetwork& net);

struct CoverageReport {
  std::vector<int> covered_layer;           // per interaction edge, -1 if never interacted
  std::vector<std::pair<int, int>> missing; // vertex index pairs left uncovered
  std::vector<int> missing_sites;
  int swap_depth = 0;
  int interaction_depth = 0;
  bool complete() const { return missing.empty() && missing_sites.empty(); }
};

CoverageReport coverage(const SwapNetwork& net, const InteractionGraph& ig);

struct OptimalityCheck {
  bool swap_optimal = false;
  bool interaction_optimal = false;
};

OptimalityCheck check_against_bounds(const CoverageReport& rep, const BoundsReport& bounds);

// breadth-first search over (arrangement, covered set) states; exact minimum
// number of swap layers needed to make every edge adjacent at some moment
int min_swap_depth_exhaustive(const InteractionGraph& ig, int size_limit = 7);
int min_swap_depth_exhaustive_serial(const InteractionGraph& ig, int size_limit = 7);

}  // namespace fsnet
