#pragma once

#include <utility>
#include <vector>

#include "fsnet/isoperimetry.hpp"
#include "fsnet/lattice.hpp"

namespace fsnet {

struct InteractRecord {
  int at = 0;                // left position of the adjacent pair (single position for number_op)
  TermKind term = TermKind::hop;
  std::vector<Coord> sites;  // occupants, position order; one entry for number_op
};

struct Layer {
  enum class Kind { swap, interact };
  Kind kind = Kind::swap;
  std::vector<int> at;                  // swap layers: left indices, ascending
  std::vector<InteractRecord> records;  // interact layers
};

struct SwapNetwork {
  int num_positions = 0;
  std::vector<Coord> initial_order;  // vertex at each line position
  std::vector<Layer> layers;
};

int swap_depth(const SwapNetwork& net);
int interaction_depth(const SwapNetwork& net);

enum class DenseMode { swap_optimal, interaction_optimal };

SwapNetwork dense_network(int n, DenseMode mode);
std::vector<std::vector<std::pair<int, int>>> round_robin_matchings(int n);

LinearOrder interleave_orders(const GridGraph& g);

SwapNetwork grid_network(const GridGraph& g);
SwapNetwork hubbard_network(const HubbardModel& m);
std::pair<InteractionGraph, SwapNetwork> triangular_network(int m, int n);

}  // namespace fsnet
