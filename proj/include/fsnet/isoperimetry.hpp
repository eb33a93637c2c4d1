#pragma once

#include <optional>
#include <vector>

#include "fsnet/lattice.hpp"

namespace fsnet {

struct LinearOrder {
  std::vector<int> seq;   // seq[rank] = vertex index
  std::vector<int> rank;  // rank[vertex index]
};

LinearOrder make_order(const GridGraph& g, std::vector<int> seq);
LinearOrder order_from_coords(const GridGraph& g, const std::vector<Coord>& coords);

LinearOrder wang_wang_order(const GridGraph& g);

// sets are sorted vectors of vertex indices, no duplicates
std::vector<int> vertex_boundary(const GridGraph& g, const std::vector<int>& w);
std::vector<int> closure(const GridGraph& g, const std::vector<int>& w);

struct ShellPartition {
  std::vector<std::vector<int>> shells;
};

ShellPartition shells(const GridGraph& g);

struct SigmaRow {
  int shell_index = 0;
  std::vector<int> row_index;  // coordinate components 2..n-1
  std::vector<int> elements;   // vertex indices, first coordinate descending
};

std::vector<SigmaRow> sigma_rows(const GridGraph& g, int shell_index);

bool is_initial_segment_closed(const GridGraph& g, const LinearOrder& r);

struct IsoperimetryCheck {
  bool ok = false;
  std::optional<int> counterexample_k;
};

IsoperimetryCheck verify_isoperimetric(const GridGraph& g, const LinearOrder& r,
                                       int size_limit = 20);

// min_boundary_by_size[k] = smallest vertex boundary over all k-subsets
std::vector<int> min_boundary_by_size(const GridGraph& g);
std::vector<int> min_boundary_by_size_serial(const GridGraph& g);

}  // namespace fsnet
