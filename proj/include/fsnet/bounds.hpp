#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fsnet/isoperimetry.hpp"
#include "fsnet/lattice.hpp"

namespace fsnet {

struct BoundsReport {
  std::optional<int> bandwidth;
  std::optional<int> two_bandwidth;
  int swap_depth_lb = 0;
  int interaction_depth_lb = 0;
  std::vector<std::array<int, 3>> profile;  // rows {k, |B(r_k)|, |B(r_k) u B(C(r_k))|}
  std::string method;                       // closed_form | profile | exhaustive
  std::string note;                         // set when closed form and profile disagree
};

int order_bandwidth(const LinearOrder& r, const std::vector<int>& w);

BoundsReport boundary_profile(const GridGraph& g, const LinearOrder& r);

int bandwidth_exact(const GridGraph& g, int size_limit = 9);
int two_bandwidth_exact(const GridGraph& g, int size_limit = 9);

// plain factorial scans kept as the reference for the searches above
int bandwidth_exact_serial(const GridGraph& g, int size_limit = 9);
int two_bandwidth_exact_serial(const GridGraph& g, int size_limit = 9);

int swap_depth_lower_bound(int bandwidth, int two_bandwidth);

BoundsReport hubbard_bounds(const HubbardModel& m);
BoundsReport dense_bounds(int n);

}  // namespace fsnet
