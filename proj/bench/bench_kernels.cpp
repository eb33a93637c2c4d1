#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "fsnet/bounds.hpp"
#include "fsnet/isoperimetry.hpp"
#include "fsnet/lattice.hpp"
#include "fsnet/verify.hpp"

namespace {

double time_ms(const std::function<void()>& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

struct Row {
  std::string name;
  double serial_ms = 0.0;
  double parallel_ms = 0.0;
};

}  // namespace

int main() {
  std::vector<Row> rows;
  long long sink = 0;

  {
    fsnet::GridGraph g = fsnet::make_grid({2, 2, 5});
    Row r{"subset boundary scan [2,2,5]"};
    r.serial_ms = time_ms([&] { sink += fsnet::min_boundary_by_size_serial(g)[5]; });
    r.parallel_ms = time_ms([&] { sink += fsnet::min_boundary_by_size(g)[5]; });
    rows.push_back(r);
  }
  {
    fsnet::GridGraph g = fsnet::make_grid({4, 4});
    Row r{"subset boundary scan [4,4]"};
    r.serial_ms = time_ms([&] { sink += fsnet::min_boundary_by_size_serial(g)[5]; });
    r.parallel_ms = time_ms([&] { sink += fsnet::min_boundary_by_size(g)[5]; });
    rows.push_back(r);
  }
  {
    fsnet::GridGraph g = fsnet::make_grid({3, 3});
    Row r{"2-bandwidth search [3,3]"};
    r.serial_ms = time_ms([&] { sink += fsnet::two_bandwidth_exact_serial(g); });
    r.parallel_ms = time_ms([&] { sink += fsnet::two_bandwidth_exact(g); });
    rows.push_back(r);
  }
  {
    fsnet::GridGraph g = fsnet::make_grid({2, 2, 2});
    Row r{"bandwidth search [2,2,2]"};
    r.serial_ms = time_ms([&] { sink += fsnet::bandwidth_exact_serial(g); });
    r.parallel_ms = time_ms([&] { sink += fsnet::bandwidth_exact(g); });
    rows.push_back(r);
  }
  {
    fsnet::InteractionGraph ig = fsnet::grid_interaction_graph(fsnet::make_grid({2, 3}));
    Row r{"swap-depth search 2x3 grid"};
    r.serial_ms = time_ms([&] { sink += fsnet::min_swap_depth_exhaustive_serial(ig); });
    r.parallel_ms = time_ms([&] { sink += fsnet::min_swap_depth_exhaustive(ig); });
    rows.push_back(r);
  }
  {
    fsnet::InteractionGraph ig = fsnet::dense_interaction_graph(5);
    Row r{"swap-depth search K5"};
    r.serial_ms = time_ms([&] { sink += fsnet::min_swap_depth_exhaustive_serial(ig); });
    r.parallel_ms = time_ms([&] { sink += fsnet::min_swap_depth_exhaustive(ig); });
    rows.push_back(r);
  }

  std::printf("%-32s %12s %12s %9s\n", "kernel", "serial ms", "parallel ms", "speedup");
  for (const Row& r : rows)
    std::printf("%-32s %12.2f %12.2f %8.2fx\n", r.name.c_str(), r.serial_ms, r.parallel_ms,
                r.parallel_ms > 0 ? r.serial_ms / r.parallel_ms : 0.0);
  std::printf("(checksum %lld)\n", sink);
  return 0;
}
