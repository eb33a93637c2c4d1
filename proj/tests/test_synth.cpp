#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "doctest.h"
#include "fsnet/bounds.hpp"
#include "fsnet/isoperimetry.hpp"
#include "fsnet/lattice.hpp"
#include "fsnet/synth.hpp"
#include "fsnet/verify.hpp"

using namespace fsnet;

namespace {

std::vector<Coord> order_coords(const GridGraph& g, const LinearOrder& r) {
  std::vector<Coord> out;
  for (int v : r.seq) out.push_back(vertex_coord(g, v));
  return out;
}

}  // namespace

TEST_CASE("interleaved order on the 3x3 square") {
  GridGraph g = make_grid({3, 3});
  auto got = order_coords(g, interleave_orders(g));
  std::vector<Coord> want = {{1, 0}, {0, 0}, {0, 1}, {2, 0}, {2, 1},
                             {1, 1}, {1, 2}, {0, 2}, {2, 2}};
  CHECK(got == want);
}

TEST_CASE("interleaved order on the 2x2 square") {
  GridGraph g = make_grid({2, 2});
  auto got = order_coords(g, interleave_orders(g));
  std::vector<Coord> want = {{1, 0}, {0, 0}, {0, 1}, {1, 1}};
  CHECK(got == want);
}

TEST_CASE("interleaved order on a path is the identity") {
  GridGraph g = make_grid({2});
  auto got = order_coords(g, interleave_orders(g));
  std::vector<Coord> want = {{0}, {1}};
  CHECK(got == want);
}

TEST_CASE("spinless 3x3 network") {
  HubbardModel m;
  m.m = 3;
  m.n = 3;
  InteractionGraph ig = interaction_graph(m);
  SwapNetwork net = hubbard_network(m);
  CoverageReport rep = coverage(net, ig);
  CHECK(rep.complete());
  CHECK(rep.swap_depth == 2);
  CHECK(rep.interaction_depth == 4);

  auto trace = simulate(net);
  REQUIRE(trace.size() == net.layers.size() + 1);
  std::vector<Coord> final_line = {{0, 0}, {2, 0}, {1, 0}, {1, 1}, {0, 1},
                                   {0, 2}, {2, 1}, {2, 2}, {1, 2}};
  CHECK(trace.back() == final_line);
}

TEST_CASE("spin 3x3 network") {
  HubbardModel m;
  m.m = 3;
  m.n = 3;
  m.spin = true;
  InteractionGraph ig = interaction_graph(m);
  SwapNetwork net = hubbard_network(m);
  CoverageReport rep = coverage(net, ig);
  CHECK(rep.complete());
  CHECK((int)ig.edges.size() == 33);
  CHECK(rep.swap_depth == 5);
  CHECK(rep.interaction_depth == 6);
}

TEST_CASE("spinless strip needs no swaps") {
  HubbardModel m;
  m.m = 1;
  m.n = 4;
  SwapNetwork net = hubbard_network(m);
  CoverageReport rep = coverage(net, interaction_graph(m));
  CHECK(rep.complete());
  CHECK(rep.swap_depth == 0);
  CHECK(rep.interaction_depth == 2);
}

TEST_CASE("spinless depth law over the rectangle family") {
  for (int n = 2; n <= 6; ++n) {
    for (int m = 2; m <= n; ++m) {
      HubbardModel h;
      h.m = m;
      h.n = n;
      SwapNetwork net = hubbard_network(h);
      CoverageReport rep = coverage(net, interaction_graph(h));
      CHECK(rep.complete());
      CHECK(rep.swap_depth == m - 1);
      if (m >= 3) CHECK(rep.interaction_depth == 4);
    }
  }
}

TEST_CASE("spin depth law over the rectangle family") {
  for (int n = 2; n <= 4; ++n) {
    for (int m = 2; m <= n; ++m) {
      HubbardModel h;
      h.m = m;
      h.n = n;
      h.spin = true;
      SwapNetwork net = hubbard_network(h);
      CoverageReport rep = coverage(net, interaction_graph(h));
      CHECK(rep.complete());
      CHECK(rep.swap_depth == 2 * m - 1);
      CHECK(rep.interaction_depth == 6);
    }
  }
}

TEST_CASE("generic grid networks cover every edge") {
  for (auto dims : std::vector<std::vector<int>>{{4}, {2, 2, 2}, {2, 3}, {3, 3}}) {
    GridGraph g = make_grid(dims);
    InteractionGraph ig = grid_interaction_graph(g);
    SwapNetwork net = grid_network(g);
    CoverageReport rep = coverage(net, ig);
    CHECK(rep.complete());
  }
  SwapNetwork path = grid_network(make_grid({4}));
  CHECK(swap_depth(path) == 0);
  CHECK(interaction_depth(path) == 2);

  GridGraph cube = make_grid({2, 2, 2});
  SwapNetwork cube_net = grid_network(cube);
  CHECK(swap_depth(cube_net) >=
        boundary_profile(cube, wang_wang_order(cube)).swap_depth_lb);
}

TEST_CASE("dense swap-optimal networks") {
  for (int n = 2; n <= 8; ++n) {
    SwapNetwork net = dense_network(n, DenseMode::swap_optimal);
    CoverageReport rep = coverage(net, dense_interaction_graph(n));
    CHECK(rep.complete());
    CHECK(rep.swap_depth == std::max(0, n - 2));
    CHECK(rep.interaction_depth == (n == 2 ? 1 : n));
  }
}

TEST_CASE("round robin matchings") {
  auto ms = round_robin_matchings(4);
  REQUIRE(ms.size() == 3);
  auto norm = [](std::vector<std::pair<int, int>> v) {
    std::set<std::pair<int, int>> s;
    for (auto [a, b] : v) s.insert({std::min(a, b), std::max(a, b)});
    return s;
  };
  CHECK(norm(ms[0]) == std::set<std::pair<int, int>>{{0, 3}, {1, 2}});
  CHECK(norm(ms[1]) == std::set<std::pair<int, int>>{{1, 3}, {0, 2}});
  CHECK(norm(ms[2]) == std::set<std::pair<int, int>>{{2, 3}, {0, 1}});

  for (int n = 2; n <= 12; n += 2) {
    auto list = round_robin_matchings(n);
    REQUIRE((int)list.size() == n - 1);
    std::set<std::pair<int, int>> seen;
    for (const auto& matching : list) {
      REQUIRE((int)matching.size() == n / 2);
      std::vector<bool> used(n, false);
      for (auto [a, b] : matching) {
        CHECK_FALSE(used[a]);
        CHECK_FALSE(used[b]);
        used[a] = used[b] = true;
        seen.insert({std::min(a, b), std::max(a, b)});
      }
    }
    CHECK((int)seen.size() == n * (n - 1) / 2);
  }
  CHECK_THROWS_AS(round_robin_matchings(5), std::invalid_argument);
}

TEST_CASE("dense interaction-optimal networks") {
  for (int n = 2; n <= 8; n += 2) {
    SwapNetwork net = dense_network(n, DenseMode::interaction_optimal);
    CoverageReport rep = coverage(net, dense_interaction_graph(n));
    CHECK(rep.complete());
    CHECK(rep.interaction_depth == n - 1);
  }
  CHECK_THROWS_AS(dense_network(5, DenseMode::interaction_optimal), std::invalid_argument);
}

TEST_CASE("triangular 3x3 keeps the square depth and covers the square edges") {
  auto [ig, net] = triangular_network(3, 3);
  CHECK((int)ig.edges.size() == 20);
  CoverageReport rep = coverage(net, ig);
  CHECK(rep.swap_depth == 2);
  GridGraph g = make_grid({3, 3});
  auto grid_edges = grid_interaction_graph(g).edges;
  std::set<std::pair<int, int>> grid_set(grid_edges.begin(), grid_edges.end());
  for (int ei = 0; ei < (int)ig.edges.size(); ++ei) {
    if (grid_set.count(ig.edges[ei])) CHECK(rep.covered_layer[ei] >= 0);
  }
  for (auto [va, vb] : rep.missing) {
    CHECK_FALSE(grid_set.count({std::min(va, vb), std::max(va, vb)}));
  }
  CHECK((int)rep.missing.size() >= 2);
}

TEST_CASE("triangular 2x2 cannot reach either diagonal in one swap layer") {
  auto [ig, net] = triangular_network(2, 2);
  CHECK((int)ig.edges.size() == 6);
  CoverageReport rep = coverage(net, ig);
  CHECK(rep.swap_depth == 1);
  CHECK((int)rep.missing.size() == 2);
}

TEST_CASE("triangular strip degenerates to the path") {
  auto [ig, net] = triangular_network(1, 5);
  CHECK((int)ig.edges.size() == 4);
  CoverageReport rep = coverage(net, ig);
  CHECK(rep.complete());
  CHECK(rep.swap_depth == 0);
}

TEST_CASE("swap layers always act on disjoint positions") {
  HubbardModel m;
  m.m = 3;
  m.n = 4;
  m.spin = true;
  SwapNetwork net = hubbard_network(m);
  for (const auto& layer : net.layers) {
    if (layer.kind != Layer::Kind::swap) continue;
    std::vector<bool> used(net.num_positions, false);
    for (int p : layer.at) {
      REQUIRE(p >= 0);
      REQUIRE(p + 1 < net.num_positions);
      CHECK_FALSE(used[p]);
      CHECK_FALSE(used[p + 1]);
      used[p] = used[p + 1] = true;
    }
  }
}
