#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "fsnet/bounds.hpp"
#include "fsnet/lattice.hpp"
#include "fsnet/synth.hpp"
#include "fsnet/verify.hpp"

using namespace fsnet;

namespace {

HubbardModel spinless(int m, int n) {
  HubbardModel h;
  h.m = m;
  h.n = n;
  return h;
}

HubbardModel spinful(int m, int n) {
  HubbardModel h = spinless(m, n);
  h.spin = true;
  return h;
}

SwapNetwork line_only(int n) {
  SwapNetwork net;
  net.num_positions = n;
  for (int i = 0; i < n; ++i) net.initial_order.push_back({i});
  return net;
}

}  // namespace

TEST_CASE("simulate on an empty network yields just the initial arrangement") {
  SwapNetwork net = line_only(3);
  auto trace = simulate(net);
  REQUIRE(trace.size() == 1);
  CHECK(trace[0] == net.initial_order);
}

TEST_CASE("simulate tracks every layer and permutes the line") {
  SwapNetwork net = hubbard_network(spinless(2, 2));
  auto trace = simulate(net);
  REQUIRE(trace.size() == net.layers.size() + 1);
  CHECK(trace[0] == net.initial_order);
  for (const auto& line : trace) {
    auto sorted = line;
    std::sort(sorted.begin(), sorted.end());
    auto base = net.initial_order;
    std::sort(base.begin(), base.end());
    CHECK(sorted == base);
  }
}

TEST_CASE("simulate rejects malformed swap layers") {
  SwapNetwork net = line_only(3);
  Layer bad;
  bad.kind = Layer::Kind::swap;
  bad.at = {0, 1};
  net.layers.push_back(bad);
  CHECK_THROWS_AS(simulate(net), std::runtime_error);

  net.layers.clear();
  bad.at = {5};
  net.layers.push_back(bad);
  CHECK_THROWS_AS(simulate(net), std::runtime_error);
}

TEST_CASE("coverage of the spin 2x2 network") {
  InteractionGraph ig = interaction_graph(spinful(2, 2));
  REQUIRE((int)ig.edges.size() == 12);
  SwapNetwork net = hubbard_network(spinful(2, 2));
  CoverageReport rep = coverage(net, ig);
  CHECK(rep.complete());
  CHECK(rep.swap_depth == 3);
  CHECK(rep.interaction_depth == 6);
}

TEST_CASE("deleting the final layer leaves work uncovered") {
  InteractionGraph ig = interaction_graph(spinless(3, 3));
  SwapNetwork net = hubbard_network(spinless(3, 3));
  net.layers.pop_back();
  CoverageReport rep = coverage(net, ig);
  CHECK_FALSE(rep.complete());
  CHECK_FALSE(rep.missing.empty());
}

TEST_CASE("coverage validates records against the occupants") {
  InteractionGraph ig = interaction_graph(spinless(2, 2));
  SwapNetwork net = hubbard_network(spinless(2, 2));

  SUBCASE("reversed site lists are rejected") {
    for (auto& layer : net.layers) {
      if (layer.kind != Layer::Kind::interact) continue;
      for (auto& rec : layer.records) {
        if (rec.sites.size() == 2) {
          std::swap(rec.sites[0], rec.sites[1]);
          CHECK_THROWS_AS(coverage(net, ig), std::runtime_error);
          return;
        }
      }
    }
    FAIL("no pair record found");
  }

  SUBCASE("mislabeled terms are rejected") {
    for (auto& layer : net.layers) {
      if (layer.kind != Layer::Kind::interact) continue;
      for (auto& rec : layer.records) {
        if (rec.sites.size() == 2) {
          rec.term = TermKind::onsite_pair;
          CHECK_THROWS_AS(coverage(net, ig), std::runtime_error);
          return;
        }
      }
    }
    FAIL("no pair record found");
  }

  SUBCASE("overlapping records in one layer are rejected") {
    for (auto& layer : net.layers) {
      if (layer.kind != Layer::Kind::interact) continue;
      for (auto& rec : layer.records) {
        if (rec.sites.size() == 2) {
          layer.records.push_back(rec);
          CHECK_THROWS_AS(coverage(net, ig), std::runtime_error);
          return;
        }
      }
    }
    FAIL("no pair record found");
  }

  SUBCASE("single-site records must carry the density term") {
    for (auto& layer : net.layers) {
      if (layer.kind != Layer::Kind::interact) continue;
      for (auto& rec : layer.records) {
        if (rec.sites.size() == 1) {
          rec.term = TermKind::hop;
          CHECK_THROWS_AS(coverage(net, ig), std::runtime_error);
          return;
        }
      }
    }
    FAIL("no single-site record found");
  }
}

TEST_CASE("records naming pairs outside the interaction graph are rejected") {
  InteractionGraph ig;
  ig.graph = make_grid({3});
  ig.edges = {{0, 1}};
  ig.edge_terms = {TermKind::hop};

  SwapNetwork net = line_only(3);
  Layer layer;
  layer.kind = Layer::Kind::interact;
  InteractRecord rec;
  rec.at = 1;
  rec.term = TermKind::hop;
  rec.sites = {{1}, {2}};
  layer.records.push_back(rec);
  net.layers.push_back(layer);
  CHECK_THROWS_AS(coverage(net, ig), std::runtime_error);

  net.layers[0].records[0].at = 0;
  net.layers[0].records[0].sites = {{0}, {1}};
  CoverageReport rep = coverage(net, ig);
  CHECK(rep.complete());
}

TEST_CASE("dropping the density records is reported") {
  InteractionGraph ig = interaction_graph(spinless(2, 3));
  SwapNetwork net = hubbard_network(spinless(2, 3));
  for (auto& layer : net.layers) {
    if (layer.kind != Layer::Kind::interact) continue;
    layer.records.erase(
        std::remove_if(layer.records.begin(), layer.records.end(),
                       [](const InteractRecord& r) { return r.sites.size() == 1; }),
        layer.records.end());
  }
  CoverageReport rep = coverage(net, ig);
  CHECK(rep.missing.empty());
  CHECK((int)rep.missing_sites.size() == 6);
  CHECK_FALSE(rep.complete());
}

TEST_CASE("check against bounds") {
  {
    HubbardModel m = spinless(3, 3);
    CoverageReport rep = coverage(hubbard_network(m), interaction_graph(m));
    OptimalityCheck oc = check_against_bounds(rep, hubbard_bounds(m));
    CHECK(oc.swap_optimal);
    CHECK(oc.interaction_optimal);
  }
  {
    HubbardModel m = spinful(3, 3);
    CoverageReport rep = coverage(hubbard_network(m), interaction_graph(m));
    OptimalityCheck oc = check_against_bounds(rep, hubbard_bounds(m));
    CHECK(oc.swap_optimal);
    CHECK_FALSE(oc.interaction_optimal);
  }
  {
    CoverageReport rep =
        coverage(dense_network(4, DenseMode::swap_optimal), dense_interaction_graph(4));
    OptimalityCheck oc = check_against_bounds(rep, dense_bounds(4));
    CHECK(oc.swap_optimal);
    CHECK_FALSE(oc.interaction_optimal);
  }
}

TEST_CASE("exhaustive minimum swap depth on dense graphs") {
  CHECK(min_swap_depth_exhaustive(dense_interaction_graph(3)) == 1);
  CHECK(min_swap_depth_exhaustive(dense_interaction_graph(4)) == 2);
  CHECK(min_swap_depth_exhaustive(dense_interaction_graph(5)) == 3);
}

TEST_CASE("exhaustive minimum swap depth on paths and small grids") {
  for (int n = 2; n <= 5; ++n) {
    CHECK(min_swap_depth_exhaustive(grid_interaction_graph(make_grid({n}))) == 0);
  }
  CHECK(min_swap_depth_exhaustive(grid_interaction_graph(make_grid({2, 2}))) == 1);
  CHECK(min_swap_depth_exhaustive(grid_interaction_graph(make_grid({2, 3}))) == 1);
}

TEST_CASE("parallel and serial searches agree") {
  for (int n = 3; n <= 5; ++n) {
    InteractionGraph ig = dense_interaction_graph(n);
    CHECK(min_swap_depth_exhaustive(ig) == min_swap_depth_exhaustive_serial(ig));
  }
  InteractionGraph grid = grid_interaction_graph(make_grid({2, 3}));
  CHECK(min_swap_depth_exhaustive(grid) == min_swap_depth_exhaustive_serial(grid));
}

TEST_CASE("search depth is never below the counting bound") {
  for (auto dims : std::vector<std::vector<int>>{{2, 2}, {2, 3}}) {
    GridGraph g = make_grid(dims);
    BoundsReport rep = boundary_profile(g, wang_wang_order(g));
    CHECK(min_swap_depth_exhaustive(grid_interaction_graph(g)) >= rep.swap_depth_lb);
  }
}

TEST_CASE("search size limit") {
  CHECK_THROWS_AS(min_swap_depth_exhaustive(dense_interaction_graph(8)), std::invalid_argument);
  CHECK_THROWS_AS(min_swap_depth_exhaustive(dense_interaction_graph(4), 3), std::invalid_argument);
}
