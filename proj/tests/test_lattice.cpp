#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "doctest.h"
#include "fsnet/lattice.hpp"

using namespace fsnet;

TEST_CASE("grid construction sorts dims and counts vertices and edges") {
  GridGraph g = make_grid({2});
  CHECK(g.num_vertices == 2);
  CHECK(g.edges.size() == 1);

  g = make_grid({3, 3});
  CHECK(g.num_vertices == 9);
  CHECK(g.edges.size() == 12);

  g = make_grid({2, 2, 2});
  CHECK(g.num_vertices == 8);
  CHECK(g.edges.size() == 12);

  g = make_grid({5, 2});
  CHECK(g.dims == std::vector<int>{2, 5});
  CHECK(g.axis_perm == std::vector<int>{1, 0});
}

TEST_CASE("grid edges are canonical and unique") {
  GridGraph g = make_grid({2, 3, 3});
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : g.edges) {
    CHECK(a < b);
    CHECK(seen.insert({a, b}).second);
  }
}

TEST_CASE("vertex index round-trips through coordinates") {
  GridGraph g = make_grid({2, 3, 3});
  for (int v = 0; v < g.num_vertices; ++v) CHECK(vertex_index(g, vertex_coord(g, v)) == v);
  CHECK_THROWS_AS(vertex_index(g, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(vertex_index(g, {2, 0, 0}), std::invalid_argument);
}

TEST_CASE("component zero is the fastest index") {
  GridGraph g = make_grid({2, 3});
  CHECK(vertex_coord(g, 0) == Coord{0, 0});
  CHECK(vertex_coord(g, 1) == Coord{1, 0});
  CHECK(vertex_coord(g, 2) == Coord{0, 1});
}

TEST_CASE("neighbor enumeration") {
  GridGraph g = make_grid({3, 3});
  CHECK(neighbors(g, {1, 1}).size() == 4);
  CHECK(neighbors(g, {0, 0}).size() == 2);

  g = make_grid({2, 3, 3});
  CHECK(neighbors(g, {1, 2, 2}).size() == 3);
  auto nb = neighbors(g, {1, 2, 2});
  std::set<Coord> got(nb.begin(), nb.end());
  std::set<Coord> want{{0, 2, 2}, {1, 1, 2}, {1, 2, 1}};
  CHECK(got == want);
}

TEST_CASE("adjacency lists agree with the edge list") {
  GridGraph g = make_grid({2, 2, 3});
  auto adj = adjacency(g);
  size_t half_edges = 0;
  for (const auto& lst : adj) half_edges += lst.size();
  CHECK(half_edges == 2 * g.edges.size());
  for (auto [a, b] : g.edges) {
    CHECK(std::count(adj[a].begin(), adj[a].end(), b) == 1);
    CHECK(std::count(adj[b].begin(), adj[b].end(), a) == 1);
  }
}

TEST_CASE("bad grid dims are rejected") {
  CHECK_THROWS_AS(make_grid({}), std::invalid_argument);
  CHECK_THROWS_AS(make_grid({0, 3}), std::invalid_argument);
  CHECK_THROWS_AS(make_grid({-1}), std::invalid_argument);
}

TEST_CASE("spinless interaction graph lists hops and site terms") {
  HubbardModel m;
  m.m = 3;
  m.n = 3;
  InteractionGraph ig = interaction_graph(m);
  CHECK(ig.edges.size() == 12);
  for (TermKind k : ig.edge_terms) CHECK(k == TermKind::hop);
  CHECK(ig.site_terms.size() == 9);

  m.m = 1;
  m.n = 2;
  ig = interaction_graph(m);
  CHECK(ig.edges.size() == 1);
  CHECK(ig.site_terms.size() == 2);
}

TEST_CASE("spin interaction graph marks the spin-axis edges as onsite pairs") {
  HubbardModel m;
  m.m = 3;
  m.n = 3;
  m.spin = true;
  InteractionGraph ig = interaction_graph(m);
  CHECK(ig.graph.num_vertices == 18);
  CHECK(ig.edges.size() == 33);
  int onsite = 0, hop = 0;
  for (TermKind k : ig.edge_terms) (k == TermKind::onsite_pair ? onsite : hop)++;
  CHECK(onsite == 9);
  CHECK(hop == 24);
  CHECK(ig.site_terms.empty());
}

TEST_CASE("spin onsite pairs are found even when a spatial dim is 1") {
  HubbardModel m;
  m.m = 1;
  m.n = 3;
  m.spin = true;
  InteractionGraph ig = interaction_graph(m);
  int onsite = 0;
  for (size_t i = 0; i < ig.edges.size(); ++i) {
    if (ig.edge_terms[i] != TermKind::onsite_pair) continue;
    ++onsite;
    Coord a = vertex_coord(ig.graph, ig.edges[i].first);
    Coord b = vertex_coord(ig.graph, ig.edges[i].second);
    int diffs = 0;
    for (size_t c = 0; c < a.size(); ++c)
      if (a[c] != b[c]) ++diffs;
    CHECK(diffs == 1);
  }
  CHECK(onsite == 3);
}

TEST_CASE("edge count formulas hold across small lattices") {
  for (int M = 1; M <= 5; ++M)
    for (int N = M; N <= 5; ++N) {
      HubbardModel m;
      m.m = M;
      m.n = N;
      CHECK((int)interaction_graph(m).edges.size() == 2 * M * N - M - N);
      if (M >= 1) {
        m.spin = true;
        CHECK((int)interaction_graph(m).edges.size() == M * N + 2 * (2 * M * N - M - N));
      }
    }
}

TEST_CASE("degree bound tracks the maximum interaction degree") {
  HubbardModel m;
  m.m = 3;
  m.n = 3;
  CHECK(degree_bound(interaction_graph(m)) == 4);
  m.spin = true;
  CHECK(degree_bound(interaction_graph(m)) == 5);
  m.spin = false;
  m.m = 1;
  m.n = 2;
  CHECK(degree_bound(interaction_graph(m)) == 1);
}

TEST_CASE("dense interaction graph has all pairs") {
  InteractionGraph ig = dense_interaction_graph(4);
  CHECK(ig.graph.num_vertices == 4);
  CHECK(ig.edges.size() == 6);
  CHECK(ig.site_terms.empty());
}

TEST_CASE("model validation") {
  HubbardModel m;
  m.m = 3;
  m.n = 2;
  CHECK_THROWS_AS(interaction_graph(m), std::invalid_argument);
  m.m = 0;
  m.n = 2;
  CHECK_THROWS_AS(interaction_graph(m), std::invalid_argument);
}

TEST_CASE("term names round-trip") {
  for (TermKind k : {TermKind::hop, TermKind::onsite_pair, TermKind::number_op})
    CHECK(term_from_name(term_name(k)) == k);
  CHECK_THROWS_AS(term_from_name("bogus"), std::invalid_argument);
}

TEST_CASE("dot output names every vertex") {
  GridGraph g = make_grid({2, 2});
  std::string dot = to_dot(g);
  CHECK(dot.find("graph") != std::string::npos);
  CHECK(dot.find("v3") != std::string::npos);
}
