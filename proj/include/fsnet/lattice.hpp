#pragma once

#include <string>
#include <utility>
#include <vector>

namespace fsnet {

using Coord = std::vector<int>;

struct GridGraph {
  std::vector<int> dims;       // sorted ascending
  std::vector<int> axis_perm;  // stored axis i held input axis axis_perm[i]
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;  // vertex index pairs, first < second
};

GridGraph make_grid(const std::vector<int>& dims);

int vertex_index(const GridGraph& g, const Coord& v);
Coord vertex_coord(const GridGraph& g, int index);
std::vector<Coord> neighbors(const GridGraph& g, const Coord& v);
std::vector<std::vector<int>> adjacency(const GridGraph& g);

enum class TermKind { hop, onsite_pair, number_op };

std::string term_name(TermKind k);
TermKind term_from_name(const std::string& s);

struct HubbardModel {
  int m = 1;
  int n = 1;
  bool spin = false;
  double u = 0.0;
  double t = 1.0;
};

struct InteractionGraph {
  GridGraph graph;
  // required interaction pairs; may be a superset of the grid edges
  std::vector<std::pair<int, int>> edges;
  std::vector<TermKind> edge_terms;  // parallel to edges
  std::vector<int> site_terms;       // vertices carrying a number_op term
};

InteractionGraph interaction_graph(const HubbardModel& m);
InteractionGraph grid_interaction_graph(const GridGraph& g);
InteractionGraph dense_interaction_graph(int n);

int degree_bound(const InteractionGraph& ig);

std::string to_dot(const GridGraph& g);

}  // namespace fsnet
